// Copyright 2026 The hetnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hetnet/metrics.hpp"

#include <algorithm>
#include <stdexcept>

namespace hetnet {

double jain_index(std::span<const double> loads)
{
    double sum = 0.0;
    double sum_sq = 0.0;
    for (double y : loads) {
        sum += y;
        sum_sq += y * y;
    }
    if (loads.empty() || !(sum_sq > 0.0))
        throw std::domain_error("Jain index undefined for all-zero loads");
    return sum * sum / (static_cast<double>(loads.size()) * sum_sq);
}

double jain_index(std::span<const int> loads)
{
    std::vector<double> v(loads.begin(), loads.end());
    return jain_index(std::span<const double>(v));
}

double energy_efficiency(double effective_rate, const BaseStation& bs, double p_w)
{
    if (p_w < 0.0)
        throw std::domain_error("transmit power must be non-negative");
    const double consumed = bs.kappa * p_w + bs.p_circuit_w;
    if (!(consumed > 0.0))
        throw std::domain_error("BS power consumption is zero");
    return effective_rate / consumed;
}

std::vector<std::pair<double, double>> rate_cdf(std::span<const double> samples, std::span<const double> grid)
{
    if (samples.empty())
        throw std::invalid_argument("CDF needs at least one sample");
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::pair<double, double>> out;
    out.reserve(grid.size());
    const double count = static_cast<double>(sorted.size());
    for (double g : grid) {
        const auto below = std::upper_bound(sorted.begin(), sorted.end(), g) - sorted.begin();
        out.emplace_back(g, static_cast<double>(below) / count);
    }
    return out;
}

MetricsReport summarize(const NetworkScenario& scenario, const Association& x, const PowerVector& p)
{
    MetricsReport report;
    const auto y = x.loads();
    report.jain = jain_index(std::span<const int>(y));

    for (std::size_t n = 0; n < scenario.num_bs(); ++n) {
        if (scenario.bs(n).tier == Tier::Macro)
            report.macro_load += y[n];
        else
            report.pico_load += y[n];
    }

    const std::size_t n_users = x.num_users();
    report.rate_samples.reserve(n_users);
    report.ee_samples.reserve(n_users);
    double rate_sum = 0.0;
    double ee_sum = 0.0;
    for (std::size_t k = 0; k < n_users; ++k) {
        const auto n = x.serving(k);
        const BaseStation& bs = scenario.bs(n);
        const double r = effective_rate(achievable_rate(sinr(scenario, p, n, k)), y[n]);
        const double e = energy_efficiency(r, bs, p(static_cast<Eigen::Index>(n)));
        report.rate_samples.push_back(r);
        report.ee_samples.push_back(e);
        if (bs.tier == Tier::Macro)
            report.macro_rate_samples.push_back(r);
        rate_sum += r;
        ee_sum += e;
    }
    report.avg_rate = rate_sum / static_cast<double>(n_users);
    report.avg_ee = ee_sum / static_cast<double>(n_users);
    return report;
}

}  // namespace hetnet
