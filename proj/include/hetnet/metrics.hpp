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

#ifndef HETNET_METRICS_HPP
#define HETNET_METRICS_HPP

#include <span>
#include <utility>
#include <vector>

#include "hetnet/netmodel.hpp"

namespace hetnet {

struct MetricsReport {
    double jain = 0.0;
    double macro_load = 0.0;  // users served by the macro tier
    double pico_load = 0.0;   // users served by the pico tier
    std::vector<double> rate_samples;        // effective rate of every user
    std::vector<double> macro_rate_samples;  // users served by a macro BS
    double avg_rate = 0.0;
    std::vector<double> ee_samples;  // effective rate per consumed watt
    double avg_ee = 0.0;
};

/// Jain's index of the load vector, in [1/N, 1].
/// Throws std::domain_error when the loads sum to zero.
double jain_index(std::span<const int> loads);
double jain_index(std::span<const double> loads);

/// R / (kappa * p + p_circuit). Throws std::domain_error on a zero denominator.
double energy_efficiency(double effective_rate, const BaseStation& bs, double p_w);

/// Empirical CDF of samples evaluated at each grid point.
std::vector<std::pair<double, double>> rate_cdf(std::span<const double> samples, std::span<const double> grid);

MetricsReport summarize(const NetworkScenario& scenario, const Association& x, const PowerVector& p);

}  // namespace hetnet

#endif  // HETNET_METRICS_HPP
