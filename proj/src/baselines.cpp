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

#include "hetnet/baselines.hpp"

#include <cmath>
#include <stdexcept>

namespace hetnet {

namespace {

double ylogy(int y)
{
    return y > 0 ? y * std::log(static_cast<double>(y)) : 0.0;
}

}  // namespace

Association mara(const Matrix& rates)
{
    if (rates.rows() == 0)
        throw std::invalid_argument("rate matrix has no BS rows");
    std::vector<std::size_t> serving(static_cast<std::size_t>(rates.cols()), 0);
    for (Eigen::Index k = 0; k < rates.cols(); ++k) {
        Eigen::Index best = 0;
        for (Eigen::Index n = 1; n < rates.rows(); ++n)
            if (rates(n, k) > rates(best, k))
                best = n;
        serving[static_cast<std::size_t>(k)] = static_cast<std::size_t>(best);
    }
    return Association(static_cast<std::size_t>(rates.rows()), std::move(serving));
}

Association mara(const NetworkScenario& scenario, const PowerVector& p)
{
    return mara(rate_matrix(scenario, p));
}

double log_utility(const Matrix& rates, const Association& x)
{
    const auto y = x.loads();
    double u = 0.0;
    for (std::size_t k = 0; k < x.num_users(); ++k) {
        const auto kk = static_cast<Eigen::Index>(k);
        if (!(rates.col(kk).maxCoeff() > 0.0))
            continue;
        const auto n = x.serving(k);
        u += std::log(rates(static_cast<Eigen::Index>(n), kk)) - std::log(static_cast<double>(y[n]));
    }
    return u;
}

AufResult auf_search(const Matrix& rates, int max_passes)
{
    const auto n_bs = rates.rows();
    const auto n_users = rates.cols();

    AufResult result;
    result.x = mara(rates);
    std::vector<std::size_t> serving(result.x.serving().begin(), result.x.serving().end());
    std::vector<int> y = result.x.loads();
    result.utility_trace.push_back(log_utility(rates, result.x));

    // U = sum_k log r_{s(k),k} - sum_n y_n log y_n, so a move a -> b changes it by
    // log r_bk - log r_ak - [f(y_a - 1) + f(y_b + 1) - f(y_a) - f(y_b)], f(y) = y log y.
    for (int pass = 0; pass < max_passes; ++pass) {
        bool moved = false;
        for (Eigen::Index k = 0; k < n_users; ++k) {
            if (!(rates.col(k).maxCoeff() > 0.0))
                continue;
            const auto a = static_cast<Eigen::Index>(serving[static_cast<std::size_t>(k)]);
            const double leave = ylogy(y[a] - 1) - ylogy(y[a]);
            const double log_ra = std::log(rates(a, k));
            Eigen::Index best = a;
            double best_gain = 1e-12;
            for (Eigen::Index b = 0; b < n_bs; ++b) {
                if (b == a || !(rates(b, k) > 0.0))
                    continue;
                const double gain =
                    std::log(rates(b, k)) - log_ra - (leave + ylogy(y[b] + 1) - ylogy(y[b]));
                if (gain > best_gain) {
                    best_gain = gain;
                    best = b;
                }
            }
            if (best != a) {
                --y[a];
                ++y[best];
                serving[static_cast<std::size_t>(k)] = static_cast<std::size_t>(best);
                moved = true;
            }
        }
        result.passes = pass + 1;
        result.x = Association(static_cast<std::size_t>(n_bs), serving);
        result.utility_trace.push_back(log_utility(rates, result.x));
        if (!moved)
            break;
    }
    return result;
}

Association auf(const NetworkScenario& scenario, const PowerVector& p, int max_passes)
{
    return auf_search(rate_matrix(scenario, p), max_passes).x;
}

}  // namespace hetnet
