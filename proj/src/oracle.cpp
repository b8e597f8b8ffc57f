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

#include "hetnet/oracle.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace hetnet {

namespace {

using Table = std::vector<std::vector<double>>;

// rate[n][k] = log2(1 + p_n g_nk / (sum_{j != n} p_j g_jk + sigma^2))
Table rates_of(const NetworkScenario& s, const std::vector<double>& p)
{
    const std::size_t n_bs = s.num_bs();
    const std::size_t n_users = s.num_users();
    Table r(n_bs, std::vector<double>(n_users));
    for (std::size_t k = 0; k < n_users; ++k) {
        for (std::size_t n = 0; n < n_bs; ++n) {
            double denom = s.noise_w();
            for (std::size_t j = n_bs; j-- > 0;)
                if (j != n)
                    denom += p[j] * s.gains()(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k));
            const double signal = p[n] * s.gains()(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(k));
            r[n][k] = std::log2(1.0 + signal / denom);
        }
    }
    return r;
}

double objective_of(const Table& r, const std::vector<std::size_t>& serving, std::size_t n_bs)
{
    std::vector<double> rate_sum(n_bs, 0.0);
    std::vector<int> count(n_bs, 0);
    for (std::size_t k = 0; k < serving.size(); ++k) {
        rate_sum[serving[k]] += r[serving[k]][k];
        ++count[serving[k]];
    }
    double f = 0.0;
    for (std::size_t n = 0; n < n_bs; ++n)
        if (count[n] > 0)
            f += rate_sum[n] / count[n];
    return f;
}

}  // namespace

std::uint64_t association_count(std::size_t num_bs, std::size_t num_users) noexcept
{
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < num_users; ++k) {
        if (num_bs != 0 && total > std::numeric_limits<std::uint64_t>::max() / num_bs)
            return std::numeric_limits<std::uint64_t>::max();
        total *= num_bs;
    }
    return total;
}

namespace {

OracleAssociation enumerate(const Table& r, std::size_t n_bs, std::size_t n_users, const OracleBudget& budget)
{
    const auto combos = association_count(n_bs, n_users);
    if (combos > budget.max_assoc_combos)
        throw BudgetExceeded("association search needs " + std::to_string(combos) + " evaluations, budget is " +
                             std::to_string(budget.max_assoc_combos));

    // Odometer over serving vectors in lexicographic order, user 0 most significant.
    std::vector<std::size_t> serving(n_users, 0);
    std::vector<std::size_t> best = serving;
    double best_f = -std::numeric_limits<double>::infinity();
    for (std::uint64_t c = 0; c < combos; ++c) {
        const double f = objective_of(r, serving, n_bs);
        if (f > best_f) {
            best_f = f;
            best = serving;
        }
        for (std::size_t k = n_users; k-- > 0;) {
            if (++serving[k] < n_bs)
                break;
            serving[k] = 0;
        }
    }
    return {Association(n_bs, std::move(best)), best_f};
}

}  // namespace

OracleAssociation brute_force_association(const NetworkScenario& scenario, const PowerVector& p,
                                          const OracleBudget& budget)
{
    const auto combos = association_count(scenario.num_bs(), scenario.num_users());
    if (combos > budget.max_assoc_combos)
        throw BudgetExceeded("association search needs " + std::to_string(combos) + " evaluations, budget is " +
                             std::to_string(budget.max_assoc_combos));
    const Table r = rates_of(scenario, std::vector<double>(p.data(), p.data() + p.size()));
    return enumerate(r, scenario.num_bs(), scenario.num_users(), budget);
}

OracleAssociation brute_force_association(const Matrix& rates, const OracleBudget& budget)
{
    const auto n_bs = static_cast<std::size_t>(rates.rows());
    const auto n_users = static_cast<std::size_t>(rates.cols());
    if (n_bs == 0)
        throw std::invalid_argument("rate matrix has no BSs");
    Table r(n_bs, std::vector<double>(n_users));
    for (std::size_t n = 0; n < n_bs; ++n)
        for (std::size_t k = 0; k < n_users; ++k)
            r[n][k] = rates(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(k));
    return enumerate(r, n_bs, n_users, budget);
}

OraclePower grid_search_power(const NetworkScenario& scenario, const Association& x, int grid_points,
                              const OracleBudget& budget)
{
    const std::size_t n_bs = scenario.num_bs();
    if (n_bs > 3)
        throw BudgetExceeded("power grid search is limited to at most 3 BSs");
    if (grid_points < 1)
        throw std::invalid_argument("grid_points must be at least 1");
    const auto combos = association_count(static_cast<std::size_t>(grid_points), n_bs);
    if (combos > budget.max_assoc_combos)
        throw BudgetExceeded("power grid needs " + std::to_string(combos) + " evaluations");

    std::vector<std::size_t> serving(x.serving().begin(), x.serving().end());
    std::vector<int> index(n_bs, 1);
    std::vector<double> p(n_bs);
    std::vector<double> best_p;
    double best_f = -std::numeric_limits<double>::infinity();
    for (std::uint64_t c = 0; c < combos; ++c) {
        for (std::size_t n = 0; n < n_bs; ++n)
            p[n] = scenario.bs(n).p_max_w * index[n] / grid_points;
        const double f = objective_of(rates_of(scenario, p), serving, n_bs);
        if (f > best_f) {
            best_f = f;
            best_p = p;
        }
        for (std::size_t n = n_bs; n-- > 0;) {
            if (++index[n] <= grid_points)
                break;
            index[n] = 1;
        }
    }
    PowerVector out(static_cast<Eigen::Index>(n_bs));
    for (std::size_t n = 0; n < n_bs; ++n)
        out(static_cast<Eigen::Index>(n)) = best_p[n];
    return {out, best_f};
}

}  // namespace hetnet
