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

#ifndef HETNET_ORACLE_HPP
#define HETNET_ORACLE_HPP

// Exhaustive references for tiny instances. Rates and objectives are
// recomputed here from the raw gains so that the checks do not share code
// with the solvers.

#include <cstdint>
#include <stdexcept>

#include "hetnet/association.hpp"
#include "hetnet/netmodel.hpp"

namespace hetnet {

struct OracleBudget {
    std::uint64_t max_assoc_combos = 1'000'000;
    int power_grid_points = 64;
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OracleAssociation {
    Association x;
    double objective = 0.0;
};

struct OraclePower {
    PowerVector p;
    double objective = 0.0;
};

/// N^K, saturating at UINT64_MAX.
std::uint64_t association_count(std::size_t num_bs, std::size_t num_users) noexcept;

/// Maximizer of the sum of effective rates over all N^K associations; ties go
/// to the lexicographically smallest serving vector. Throws BudgetExceeded.
OracleAssociation brute_force_association(const NetworkScenario& scenario, const PowerVector& p,
                                          const OracleBudget& budget = {});

/// Same search over a given N x K rate matrix.
OracleAssociation brute_force_association(const Matrix& rates, const OracleBudget& budget = {});

/// Best point of a uniform per-BS grid {p_max * i / G, i = 1..G} for the sum
/// of effective rates with true log2(1 + SINR) rates. Needs N <= 3.
OraclePower grid_search_power(const NetworkScenario& scenario, const Association& x, int grid_points,
                              const OracleBudget& budget = {});

}  // namespace hetnet

#endif  // HETNET_ORACLE_HPP
