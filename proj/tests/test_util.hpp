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

#ifndef HETNET_TEST_UTIL_HPP
#define HETNET_TEST_UTIL_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "hetnet/netmodel.hpp"

namespace hetnet::test {

/// Scenario with hand-set gains; every BS is a macro with the given p_max.
inline NetworkScenario scenario_from_gains(const Matrix& gains, double noise_w, const std::vector<double>& p_max,
                                           std::vector<Tier> tiers = {})
{
    std::vector<BaseStation> bss;
    for (std::size_t n = 0; n < static_cast<std::size_t>(gains.rows()); ++n) {
        BaseStation bs;
        bs.id = n;
        bs.tier = tiers.empty() ? Tier::Macro : tiers[n];
        bs.p_max_w = p_max[n];
        bs.kappa = bs.tier == Tier::Macro ? 4.0 : 2.0;
        bs.p_circuit_w = bs.tier == Tier::Macro ? 10.0 : 0.1;
        bss.push_back(bs);
    }
    std::vector<User> users(static_cast<std::size_t>(gains.cols()));
    for (std::size_t k = 0; k < users.size(); ++k)
        users[k].id = k;
    return NetworkScenario(std::move(bss), std::move(users), gains, noise_w, 1.0);
}

/// Single-macro-cell drop with N in {2, 3} and K in {3..6}, drawn from seed.
inline NetworkScenario tiny_scenario(std::uint64_t seed)
{
    std::mt19937_64 rng(seed * 7919 + 17);
    ScenarioConfig config;
    config.macro_sites = 1;
    config.picos_per_cell = std::uniform_int_distribution<int>(1, 2)(rng);
    config.users_per_cell = std::uniform_int_distribution<int>(3, 6)(rng);
    return generate_scenario(config, seed);
}

}  // namespace hetnet::test

#endif  // HETNET_TEST_UTIL_HPP
