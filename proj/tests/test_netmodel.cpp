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

#include <doctest.h>

#include <cmath>

#include "hetnet/netmodel.hpp"
#include "test_util.hpp"

using namespace hetnet;
using doctest::Approx;

TEST_CASE("pathloss")
{
    CHECK(pathloss_db(Tier::Macro, 1.0) == Approx(128.1).epsilon(1e-12));
    CHECK(pathloss_db(Tier::Pico, 0.1) == Approx(104.0).epsilon(1e-12));
    CHECK(pathloss_db(Tier::Macro, 0.5) == Approx(116.78).epsilon(1e-4));
    CHECK(pathloss_db(Tier::Macro, 0.5) == Approx(128.1 + 37.6 * std::log10(0.5)).epsilon(1e-14));
    CHECK_THROWS_AS(pathloss_db(Tier::Macro, 0.0), std::domain_error);
    CHECK_THROWS_AS(pathloss_db(Tier::Pico, -1.0), std::domain_error);
}

TEST_CASE("channel gain")
{
    CHECK(channel_gain(0.0, 0.0) == 1.0);
    CHECK(channel_gain(100.0, 0.0) == Approx(1e-10).epsilon(1e-12));
    CHECK(channel_gain(104.0, 8.0) == Approx(std::pow(10.0, -11.2)).epsilon(1e-12));
}

TEST_CASE("noise power")
{
    CHECK(noise_power(-174.0, 10e6) == Approx(3.981e-14).epsilon(1e-3));
    CHECK(noise_power(-174.0, 1.0) == Approx(3.981e-21).epsilon(1e-3));
    CHECK(noise_power(0.0, 1.0) == Approx(1e-3).epsilon(1e-12));
    CHECK(dbm_to_watt(46.0) == Approx(39.81).epsilon(1e-3));
    CHECK(dbm_to_watt(30.0) == Approx(1.0).epsilon(1e-12));
}

TEST_CASE("sinr and rate")
{
    Matrix g1(1, 1);
    g1 << 0.5;
    const auto s1 = test::scenario_from_gains(g1, 0.25, {2.0});
    PowerVector p1(1);
    p1 << 2.0;
    CHECK(sinr(s1, p1, 0, 0) == Approx(4.0).epsilon(1e-14));

    Matrix g2(2, 1);
    g2 << 1.0, 0.5;
    const auto s2 = test::scenario_from_gains(g2, 0.5, {1.0, 1.0});
    const PowerVector p2 = PowerVector::Ones(2);
    CHECK(sinr(s2, p2, 0, 0) == Approx(1.0).epsilon(1e-14));

    PowerVector p3(2);
    p3 << 0.0, 1.0;
    CHECK(sinr(s2, p3, 0, 0) == 0.0);

    CHECK(achievable_rate(0.0) == 0.0);
    CHECK(achievable_rate(1.0) == Approx(1.0).epsilon(1e-15));
    CHECK(achievable_rate(3.0) == Approx(2.0).epsilon(1e-15));
    CHECK_THROWS(achievable_rate(-0.5));

    const Matrix r = rate_matrix(s2, p2);
    CHECK(r(0, 0) == achievable_rate(sinr(s2, p2, 0, 0)));
    CHECK(r(1, 0) == achievable_rate(sinr(s2, p2, 1, 0)));
}

TEST_CASE("loads and effective rates")
{
    CHECK(loads(Association::all_on(2, 3, 0)) == std::vector<int>{3, 0});
    CHECK(loads(Association(2, {0, 1})) == std::vector<int>{1, 1});
    CHECK(loads(Association(3, {0, 0, 1, 2, 2})) == std::vector<int>{2, 1, 2});

    CHECK(effective_rate(4.0, 2) == 2.0);
    CHECK(effective_rate(2.5, 1) == 2.5);
    CHECK_THROWS_AS(effective_rate(3.0, 0), std::domain_error);

    Matrix r(1, 2);
    r << 2.0, 4.0;
    CHECK(sum_effective_rates(r, Association::all_on(1, 2, 0)) == Approx(3.0).epsilon(1e-15));

    Matrix r2(2, 2);
    r2 << 2.0, 4.0, 7.0, 9.0;
    CHECK(sum_effective_rates(r2, Association::all_on(2, 2, 0)) == Approx(3.0).epsilon(1e-15));
}

TEST_CASE("sum of effective rates at a power vector")
{
    Matrix g1(1, 1);
    g1 << 0.5;
    const auto s1 = test::scenario_from_gains(g1, 0.25, {2.0});
    CHECK(sum_effective_rates(s1, s1.max_power(), Association::all_on(1, 1, 0)) ==
          Approx(std::log2(5.0)).epsilon(1e-15));

    const auto s = test::tiny_scenario(3);
    const Association x(s.num_bs(), std::vector<std::size_t>(s.num_users(), s.num_bs() - 1));
    CHECK(sum_effective_rates(s, s.max_power(), x) == sum_effective_rates(rate_matrix(s, s.max_power()), x));
}

TEST_CASE("association validation")
{
    CHECK_THROWS_AS(Association(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(Association(2, {0, 2}), std::invalid_argument);
    Matrix bad(2, 2);
    bad << 1, 1, 1, 0;
    CHECK_THROWS_AS(Association::from_matrix(bad), std::invalid_argument);
    Matrix good(2, 2);
    good << 1, 0, 0, 1;
    CHECK(Association::from_matrix(good) == Association(2, {0, 1}));
    CHECK(Association::from_matrix(good).to_matrix() == good);
}

TEST_CASE("generator")
{
    ScenarioConfig minimal;
    minimal.macro_sites = 1;
    minimal.picos_per_cell = 0;
    minimal.users_per_cell = 1;
    const auto s = generate_scenario(minimal, 1);
    CHECK(s.num_bs() == 1);
    CHECK(s.num_users() == 1);
    CHECK(s.gains().rows() == 1);
    CHECK(s.gains().cols() == 1);

    const auto sites = hex_sites(7, 1000.0);
    REQUIRE(sites.size() == 7);
    for (std::size_t i = 0; i < sites.size(); ++i) {
        double best = 1e300;
        for (std::size_t j = 0; j < sites.size(); ++j)
            if (i != j)
                best = std::min(best, distance(sites[i], sites[j]));
        CHECK(best == Approx(1000.0).epsilon(1e-12));
    }
    for (std::size_t j = 1; j < sites.size(); ++j)
        CHECK(distance(sites[0], sites[j]) == Approx(1000.0).epsilon(1e-12));

    const ScenarioConfig desk;
    const auto a = generate_scenario(desk, 42);
    const auto b = generate_scenario(desk, 42);
    const auto c = generate_scenario(desk, 43);
    CHECK(a.num_bs() == 35);
    CHECK(a.num_users() == 210);
    CHECK(a.gains() == b.gains());
    CHECK(a.users()[0].position.x == b.users()[0].position.x);
    CHECK(a.users()[0].position.x != c.users()[0].position.x);
    CHECK(a.noise_w() == Approx(3.981e-14).epsilon(1e-3));
    CHECK(a.bs(0).p_max_w == Approx(39.81).epsilon(1e-3));
    CHECK(a.bs(7).tier == Tier::Pico);
    CHECK(a.bs(7).p_max_w == Approx(1.0).epsilon(1e-12));

    // Every user lies inside the hexagon of its cell.
    for (std::size_t k = 0; k < a.num_users(); ++k) {
        const auto& site = sites[k / 30];
        CHECK(distance(a.users()[k].position, site) <= 1000.0 / std::sqrt(3.0) + 1e-9);
    }
}

TEST_CASE("config validation")
{
    ScenarioConfig c;
    c.isd_m = -1.0;
    CHECK_THROWS_WITH_AS(c.validate(), doctest::Contains("isd_m"), std::invalid_argument);
    CHECK_THROWS_AS(generate_scenario(c, 1), std::invalid_argument);
}

TEST_CASE("feasibility")
{
    const auto s = test::tiny_scenario(5);
    CHECK(is_feasible(s, s.max_power()));
    CHECK(is_feasible(s, PowerVector::Zero(static_cast<Eigen::Index>(s.num_bs()))));
    PowerVector over = s.max_power();
    over(0) *= 1.01;
    CHECK_FALSE(is_feasible(s, over));
    CHECK_FALSE(is_feasible(s, PowerVector::Ones(1)));
}
