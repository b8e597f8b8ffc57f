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
#include <limits>

#include "hetnet/baselines.hpp"
#include "hetnet/oracle.hpp"
#include "hetnet/uamser.hpp"
#include "test_util.hpp"

using namespace hetnet;
using doctest::Approx;

TEST_CASE("init multipliers")
{
    Matrix r(1, 3);
    r << 1.0, 2.0, 3.0;
    const auto m = init_multipliers(Association::all_on(1, 3, 0), r);
    for (int k = 0; k < 3; ++k)
        CHECK(m.mu(0, k) == 0.25);

    Matrix r2(2, 2);
    r2 << 3.0, 6.0, 5.0, 7.0;
    const auto m2 = init_multipliers(Association::all_on(2, 2, 0), r2);
    CHECK(m2.omega(0, 0) == Approx(1.0).epsilon(1e-15));
    CHECK(m2.omega(0, 1) == Approx(2.0).epsilon(1e-15));
    CHECK(m2.mu(1, 0) == 0.0);
    CHECK(m2.mu(1, 1) == 0.0);
    CHECK(m2.omega(1, 0) == 5.0);
    CHECK(m2.omega(1, 1) == 7.0);
}

TEST_CASE("select")
{
    MultiplierState s;
    s.mu = Matrix::Zero(3, 2);
    s.omega.resize(3, 2);
    s.omega << 1.0, 5.0, 3.0, 2.0, 2.0, 4.0;
    CHECK(select_bs(s) == Association(3, {1, 0}));

    // Penalties (1.5, 0.1): utilities (0.5, 0.9).
    MultiplierState t;
    t.omega.resize(2, 2);
    t.omega << 2.0, 3.0, 1.0, 0.2;
    t.mu.resize(2, 2);
    t.mu << 0.0, 0.5, 0.5, 0.0;
    CHECK(penalties(t)(0) == Approx(1.5));
    CHECK(penalties(t)(1) == Approx(0.5));
    t.mu << 0.0, 0.5, 0.1, 0.0;
    CHECK(penalties(t)(1) == Approx(0.1));
    CHECK(select_bs(t).serving(0) == 1);

    MultiplierState tie;
    tie.mu = Matrix::Zero(3, 1);
    tie.omega = Matrix::Constant(3, 1, 2.0);
    CHECK(select_bs(tie).serving(0) == 0);
}

TEST_CASE("residuals")
{
    Matrix r(2, 3);
    r << 1.0, 2.0, 3.0, 0.5, 0.5, 0.5;
    const Association x = Association::all_on(2, 3, 0);
    const auto fresh = init_multipliers(x, r);
    const auto res = residuals(fresh, x, r);
    CHECK(res.max_abs() < 1e-15);
    CHECK(res.chi(1) == 1.0);
    CHECK(res.chi(0) == 0.25);

    MultiplierState s = fresh;
    s.mu(0, 1) = 0.5;
    CHECK(residuals(s, x, r).phi(0, 1) == Approx(1.0).epsilon(1e-15));
}

TEST_CASE("line search")
{
    Matrix r(2, 3);
    r << 1.0, 2.0, 3.0, 0.5, 0.5, 0.5;
    const Association x = Association::all_on(2, 3, 0);
    MultiplierState s = init_multipliers(x, r);
    s.mu *= 1.3;
    s.omega.array() += 0.2;
    const UamserParams params;
    const auto m = line_search(s, x, r, params);
    REQUIRE(m.has_value());
    CHECK(*m == 0);

    MultiplierState flat = s;
    flat.omega(0, 0) = std::numeric_limits<double>::quiet_NaN();
    CHECK_FALSE(line_search(flat, x, r, params).has_value());
}

TEST_CASE("update")
{
    Matrix r(2, 2);
    r << 2.0, 1.0, 1.0, 3.0;
    const Association x(2, {0, 1});
    const UamserParams params;
    const auto fresh = init_multipliers(x, r);
    const auto next = update_multipliers(fresh, x, r, 0, params);
    CHECK((next.omega - fresh.omega).cwiseAbs().maxCoeff() == 0.0);
    CHECK(next.mu.sum() == Approx(1.0).epsilon(1e-15));
    CHECK((next.mu - fresh.mu / fresh.mu.sum()).cwiseAbs().maxCoeff() < 1e-15);

    // An unserved entry lands on zero after a full step.
    MultiplierState s = fresh;
    s.mu(0, 1) = 0.5;
    CHECK(residuals(s, x, r).phi(0, 1) == Approx(1.0).epsilon(1e-15));
}

TEST_CASE("line search")
{
    Matrix r(2, 3);
    r << 1.0, 2.0, 3.0, 0.5, 0.5, 0.5;
    const Association x = Association::all_on(2, 3, 0);
    MultiplierState s = init_multipliers(x, r);
    s.mu *= 1.3;
    s.omega.array() += 0.2;
    const UamserParams params;
    const auto m = line_search(s, x, r, params);
    REQUIRE(m.has_value());
    CHECK(*m == 0);

    MultiplierState flat = s;
    flat.omega(0, 0) = std::numeric_limits<double>::quiet_NaN();
    CHECK_FALSE(line_search(flat, x, r, params).has_value());
}

TEST_CASE("update")
{
    Matrix r(2, 2);
    r << 2.0, 1.0, 1.0, 3.0;
    const Association x(2, {0, 1});
    const UamserParams params;
    const auto fresh = init_multipliers(x, r);
    const auto next = update_multipliers(fresh, x, r, 0, params);
    CHECK((next.omega - fresh.omega).cwiseAbs().maxCoeff() == 0.0);
    CHECK(next.mu.sum() == Approx(1.0).epsilon(1e-15));
    CHECK((next.mu - fresh.mu / fresh.mu.sum()).cwiseAbs().maxCoeff() < 1e-15);

    // One user on BS 0 with mu 0.2: the step lands on 1 / (1 + 1) = 0.5... so
    // use the clamp instead: a large residual pushes an entry negative.
    MultiplierState s = fresh;
    s.mu(1, 0) = 0.2;
    const auto u = update_multipliers(s, x, r, 0, params);
    CHECK(u.mu(1, 0) == 0.0);

    MultiplierState neg = fresh;
    neg.mu(1, 0) = -5.0;
    const auto clamped = update_multipliers(neg, x, r, 0, params);
    CHECK(clamped.mu.minCoeff() >= 0.0);

    MultiplierState broken = fresh;
    broken.mu.fill(std::numeric_limits<double>::quiet_NaN());
    CHECK_THROWS_AS(update_multipliers(broken, x, r, 0, params), DegenerateState);
}

TEST_CASE("update normalization")
{
    // Half step: the unserved 0.2 becomes 0.1, the served row moves from
    // 1/15 to 1/15 / 2 + 1/6 = 0.2 in total, so the sum is 0.5.
    Matrix r(2, 2);
    r << 1.0, 1.0, 1.0, 1.0;
    const Association x = Association::all_on(2, 2, 0);
    MultiplierState s = init_multipliers(x, r);
    s.mu << 1.0 / 15.0, 1.0 / 15.0, 0.2, 0.0;
    const auto u = update_multipliers(s, x, r, 1, UamserParams{});
    CHECK(u.mu(1, 0) == Approx(0.2).epsilon(1e-14));
    CHECK(u.mu(1, 1) == 0.0);
    CHECK(u.mu.sum() == Approx(1.0).epsilon(1e-15));
}

TEST_CASE("solve on one BS")
{
    Matrix r(1, 4);
    r << 1.0, 2.0, 3.0, 6.0;
    const auto res = uamser_solve(r, UamserParams{});
    CHECK(res.x == Association::all_on(1, 4, 0));
    CHECK(res.sum_rate == Approx(3.0).epsilon(1e-15));
}

TEST_CASE("solve splits two users when splitting pays")
{
    // BS 0 strong for both users, BS 1 moderate for user 1 only:
    //   both on 0: (5 + 3) / 2 = 4;  user 1 on BS 1: 5 + 2.5 = 7.5.
    Matrix r(2, 2);
    r << 5.0, 3.0, 0.1, 2.5;
    const auto res = uamser_solve(r, UamserParams{});
    CHECK(res.x == Association(2, {0, 1}));
    CHECK(res.sum_rate == Approx(7.5).epsilon(1e-15));
    CHECK(res.reason == StopReason::ResidualZero);
}

TEST_CASE("a cycle stop returns the state reached at the cap")
{
    Matrix r(2, 2);
    r << 4.0, 4.0, 0.01, 3.0;
    for (int cap : {7, 8, 200}) {
        UamserParams params;
        params.t1_max = cap;
        const auto res = uamser_solve(r, params);
        REQUIRE(res.reason == StopReason::Cycle);
        CHECK(res.cycle_length == 2);
        CHECK_FALSE(res.converged);

        MultiplierState state = init_multipliers(mara(r), r);
        Association x;
        for (int t = 1; t <= cap; ++t) {
            x = select_bs(state);
            state = update_multipliers(state, x, r, *line_search(state, x, r, params), params);
        }
        CHECK(res.x == x);
        CHECK((res.multipliers.mu - state.mu).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((res.multipliers.omega - state.omega).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("tiny instances")
{
    int residual_zero = 0;
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const auto s = test::tiny_scenario(seed);
        const auto p = s.max_power();
        const auto res = uamser_solve(s, p, UamserParams{});
        const auto best = brute_force_association(s, p);
        CHECK(res.sum_rate <= best.objective * (1.0 + 1e-12));
        CHECK(res.sum_rate == Approx(sum_effective_rates(s, p, res.x)).epsilon(1e-14));
        CHECK(res.iterations >= 1);
        CHECK(res.trace.size() == static_cast<std::size_t>(res.iterations));

        // Steps are only taken from a nonzero residual.
        for (std::size_t i = 0; i + 1 < res.trace.size(); ++i)
            if (res.trace[i].step_exponent >= 0)
                CHECK(res.trace[i].residual_norm > 0.0);

        if (res.reason == StopReason::ResidualZero) {
            ++residual_zero;
            const auto closed = init_multipliers(res.x, rate_matrix(s, p));
            CHECK((closed.mu - res.multipliers.mu).cwiseAbs().maxCoeff() <= 1e-8);
            CHECK((closed.omega - res.multipliers.omega).cwiseAbs().maxCoeff() <= 1e-8);
        }
    }
    CHECK(residual_zero > 0);
}

TEST_CASE("warm start and default start")
{
    const auto s = test::tiny_scenario(11);
    const auto p = s.max_power();
    const auto a = uamser_solve(s, p, UamserParams{});
    const auto b = uamser_solve(s, p, UamserParams{}, mara(s, p));
    CHECK(a.x == b.x);
    CHECK(a.objective_trace == b.objective_trace);
    CHECK_THROWS_AS(uamser_solve(s, p, UamserParams{}, Association::all_on(s.num_bs() + 1, s.num_users(), 0)),
                    std::invalid_argument);
    UamserParams bad;
    bad.xi = 1.0;
    CHECK_THROWS_AS(uamser_solve(s, p, bad), std::invalid_argument);
}
