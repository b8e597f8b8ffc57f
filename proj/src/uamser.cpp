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

#include "hetnet/uamser.hpp"

#include <algorithm>
#include <cmath>

#include "hetnet/baselines.hpp"

namespace hetnet {

void UamserParams::validate() const
{
    if (!(xi > 0.0 && xi < 1.0))
        throw std::invalid_argument("xi must lie in (0, 1)");
    if (!(eps > 0.0 && eps < 1.0))
        throw std::invalid_argument("eps must lie in (0, 1)");
    if (t1_max < 1)
        throw std::invalid_argument("t1_max must be at least 1");
    if (!(residual_tol >= 0.0) || !(objective_tol >= 0.0))
        throw std::invalid_argument("tolerances must be non-negative");
}

std::string_view to_string(StopReason reason) noexcept
{
    switch (reason) {
    case StopReason::ResidualZero: return "residual-zero";
    case StopReason::ObjectiveStagnant: return "objective-stagnant";
    case StopReason::Cycle: return "cycle";
    case StopReason::CapHit: return "cap-hit";
    case StopReason::LineSearchStall: return "line-search-stall";
    }
    return "unknown";
}

double Residuals::max_abs() const
{
    double m = 0.0;
    if (phi.size() > 0)
        m = std::max(m, phi.cwiseAbs().maxCoeff());
    if (varphi.size() > 0)
        m = std::max(m, varphi.cwiseAbs().maxCoeff());
    return m;
}

namespace {

// 1 + y_n for every BS.
Vector load_denominators(const Association& x)
{
    const auto y = x.loads();
    Vector d(static_cast<Eigen::Index>(y.size()));
    for (std::size_t n = 0; n < y.size(); ++n)
        d(static_cast<Eigen::Index>(n)) = 1.0 + y[n];
    return d;
}

double damped_residual_norm(const MultiplierState& s, const Residuals& res, const Matrix& x_mat,
                            const Vector& denom, const Matrix& rates, double step)
{
    const Matrix mu_c = s.mu - step * (res.chi.asDiagonal() * res.phi);
    const Matrix omega_c = s.omega - step * (res.chi.asDiagonal() * res.varphi);
    const Matrix phi_c = denom.asDiagonal() * mu_c - x_mat;
    const Matrix varphi_c = denom.asDiagonal() * omega_c - rates;
    return phi_c.squaredNorm() + varphi_c.squaredNorm();
}

bool same_state(const MultiplierState& a, const MultiplierState& b)
{
    constexpr double tol = 1e-12;
    const double scale_mu = std::max(1.0, a.mu.cwiseAbs().maxCoeff());
    const double scale_omega = std::max(1.0, a.omega.cwiseAbs().maxCoeff());
    return (a.mu - b.mu).cwiseAbs().maxCoeff() <= tol * scale_mu &&
           (a.omega - b.omega).cwiseAbs().maxCoeff() <= tol * scale_omega;
}

// Index of an earlier iterate with the same association and multipliers.
std::optional<std::size_t> find_repeat(const std::vector<Association>& selected,
                                       const std::vector<MultiplierState>& states, const Association& x,
                                       const MultiplierState& state)
{
    for (std::size_t i = selected.size(); i-- > 0;)
        if (selected[i] == x && same_state(states[i], state))
            return i;
    return std::nullopt;
}

}  // namespace

MultiplierState init_multipliers(const Association& x0, const Matrix& rates)
{
    const Vector denom = load_denominators(x0);
    const Vector inv = denom.cwiseInverse();
    return {inv.asDiagonal() * x0.to_matrix(), inv.asDiagonal() * rates};
}

Vector penalties(const MultiplierState& multipliers)
{
    return multipliers.mu.cwiseProduct(multipliers.omega).rowwise().sum();
}

Association select_bs(const MultiplierState& multipliers, TieBreak /*tie_break*/)
{
    const Vector penalty = penalties(multipliers);
    const auto n_bs = multipliers.omega.rows();
    const auto n_users = multipliers.omega.cols();
    std::vector<std::size_t> serving(static_cast<std::size_t>(n_users), 0);
    for (Eigen::Index k = 0; k < n_users; ++k) {
        Eigen::Index best = 0;
        double best_utility = multipliers.omega(0, k) - penalty(0);
        for (Eigen::Index n = 1; n < n_bs; ++n) {
            const double u = multipliers.omega(n, k) - penalty(n);
            if (u > best_utility) {  // strict: ties keep the lowest index
                best_utility = u;
                best = n;
            }
        }
        serving[static_cast<std::size_t>(k)] = static_cast<std::size_t>(best);
    }
    return Association(static_cast<std::size_t>(n_bs), std::move(serving));
}

double parameterized_objective(const MultiplierState& multipliers, const Association& x)
{
    const Vector penalty = penalties(multipliers);
    double f = 0.0;
    for (std::size_t k = 0; k < x.num_users(); ++k) {
        const auto n = static_cast<Eigen::Index>(x.serving(k));
        f += multipliers.omega(n, static_cast<Eigen::Index>(k)) - penalty(n);
    }
    return f;
}

Residuals residuals(const MultiplierState& multipliers, const Association& x, const Matrix& rates)
{
    const Vector denom = load_denominators(x);
    Residuals res;
    res.phi = denom.asDiagonal() * multipliers.mu - x.to_matrix();
    res.varphi = denom.asDiagonal() * multipliers.omega - rates;
    res.chi = denom.cwiseInverse();
    return res;
}

std::optional<int> line_search(const MultiplierState& multipliers, const Association& x, const Matrix& rates,
                               const UamserParams& params)
{
    const Residuals res = residuals(multipliers, x, rates);
    const double current = res.squared_norm();
    const Vector denom = load_denominators(x);
    const Matrix x_mat = x.to_matrix();
    double step = 1.0;
    for (int m = 0; m <= kLineSearchCap; ++m) {
        const double trial = damped_residual_norm(multipliers, res, x_mat, denom, rates, step);
        if (trial <= (1.0 - params.eps * step) * current)
            return m;
        step *= params.xi;
    }
    return std::nullopt;
}

MultiplierState update_multipliers(const MultiplierState& multipliers, const Association& x, const Matrix& rates,
                                   int m, const UamserParams& params)
{
    const Residuals res = residuals(multipliers, x, rates);
    const double step = std::pow(params.xi, m);
    MultiplierState next;
    next.mu = (multipliers.mu - step * (res.chi.asDiagonal() * res.phi)).cwiseMax(0.0);
    next.omega = (multipliers.omega - step * (res.chi.asDiagonal() * res.varphi)).cwiseMax(0.0);
    const double total = next.mu.sum();
    if (!(total > 0.0) || !std::isfinite(total))
        throw DegenerateState("multiplier sum is zero after update");
    next.mu /= total;
    return next;
}

UamserResult uamser_solve(const Matrix& rates, const UamserParams& params, std::optional<Association> x0)
{
    params.validate();
    const auto n_bs = static_cast<std::size_t>(rates.rows());
    if (n_bs == 0 || rates.cols() == 0)
        throw std::invalid_argument("rate matrix must be non-empty");

    Association x = x0 ? std::move(*x0) : mara(rates);
    if (x.num_bs() != n_bs || x.num_users() != static_cast<std::size_t>(rates.cols()))
        throw std::invalid_argument("initial association does not match the rate matrix");

    UamserResult result;
    MultiplierState state = init_multipliers(x, rates);
    double previous_f = 0.0;

    // Selected association and the multipliers it was selected under, per iteration.
    std::vector<Association> selected;
    std::vector<MultiplierState> states;

    for (int t1 = 1; t1 <= params.t1_max; ++t1) {
        x = select_bs(state, params.tie_break);
        const Residuals res = residuals(state, x, rates);

        UamserIterate it;
        it.iter = t1;
        it.objective = parameterized_objective(state, x);
        it.sum_rate = sum_effective_rates(rates, x);
        it.residual_norm = res.squared_norm();
        result.trace.push_back(it);
        result.objective_trace.push_back(it.objective);
        result.iterations = t1;

        if (res.max_abs() <= params.residual_tol) {
            result.converged = true;
            result.reason = StopReason::ResidualZero;
            break;
        }
        if (t1 > 1 && std::abs(it.objective - previous_f) <=
                          params.objective_tol * std::max(std::abs(it.objective), std::abs(previous_f))) {
            result.converged = true;
            result.reason = StopReason::ObjectiveStagnant;
            break;
        }
        previous_f = it.objective;

        if (const auto repeat = find_repeat(selected, states, x, state)) {
            // The remaining iterations replay selected[*repeat ..]; jump to the
            // state the run would hold after iteration t1_max.
            const std::size_t length = selected.size() - *repeat;
            const std::size_t at = *repeat + static_cast<std::size_t>(params.t1_max - t1) % length;
            result.reason = StopReason::Cycle;
            result.cycle_length = static_cast<int>(length);
            result.objective = result.trace[at].objective;
            result.sum_rate = result.trace[at].sum_rate;
            result.x = std::move(selected[at]);
            result.multipliers = at + 1 < states.size() ? std::move(states[at + 1]) : std::move(state);
            return result;
        }
        selected.push_back(x);
        states.push_back(state);

        const auto m = line_search(state, x, rates, params);
        if (!m) {
            result.converged = false;
            result.reason = StopReason::LineSearchStall;
            break;
        }
        result.trace.back().step_exponent = *m;
        state = update_multipliers(state, x, rates, *m, params);
    }

    result.objective = result.objective_trace.back();
    result.sum_rate = sum_effective_rates(rates, x);
    result.x = std::move(x);
    result.multipliers = std::move(state);
    return result;
}

UamserResult uamser_solve(const NetworkScenario& scenario, const PowerVector& p, const UamserParams& params,
                          std::optional<Association> x0)
{
    return uamser_solve(rate_matrix(scenario, p), params, std::move(x0));
}

}  // namespace hetnet
