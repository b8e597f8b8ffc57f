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

#include "hetnet/powerctl.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hetnet {

void PowerCtlParams::validate() const
{
    if (t2_max < 1)
        throw std::invalid_argument("t2_max must be at least 1");
    if (!(p_tol > 0.0))
        throw std::invalid_argument("p_tol must be positive");
}

Matrix eta(const Association& x)
{
    const auto y = x.loads();
    Matrix e = Matrix::Zero(static_cast<Eigen::Index>(x.num_bs()), static_cast<Eigen::Index>(x.num_users()));
    for (std::size_t k = 0; k < x.num_users(); ++k) {
        const auto n = x.serving(k);
        e(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(k)) = 1.0 / y[n];
    }
    return e;
}

namespace {

// sum_{j != n} p_j g_jk + sigma^2
double interference_plus_noise(const PowerVector& p, const Matrix& gains, double sigma2, Eigen::Index n,
                               Eigen::Index k)
{
    double acc = 0.0;
    for (Eigen::Index j = 0; j < gains.rows(); ++j)
        if (j != n)
            acc += p(j) * gains(j, k);
    return acc + sigma2;
}

}  // namespace

double gamma_term(const PowerVector& p, const Matrix& eta, const Matrix& gains, double sigma2, std::size_t n,
                  std::size_t k, std::size_t m)
{
    const auto nn = static_cast<Eigen::Index>(n);
    const auto kk = static_cast<Eigen::Index>(k);
    const double e = eta(nn, kk);
    if (e == 0.0)
        return 0.0;
    return e * gains(static_cast<Eigen::Index>(m), kk) / interference_plus_noise(p, gains, sigma2, nn, kk);
}

double hbar(const PowerVector& p, const Matrix& eta, const Matrix& gains, double sigma2, std::size_t m)
{
    double acc = 0.0;
    for (std::size_t n = 0; n < static_cast<std::size_t>(eta.rows()); ++n) {
        if (n == m)
            continue;
        for (std::size_t k = 0; k < static_cast<std::size_t>(eta.cols()); ++k)
            acc += gamma_term(p, eta, gains, sigma2, n, k, m);
    }
    return acc;
}

PowerVector power_update(const PowerVector& p, const Matrix& eta, const Matrix& gains, double sigma2,
                         const PowerVector& p_max)
{
    const auto n_bs = eta.rows();
    const auto n_users = eta.cols();

    // hbar_m = sum_{(n,k): eta_nk > 0, n != m} g_mk * eta_nk / D_nk, accumulated in
    // one pass over the nonzero eta entries.
    Vector price = Vector::Zero(n_bs);
    for (Eigen::Index k = 0; k < n_users; ++k) {
        for (Eigen::Index n = 0; n < n_bs; ++n) {
            const double e = eta(n, k);
            if (e == 0.0)
                continue;
            const double w = e / interference_plus_noise(p, gains, sigma2, n, k);
            for (Eigen::Index m = 0; m < n_bs; ++m)
                if (m != n)
                    price(m) += w * gains(m, k);
        }
    }

    const Vector demand = eta.rowwise().sum();
    PowerVector next(n_bs);
    for (Eigen::Index m = 0; m < n_bs; ++m) {
        if (demand(m) == 0.0)
            next(m) = 0.0;
        else if (price(m) == 0.0)
            next(m) = p_max(m);
        else
            next(m) = std::clamp(demand(m) / price(m), 0.0, p_max(m));
    }
    return next;
}

PowerCtlResult power_control_solve(const Association& x, const NetworkScenario& scenario,
                                   const PowerCtlParams& params, std::optional<PowerVector> p0)
{
    params.validate();
    if (x.num_bs() != scenario.num_bs() || x.num_users() != scenario.num_users())
        throw std::invalid_argument("association does not match the scenario");

    const PowerVector p_max = scenario.max_power();
    PowerVector p = p0 ? std::move(*p0) : p_max;
    if (!is_feasible(scenario, p))
        throw std::invalid_argument("initial power vector is infeasible");

    const Matrix e = eta(x);
    PowerCtlResult result;
    for (int t2 = 1; t2 <= params.t2_max; ++t2) {
        PowerVector next = power_update(p, e, scenario.gains(), scenario.noise_w(), p_max);
        const double change = (next - p).cwiseAbs().maxCoeff();
        p = std::move(next);
        result.trace.push_back({t2, change, sum_effective_rates(scenario, p, x)});
        result.iterations = t2;
        if (change <= params.p_tol * p.maxCoeff()) {
            result.converged = true;
            break;
        }
    }
    result.p = std::move(p);
    return result;
}

}  // namespace hetnet
