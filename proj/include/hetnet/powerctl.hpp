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

#ifndef HETNET_POWERCTL_HPP
#define HETNET_POWERCTL_HPP

// Per-BS power control for a fixed association.
//
// With eta_nk = x_nk / y_n, the high-SINR stationarity condition of
// sum_nk eta_nk log SINR_nk gives the power update
//
//   I_m(p) = clamp( sum_k eta_mk / hbar_m(p), 0, p_max_m ),
//   hbar_m(p) = sum_{n != m} sum_k eta_nk g_mk / (sum_{j != n} p_j g_jk + sigma^2),
//
// which is two-sided scalable, so p <- I(p) converges to a unique fixed point
// from any feasible start.

#include <optional>
#include <vector>

#include "hetnet/association.hpp"
#include "hetnet/netmodel.hpp"

namespace hetnet {

struct PowerCtlParams {
    int t2_max = 100;
    double p_tol = 1e-8;  // max |p' - p| relative to max p

    void validate() const;
};

struct PowerIterate {
    int iter = 0;
    double max_change = 0.0;  // max_m |I_m(p) - p_m| in watts
    double objective = 0.0;   // sum of effective rates at the new p
};

struct PowerCtlResult {
    PowerVector p;
    std::vector<PowerIterate> trace;
    int iterations = 0;
    bool converged = false;
};

/// eta_nk = x_nk / y_n, rows of empty BSs are zero.
Matrix eta(const Association& x);

/// Gamma_nk weighted by g_mk: eta_nk g_mk / (sum_{j != n} p_j g_jk + sigma^2).
double gamma_term(const PowerVector& p, const Matrix& eta, const Matrix& gains, double sigma2, std::size_t n,
                  std::size_t k, std::size_t m);

/// Interference price hbar_m(p).
double hbar(const PowerVector& p, const Matrix& eta, const Matrix& gains, double sigma2, std::size_t m);

/// One application of I(p). A nonempty BS with zero price goes to p_max; an
/// empty BS goes to zero.
PowerVector power_update(const PowerVector& p, const Matrix& eta, const Matrix& gains, double sigma2,
                         const PowerVector& p_max);

/// Iterates I from p0 (default p_max) until max |I(p) - p| <= p_tol * max(p)
/// or t2_max updates; the returned p is the iterate whose residual was checked.
PowerCtlResult power_control_solve(const Association& x, const NetworkScenario& scenario,
                                   const PowerCtlParams& params, std::optional<PowerVector> p0 = std::nullopt);

}  // namespace hetnet

#endif  // HETNET_POWERCTL_HPP
