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

#ifndef HETNET_UAMSER_HPP
#define HETNET_UAMSER_HPP

// Association that maximizes the sum of effective rates.
//
// The sum-of-ratios problem is replaced by a parameterized linear one: with
// multipliers mu and auxiliary rates omega, every user picks
//   argmax_n  omega_nk - sum_i mu_ni * omega_ni
// and (mu, omega) are driven by a damped Newton iteration towards the fixed
// point mu_nk = x_nk / (1 + y_n), omega_nk = r_nk / (1 + y_n).

#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "hetnet/association.hpp"
#include "hetnet/netmodel.hpp"

namespace hetnet {

struct MultiplierState {
    Matrix mu;     // N x K Lagrange multipliers
    Matrix omega;  // N x K auxiliary rates (bits/s/Hz)
};

enum class TieBreak { LowestIndex };

struct UamserParams {
    double xi = 0.5;             // backtracking base
    double eps = 1e-3;           // sufficient-decrease constant
    int t1_max = 200;
    double residual_tol = 1e-9;  // on max |phi|, |varphi|
    double objective_tol = 1e-9; // relative change of F(x)
    TieBreak tie_break = TieBreak::LowestIndex;

    void validate() const;
};

// Cycle: the selected association and the multipliers it was selected under
// repeat an earlier iterate, so the remaining iterations would only replay the
// same orbit up to the cap.
enum class StopReason { ResidualZero, ObjectiveStagnant, Cycle, CapHit, LineSearchStall };

std::string_view to_string(StopReason reason) noexcept;

struct UamserIterate {
    int iter = 0;
    double objective = 0.0;      // parameterized objective F(x) under (mu, omega)
    double sum_rate = 0.0;       // sum of effective rates of x
    double residual_norm = 0.0;  // squared norm of (phi, varphi)
    int step_exponent = -1;      // accepted m, -1 when no step was taken
};

// x and multipliers are the last iterate. On a Cycle stop they are the orbit
// member the run would have reached at t1_max.
struct UamserResult {
    Association x;
    MultiplierState multipliers;
    double objective = 0.0;
    double sum_rate = 0.0;
    std::vector<double> objective_trace;
    std::vector<UamserIterate> trace;
    int iterations = 0;
    bool converged = false;
    StopReason reason = StopReason::CapHit;
    int cycle_length = 0;
};

/// Thrown when the multiplier normalization would divide by zero.
class DegenerateState : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Residuals {
    Matrix phi;     // mu_nk (1 + y_n) - x_nk
    Matrix varphi;  // omega_nk (1 + y_n) - r_nk
    Vector chi;     // 1 / (1 + y_n)

    double squared_norm() const { return phi.squaredNorm() + varphi.squaredNorm(); }
    double max_abs() const;
};

inline constexpr int kLineSearchCap = 64;

MultiplierState init_multipliers(const Association& x0, const Matrix& rates);

/// Per-BS penalty sum_i mu_ni * omega_ni.
Vector penalties(const MultiplierState& multipliers);

Association select_bs(const MultiplierState& multipliers, TieBreak tie_break = TieBreak::LowestIndex);

/// Parameterized objective sum_nk x_nk (omega_nk - penalty_n).
double parameterized_objective(const MultiplierState& multipliers, const Association& x);

Residuals residuals(const MultiplierState& multipliers, const Association& x, const Matrix& rates);

/// Smallest m such that the damped step with length xi^m satisfies the
/// sufficient-decrease test. std::nullopt when no m up to kLineSearchCap works.
std::optional<int> line_search(const MultiplierState& multipliers, const Association& x, const Matrix& rates,
                               const UamserParams& params);

/// Damped Newton step, clamp at zero, then normalize mu to unit sum.
/// Throws DegenerateState when the clamped mu sums to zero.
MultiplierState update_multipliers(const MultiplierState& multipliers, const Association& x, const Matrix& rates,
                                   int m, const UamserParams& params);

UamserResult uamser_solve(const Matrix& rates, const UamserParams& params,
                          std::optional<Association> x0 = std::nullopt);

/// Default x0 is the max-rate association at power p.
UamserResult uamser_solve(const NetworkScenario& scenario, const PowerVector& p, const UamserParams& params,
                          std::optional<Association> x0 = std::nullopt);

}  // namespace hetnet

#endif  // HETNET_UAMSER_HPP
