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

#include "hetnet/joint.hpp"

#include <cmath>
#include <stdexcept>

namespace hetnet {

void JointParams::validate() const
{
    if (t3_max < 1)
        throw std::invalid_argument("t3_max must be at least 1");
    if (!(f_tol > 0.0))
        throw std::invalid_argument("f_tol must be positive");
    uamser.validate();
    powerctl.validate();
}

JointResult juapcmser_solve(const NetworkScenario& scenario, const JointParams& params)
{
    params.validate();
    const PowerVector p_max = scenario.max_power();

    JointResult result;
    PowerVector p = p_max;
    std::optional<Association> warm;
    bool have_best = false;

    for (int t3 = 1; t3 <= params.t3_max; ++t3) {
        UamserResult ua = uamser_solve(scenario, p, params.uamser, warm);
        const double f_assoc = sum_effective_rates(scenario, p, ua.x);
        if (!have_best || f_assoc > result.objective) {
            have_best = true;
            result.x = ua.x;
            result.p = p;
            result.objective = f_assoc;
            result.best_iteration = t3;
        }
        PowerCtlResult pc = power_control_solve(ua.x, scenario, params.powerctl, p_max);
        const double f = sum_effective_rates(scenario, pc.p, ua.x);

        result.association_traces.push_back(std::move(ua.trace));
        result.inner_traces.push_back(std::move(pc.trace));
        result.outer_trace.push_back(f);
        result.outer_iterations = t3;

        if (f > result.objective) {
            result.x = ua.x;
            result.p = pc.p;
            result.objective = f;
            result.best_iteration = t3;
        }

        const double previous = result.last_objective;
        result.last_x = ua.x;
        result.last_p = pc.p;
        result.last_objective = f;
        p = std::move(pc.p);
        warm = std::move(ua.x);

        if (t3 > 1 && std::abs(f - previous) <= params.f_tol * std::abs(f)) {
            result.converged = true;
            break;
        }
    }
    return result;
}

}  // namespace hetnet
