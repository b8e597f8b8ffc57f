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

#ifndef HETNET_JOINT_HPP
#define HETNET_JOINT_HPP

#include <vector>

#include "hetnet/powerctl.hpp"
#include "hetnet/uamser.hpp"

namespace hetnet {

struct JointParams {
    int t3_max = 30;
    double f_tol = 1e-6;  // relative change of the sum of effective rates
    UamserParams uamser;
    PowerCtlParams powerctl;

    void validate() const;
};

struct JointResult {
    // Best (p, x) pair seen over the outer iterations, counting both the pair
    // after the association step and the pair after power control.
    Association x;
    PowerVector p;
    double objective = 0.0;
    int best_iteration = 0;

    // Last outer iterate, as the alternation itself would return it.
    Association last_x;
    PowerVector last_p;
    double last_objective = 0.0;

    std::vector<double> outer_trace;
    std::vector<std::vector<PowerIterate>> inner_traces;
    std::vector<std::vector<UamserIterate>> association_traces;
    int outer_iterations = 0;
    bool converged = false;
};

/// Alternates association at the current powers (warm-started from the
/// previous association) with the power fixed point for that association
/// (restarted from p_max), until the objective settles or t3_max.
JointResult juapcmser_solve(const NetworkScenario& scenario, const JointParams& params);

}  // namespace hetnet

#endif  // HETNET_JOINT_HPP
