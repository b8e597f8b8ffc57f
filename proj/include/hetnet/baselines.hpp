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

#ifndef HETNET_BASELINES_HPP
#define HETNET_BASELINES_HPP

#include <vector>

#include "hetnet/association.hpp"
#include "hetnet/netmodel.hpp"

namespace hetnet {

enum class BaselineKind { Mara, Auf };

/// Max achievable rate association: every user takes argmax_n r_nk,
/// ties to the lowest BS index.
Association mara(const Matrix& rates);
Association mara(const NetworkScenario& scenario, const PowerVector& p);

struct AufResult {
    Association x;
    std::vector<double> utility_trace;  // U(x) after each sweep, starting at the MARA value
    int passes = 0;
};

/// U(x) = sum_k log(r_{s(k),k} / y_{s(k)}) over users with some positive rate.
double log_utility(const Matrix& rates, const Association& x);

// Local search on the log-utility of long-term rates, started from MARA.
// A sweep visits users in index order and moves each one to the BS that
// raises U the most (lowest index on ties), if any move raises it at all.
// Users with zero rate to every BS keep their MARA BS and are left out of U.
AufResult auf_search(const Matrix& rates, int max_passes = 50);

Association auf(const NetworkScenario& scenario, const PowerVector& p, int max_passes = 50);

}  // namespace hetnet

#endif  // HETNET_BASELINES_HPP
