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

#ifndef HETNET_NETMODEL_IMPL_HPP
#define HETNET_NETMODEL_IMPL_HPP

#include <cmath>
#include <random>

namespace hetnet {

template <class Rng>
Point sample_in_cell(Point site, double isd_m, Rng& rng)
{
    // Pointy-top hexagon: apothem isd/2 towards each of the six neighbours.
    const double apothem = 0.5 * isd_m;
    const double circumradius = isd_m / std::sqrt(3.0);
    std::uniform_real_distribution<double> ux(-apothem, apothem);
    std::uniform_real_distribution<double> uy(-circumradius, circumradius);
    const double s60 = std::sqrt(3.0) / 2.0;
    for (;;) {
        const double dx = ux(rng);
        const double dy = uy(rng);
        if (std::abs(0.5 * dx + s60 * dy) <= apothem && std::abs(-0.5 * dx + s60 * dy) <= apothem)
            return {site.x + dx, site.y + dy};
    }
}

}  // namespace hetnet

#endif  // HETNET_NETMODEL_IMPL_HPP
