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

#ifndef HETNET_NETMODEL_HPP
#define HETNET_NETMODEL_HPP

#include <cstdint>
#include <string_view>
#include <vector>

#include "hetnet/association.hpp"

namespace hetnet {

/// Transmit powers in watts, one entry per BS.
using PowerVector = Eigen::VectorXd;

enum class Tier { Macro, Pico };

std::string_view to_string(Tier tier) noexcept;

struct Point {
    double x = 0.0;  // meters
    double y = 0.0;  // meters
};

double distance(Point a, Point b) noexcept;

struct BaseStation {
    std::size_t id = 0;
    Tier tier = Tier::Macro;
    Point position;
    double p_max_w = 0.0;      // maximal transmit power
    double kappa = 1.0;        // power-amplifier coefficient
    double p_circuit_w = 0.0;  // circuit power
};

struct User {
    std::size_t id = 0;
    Point position;
};

/// Deployment and radio parameters of a two-tier network drop.
struct ScenarioConfig {
    int macro_sites = 7;
    int picos_per_cell = 4;
    int users_per_cell = 30;
    double isd_m = 1000.0;
    double macro_power_dbm = 46.0;
    double pico_power_dbm = 30.0;
    double macro_circuit_w = 10.0;
    double pico_circuit_w = 0.1;
    double macro_kappa = 4.0;
    double pico_kappa = 2.0;
    double noise_psd_dbm_hz = -174.0;
    double bandwidth_hz = 10e6;
    double shadowing_db = 8.0;
    double min_distance_m = 10.0;

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;
};

/// Immutable network drop: BSs, users, N x K linear channel gains and the
/// receiver noise power shared by all links.
class NetworkScenario {
public:
    /// Throws std::invalid_argument when the gain matrix shape does not match,
    /// any gain is non-positive or non-finite, or noise is non-positive.
    NetworkScenario(std::vector<BaseStation> bss, std::vector<User> users, Matrix gains,
                    double noise_w, double bandwidth_hz, std::uint64_t seed = 0);

    std::size_t num_bs() const noexcept { return bss_.size(); }
    std::size_t num_users() const noexcept { return users_.size(); }

    const std::vector<BaseStation>& bss() const noexcept { return bss_; }
    const std::vector<User>& users() const noexcept { return users_; }
    const BaseStation& bs(std::size_t n) const { return bss_.at(n); }
    const Matrix& gains() const noexcept { return gains_; }
    double gain(std::size_t n, std::size_t k) const
    {
        return gains_(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(k));
    }
    double noise_w() const noexcept { return noise_w_; }
    double bandwidth_hz() const noexcept { return bandwidth_hz_; }
    std::uint64_t seed() const noexcept { return seed_; }

    PowerVector max_power() const;

private:
    std::vector<BaseStation> bss_;
    std::vector<User> users_;
    Matrix gains_;
    double noise_w_;
    double bandwidth_hz_;
    std::uint64_t seed_;
};

double dbm_to_watt(double dbm) noexcept;

/// Macro sites on a hexagonal lattice (center first, then rings), spacing isd_m.
std::vector<Point> hex_sites(int count, double isd_m);

/// Uniform point inside the hexagonal cell of a site with the given
/// inter-site distance. The cell is the Voronoi region of the lattice.
template <class Rng>
Point sample_in_cell(Point site, double isd_m, Rng& rng);

/// Builds a drop: macros on the hex grid, picos and users uniform inside each
/// macrocell, one shadowing draw per link. Pure function of (config, seed).
NetworkScenario generate_scenario(const ScenarioConfig& config, std::uint64_t seed);

/// 3GPP-style pathloss with distance in kilometers.
/// Throws std::domain_error for non-positive distance.
double pathloss_db(Tier tier, double distance_km);

double channel_gain(double pathloss_db, double shadow_db) noexcept;

/// Noise power in watts for a PSD in dBm/Hz over the given bandwidth.
double noise_power(double psd_dbm_hz, double bandwidth_hz);

double sinr(const NetworkScenario& scenario, const PowerVector& p, std::size_t n, std::size_t k);

/// Spectral efficiency log2(1 + sinr).
double achievable_rate(double sinr_val);

/// N x K matrix of r_nk under power vector p.
Matrix rate_matrix(const NetworkScenario& scenario, const PowerVector& p);

std::vector<int> loads(const Association& x);

/// r / y. Throws std::domain_error when y < 1.
double effective_rate(double rate, int load);

/// Sum over users of r_{s(k),k} / y_{s(k)}; empty BSs contribute nothing.
double sum_effective_rates(const Matrix& rates, const Association& x);
double sum_effective_rates(const NetworkScenario& scenario, const PowerVector& p, const Association& x);

/// True when 0 <= p_n <= p_max_n for all n and the size matches.
bool is_feasible(const NetworkScenario& scenario, const PowerVector& p);

}  // namespace hetnet

#include "hetnet/netmodel_impl.hpp"

#endif  // HETNET_NETMODEL_HPP
