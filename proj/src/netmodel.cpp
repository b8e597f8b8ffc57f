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

#include "hetnet/netmodel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace hetnet {

std::string_view to_string(Tier tier) noexcept
{
    return tier == Tier::Macro ? "macro" : "pico";
}

double distance(Point a, Point b) noexcept
{
    return std::hypot(a.x - b.x, a.y - b.y);
}

namespace {

void require(bool ok, const char* field, const char* what)
{
    if (!ok)
        throw std::invalid_argument(std::string(field) + " " + what);
}

}  // namespace

void ScenarioConfig::validate() const
{
    require(macro_sites >= 1, "macro_sites", "must be at least 1");
    require(picos_per_cell >= 0, "picos_per_cell", "must be non-negative");
    require(users_per_cell >= 1, "users_per_cell", "must be at least 1");
    require(isd_m > 0.0, "isd_m", "must be positive");
    require(std::isfinite(macro_power_dbm), "macro_power_dbm", "must be finite");
    require(std::isfinite(pico_power_dbm), "pico_power_dbm", "must be finite");
    require(macro_circuit_w >= 0.0, "macro_circuit_w", "must be non-negative");
    require(pico_circuit_w >= 0.0, "pico_circuit_w", "must be non-negative");
    require(macro_kappa >= 1.0, "macro_kappa", "must be at least 1");
    require(pico_kappa >= 1.0, "pico_kappa", "must be at least 1");
    require(std::isfinite(noise_psd_dbm_hz), "noise_psd_dbm_hz", "must be finite");
    require(bandwidth_hz > 0.0, "bandwidth_hz", "must be positive");
    require(shadowing_db >= 0.0, "shadowing_db", "must be non-negative");
    require(min_distance_m > 0.0, "min_distance_m", "must be positive");
}

NetworkScenario::NetworkScenario(std::vector<BaseStation> bss, std::vector<User> users, Matrix gains,
                                 double noise_w, double bandwidth_hz, std::uint64_t seed)
    : bss_(std::move(bss)),
      users_(std::move(users)),
      gains_(std::move(gains)),
      noise_w_(noise_w),
      bandwidth_hz_(bandwidth_hz),
      seed_(seed)
{
    if (bss_.empty() || users_.empty())
        throw std::invalid_argument("scenario needs at least one BS and one user");
    if (gains_.rows() != static_cast<Eigen::Index>(bss_.size()) ||
        gains_.cols() != static_cast<Eigen::Index>(users_.size()))
        throw std::invalid_argument("gain matrix must be N x K");
    if (!(noise_w_ > 0.0) || !std::isfinite(noise_w_))
        throw std::invalid_argument("noise power must be positive");
    if (!(bandwidth_hz_ > 0.0))
        throw std::invalid_argument("bandwidth must be positive");
    for (Eigen::Index i = 0; i < gains_.size(); ++i) {
        const double g = gains_.data()[i];
        if (!(g > 0.0) || !std::isfinite(g))
            throw std::invalid_argument("channel gains must be positive and finite");
    }
    for (const auto& bs : bss_) {
        if (!(bs.p_max_w > 0.0) || bs.kappa < 1.0 || bs.p_circuit_w < 0.0)
            throw std::invalid_argument("BS " + std::to_string(bs.id) + " has invalid power parameters");
    }
}

PowerVector NetworkScenario::max_power() const
{
    PowerVector p(static_cast<Eigen::Index>(bss_.size()));
    for (std::size_t n = 0; n < bss_.size(); ++n)
        p(static_cast<Eigen::Index>(n)) = bss_[n].p_max_w;
    return p;
}

double dbm_to_watt(double dbm) noexcept
{
    return std::pow(10.0, (dbm - 30.0) / 10.0);
}

std::vector<Point> hex_sites(int count, double isd_m)
{
    // Axial lattice coordinates, walked ring by ring.
    constexpr std::array<std::array<int, 2>, 6> dirs{{{1, 0}, {1, -1}, {0, -1}, {-1, 0}, {-1, 1}, {0, 1}}};
    std::vector<Point> sites;
    auto push = [&](int q, int r) {
        sites.push_back({isd_m * (q + 0.5 * r), isd_m * (std::sqrt(3.0) / 2.0) * r});
    };
    if (count <= 0)
        return sites;
    push(0, 0);
    for (int ring = 1; static_cast<int>(sites.size()) < count; ++ring) {
        int q = dirs[4][0] * ring;
        int r = dirs[4][1] * ring;
        for (int side = 0; side < 6; ++side) {
            for (int step = 0; step < ring; ++step) {
                if (static_cast<int>(sites.size()) == count)
                    return sites;
                push(q, r);
                q += dirs[side][0];
                r += dirs[side][1];
            }
        }
    }
    return sites;
}

NetworkScenario generate_scenario(const ScenarioConfig& config, std::uint64_t seed)
{
    config.validate();
    std::mt19937_64 rng(seed);

    const auto sites = hex_sites(config.macro_sites, config.isd_m);
    std::vector<BaseStation> bss;
    std::vector<User> users;

    const double macro_w = dbm_to_watt(config.macro_power_dbm);
    const double pico_w = dbm_to_watt(config.pico_power_dbm);

    for (const auto& site : sites)
        bss.push_back({bss.size(), Tier::Macro, site, macro_w, config.macro_kappa, config.macro_circuit_w});

    for (const auto& site : sites) {
        for (int i = 0; i < config.picos_per_cell; ++i)
            bss.push_back({bss.size(), Tier::Pico, sample_in_cell(site, config.isd_m, rng), pico_w,
                           config.pico_kappa, config.pico_circuit_w});
        for (int i = 0; i < config.users_per_cell; ++i)
            users.push_back({users.size(), sample_in_cell(site, config.isd_m, rng)});
    }

    std::normal_distribution<double> shadow(0.0, 1.0);
    Matrix gains(static_cast<Eigen::Index>(bss.size()), static_cast<Eigen::Index>(users.size()));
    for (std::size_t n = 0; n < bss.size(); ++n) {
        for (std::size_t k = 0; k < users.size(); ++k) {
            const double d_m = std::max(distance(bss[n].position, users[k].position), config.min_distance_m);
            const double s_db = config.shadowing_db * shadow(rng);
            gains(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(k)) =
                channel_gain(pathloss_db(bss[n].tier, d_m / 1000.0), s_db);
        }
    }

    return NetworkScenario(std::move(bss), std::move(users), std::move(gains),
                           noise_power(config.noise_psd_dbm_hz, config.bandwidth_hz), config.bandwidth_hz,
                           seed);
}

double pathloss_db(Tier tier, double distance_km)
{
    if (!(distance_km > 0.0))
        throw std::domain_error("pathloss distance must be positive");
    if (tier == Tier::Macro)
        return 128.1 + 37.6 * std::log10(distance_km);
    return 140.7 + 36.7 * std::log10(distance_km);
}

double channel_gain(double pl_db, double shadow_db) noexcept
{
    return std::pow(10.0, -(pl_db + shadow_db) / 10.0);
}

double noise_power(double psd_dbm_hz, double bandwidth_hz)
{
    if (!(bandwidth_hz > 0.0))
        throw std::invalid_argument("bandwidth must be positive");
    return dbm_to_watt(psd_dbm_hz + 10.0 * std::log10(bandwidth_hz));
}

double sinr(const NetworkScenario& scenario, const PowerVector& p, std::size_t n, std::size_t k)
{
    double interference = 0.0;
    for (std::size_t j = 0; j < scenario.num_bs(); ++j) {
        if (j != n)
            interference += p(static_cast<Eigen::Index>(j)) * scenario.gain(j, k);
    }
    return p(static_cast<Eigen::Index>(n)) * scenario.gain(n, k) / (interference + scenario.noise_w());
}

double achievable_rate(double sinr_val)
{
    if (sinr_val < 0.0)
        throw std::domain_error("SINR must be non-negative");
    return std::log2(1.0 + sinr_val);
}

Matrix rate_matrix(const NetworkScenario& scenario, const PowerVector& p)
{
    const auto n_bs = static_cast<Eigen::Index>(scenario.num_bs());
    const auto n_users = static_cast<Eigen::Index>(scenario.num_users());
    const Matrix& g = scenario.gains();
    Matrix rates(n_bs, n_users);
    for (Eigen::Index k = 0; k < n_users; ++k) {
        for (Eigen::Index n = 0; n < n_bs; ++n) {
            double interference = 0.0;
            for (Eigen::Index j = 0; j < n_bs; ++j)
                if (j != n)
                    interference += p(j) * g(j, k);
            rates(n, k) = std::log2(1.0 + p(n) * g(n, k) / (interference + scenario.noise_w()));
        }
    }
    return rates;
}

std::vector<int> loads(const Association& x)
{
    return x.loads();
}

double effective_rate(double rate, int load)
{
    if (load < 1)
        throw std::domain_error("effective rate undefined for an empty BS");
    return rate / load;
}

double sum_effective_rates(const Matrix& rates, const Association& x)
{
    const auto y = x.loads();
    double total = 0.0;
    for (std::size_t k = 0; k < x.num_users(); ++k) {
        const auto n = x.serving(k);
        total += rates(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(k)) / y[n];
    }
    return total;
}

double sum_effective_rates(const NetworkScenario& scenario, const PowerVector& p, const Association& x)
{
    // Only serving links are needed.
    const auto y = x.loads();
    double total = 0.0;
    for (std::size_t k = 0; k < x.num_users(); ++k) {
        const auto n = x.serving(k);
        total += achievable_rate(sinr(scenario, p, n, k)) / y[n];
    }
    return total;
}

bool is_feasible(const NetworkScenario& scenario, const PowerVector& p)
{
    if (p.size() != static_cast<Eigen::Index>(scenario.num_bs()))
        return false;
    for (std::size_t n = 0; n < scenario.num_bs(); ++n) {
        const double v = p(static_cast<Eigen::Index>(n));
        if (!(v >= 0.0) || v > scenario.bs(n).p_max_w)
            return false;
    }
    return true;
}

}  // namespace hetnet
