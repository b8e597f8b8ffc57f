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

#include "hetnet/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace hetnet {

std::string_view to_string(Scheme scheme) noexcept
{
    switch (scheme) {
    case Scheme::Mara: return "MARA";
    case Scheme::Auf: return "AUF";
    case Scheme::Uamser: return "UAMSER";
    case Scheme::Juapcmser: return "JUAPCMSER";
    }
    return "unknown";
}

ExperimentConfig::ExperimentConfig()
{
    for (std::uint64_t s = 1; s <= 20; ++s)
        seeds.push_back(s);
}

ConfigError::ConfigError(std::string key, int line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + key + ": " + message
                                  : key + ": " + message),
      key_(std::move(key)),
      line_(line)
{
}

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::string_view strip_brackets(std::string_view s)
{
    s = trim(s);
    if (s.size() >= 2 && s.front() == '[' && s.back() == ']')
        s = trim(s.substr(1, s.size() - 2));
    return s;
}

std::vector<std::string_view> split_list(std::string_view s)
{
    std::vector<std::string_view> parts;
    s = strip_brackets(s);
    if (s.empty())
        return parts;
    std::size_t start = 0;
    for (;;) {
        const auto comma = s.find(',', start);
        parts.push_back(trim(s.substr(start, comma == std::string_view::npos ? s.npos : comma - start)));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return parts;
}

double to_double(std::string_view v)
{
    // std::from_chars for double is available in libstdc++ 11.
    double out = 0.0;
    const auto* end = v.data() + v.size();
    const auto [ptr, ec] = std::from_chars(v.data(), end, out);
    if (ec != std::errc() || ptr != end || !std::isfinite(out))
        throw std::invalid_argument("expected a number, got '" + std::string(v) + "'");
    return out;
}

long long to_integer(std::string_view v)
{
    long long out = 0;
    const auto* end = v.data() + v.size();
    const auto [ptr, ec] = std::from_chars(v.data(), end, out);
    if (ec != std::errc() || ptr != end)
        throw std::invalid_argument("expected an integer, got '" + std::string(v) + "'");
    return out;
}

bool to_bool(std::string_view v)
{
    if (v == "true" || v == "1" || v == "yes" || v == "on")
        return true;
    if (v == "false" || v == "0" || v == "no" || v == "off")
        return false;
    throw std::invalid_argument("expected true or false, got '" + std::string(v) + "'");
}

std::string upper(std::string_view s)
{
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return out;
}

using Setter = std::function<void(ExperimentConfig&, std::string_view)>;

template <class Get>
Setter number(Get get, double lo, double hi, bool lo_open = false)
{
    return [=](ExperimentConfig& c, std::string_view v) {
        const double x = to_double(v);
        if ((lo_open ? !(x > lo) : !(x >= lo)) || !(x <= hi)) {
            std::ostringstream msg;
            msg << "value " << x << " out of range " << (lo_open ? "(" : "[") << lo << ", " << hi << "]";
            throw std::invalid_argument(msg.str());
        }
        get(c) = x;
    };
}

template <class Get>
Setter integer(Get get, long long lo, long long hi)
{
    return [=](ExperimentConfig& c, std::string_view v) {
        const long long x = to_integer(v);
        if (x < lo || x > hi)
            throw std::invalid_argument("value " + std::to_string(x) + " out of range [" + std::to_string(lo) +
                                        ", " + std::to_string(hi) + "]");
        get(c) = static_cast<std::remove_reference_t<decltype(get(c))>>(x);
    };
}

const std::map<std::string, Setter, std::less<>>& setters()
{
    constexpr double inf = 1e300;
    static const std::map<std::string, Setter, std::less<>> table = {
        // [scenario]
        {"scenario.macro_sites", integer([](auto& c) -> int& { return c.scenario.macro_sites; }, 1, 1000)},
        {"scenario.picos_per_cell", integer([](auto& c) -> int& { return c.scenario.picos_per_cell; }, 0, 1000)},
        {"scenario.users_per_cell", integer([](auto& c) -> int& { return c.scenario.users_per_cell; }, 1, 100000)},
        {"scenario.isd_m", number([](auto& c) -> double& { return c.scenario.isd_m; }, 0.0, inf, true)},
        {"scenario.macro_power_dbm", number([](auto& c) -> double& { return c.scenario.macro_power_dbm; }, -100, 100)},
        {"scenario.pico_power_dbm", number([](auto& c) -> double& { return c.scenario.pico_power_dbm; }, -100, 100)},
        {"scenario.macro_circuit_w", number([](auto& c) -> double& { return c.scenario.macro_circuit_w; }, 0.0, inf)},
        {"scenario.pico_circuit_w", number([](auto& c) -> double& { return c.scenario.pico_circuit_w; }, 0.0, inf)},
        {"scenario.macro_kappa", number([](auto& c) -> double& { return c.scenario.macro_kappa; }, 1.0, inf)},
        {"scenario.pico_kappa", number([](auto& c) -> double& { return c.scenario.pico_kappa; }, 1.0, inf)},
        {"scenario.noise_psd_dbm_hz",
         number([](auto& c) -> double& { return c.scenario.noise_psd_dbm_hz; }, -300, 0)},
        {"scenario.bandwidth_hz", number([](auto& c) -> double& { return c.scenario.bandwidth_hz; }, 0.0, inf, true)},
        {"scenario.shadowing_db", number([](auto& c) -> double& { return c.scenario.shadowing_db; }, 0.0, 100.0)},
        {"scenario.min_distance_m",
         number([](auto& c) -> double& { return c.scenario.min_distance_m; }, 0.0, inf, true)},
        // [experiment]
        {"experiment.schemes",
         [](ExperimentConfig& c, std::string_view v) {
             auto s = parse_schemes(v);
             if (s.empty())
                 throw std::invalid_argument("at least one scheme is required");
             c.schemes = std::move(s);
         }},
        {"experiment.seeds",
         [](ExperimentConfig& c, std::string_view v) {
             auto s = parse_seeds(v);
             if (s.empty())
                 throw std::invalid_argument("at least one seed is required");
             c.seeds = std::move(s);
         }},
        // [solver]
        {"solver.xi", number([](auto& c) -> double& { return c.solver.uamser.xi; }, 0.0, 1.0 - 1e-15, true)},
        {"solver.eps", number([](auto& c) -> double& { return c.solver.uamser.eps; }, 0.0, 1.0 - 1e-15, true)},
        {"solver.t1_max", integer([](auto& c) -> int& { return c.solver.uamser.t1_max; }, 1, 1000000)},
        {"solver.residual_tol", number([](auto& c) -> double& { return c.solver.uamser.residual_tol; }, 0.0, 1.0)},
        {"solver.objective_tol", number([](auto& c) -> double& { return c.solver.uamser.objective_tol; }, 0.0, 1.0)},
        {"solver.t2_max", integer([](auto& c) -> int& { return c.solver.powerctl.t2_max; }, 1, 1000000)},
        {"solver.p_tol", number([](auto& c) -> double& { return c.solver.powerctl.p_tol; }, 0.0, 1.0, true)},
        {"solver.t3_max", integer([](auto& c) -> int& { return c.solver.t3_max; }, 1, 1000000)},
        {"solver.f_tol", number([](auto& c) -> double& { return c.solver.f_tol; }, 0.0, 1.0, true)},
        {"solver.auf_max_passes", integer([](auto& c) -> int& { return c.auf_max_passes; }, 1, 1000000)},
        // [oracle]
        {"oracle.max_assoc_combos",
         integer([](auto& c) -> std::uint64_t& { return c.oracle.max_assoc_combos; }, 1, 1'000'000'000'000LL)},
        {"oracle.power_grid_points", integer([](auto& c) -> int& { return c.oracle.power_grid_points; }, 1, 100000)},
        // [output]
        {"output.dir",
         [](ExperimentConfig& c, std::string_view v) {
             if (v.empty())
                 throw std::invalid_argument("output directory must not be empty");
             c.output_dir = std::string(v);
         }},
        {"output.emit",
         [](ExperimentConfig& c, std::string_view v) {
             EmitFlags flags{false, false, false, false};
             for (auto item : split_list(v)) {
                 if (item == "metrics")
                     flags.metrics = true;
                 else if (item == "cdf")
                     flags.cdf = true;
                 else if (item == "convergence")
                     flags.convergence = true;
                 else if (item == "validation")
                     flags.validation = true;
                 else
                     throw std::invalid_argument("unknown output '" + std::string(item) + "'");
             }
             c.emit = flags;
         }},
        {"output.timing", [](ExperimentConfig& c, std::string_view v) { c.timing = to_bool(v); }},
        {"output.cdf_points", integer([](auto& c) -> int& { return c.cdf_points; }, 0, 1000000)},
    };
    return table;
}

}  // namespace

std::vector<std::uint64_t> parse_seeds(std::string_view text)
{
    text = strip_brackets(text);
    std::vector<std::uint64_t> seeds;
    const auto dots = text.find("..");
    if (dots != std::string_view::npos) {
        const long long lo = to_integer(trim(text.substr(0, dots)));
        const long long hi = to_integer(trim(text.substr(dots + 2)));
        if (lo < 0 || hi < lo)
            throw std::invalid_argument("bad seed range '" + std::string(text) + "'");
        for (long long s = lo; s <= hi; ++s)
            seeds.push_back(static_cast<std::uint64_t>(s));
        return seeds;
    }
    for (auto item : split_list(text)) {
        const long long s = to_integer(item);
        if (s < 0)
            throw std::invalid_argument("seeds must be non-negative");
        seeds.push_back(static_cast<std::uint64_t>(s));
    }
    return seeds;
}

std::vector<Scheme> parse_schemes(std::string_view text)
{
    std::vector<Scheme> out;
    for (auto item : split_list(text)) {
        const std::string name = upper(item);
        Scheme s;
        if (name == "MARA")
            s = Scheme::Mara;
        else if (name == "AUF")
            s = Scheme::Auf;
        else if (name == "UAMSER")
            s = Scheme::Uamser;
        else if (name == "JUAPCMSER")
            s = Scheme::Juapcmser;
        else
            throw std::invalid_argument("unknown scheme '" + std::string(item) + "'");
        if (std::find(out.begin(), out.end(), s) == out.end())
            out.push_back(s);
    }
    return out;
}

ExperimentConfig parse_config_text(std::string_view text)
{
    ExperimentConfig config;
    std::string section;
    int line_no = 0;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError(std::string(line), line_no, "malformed section header");
            section = std::string(trim(line.substr(1, line.size() - 2)));
            static const char* known[] = {"scenario", "experiment", "solver", "oracle", "output"};
            if (std::find(std::begin(known), std::end(known), section) == std::end(known))
                throw ConfigError(section, line_no, "unknown section");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError(std::string(line), line_no, "expected key = value");
        const std::string key(trim(line.substr(0, eq)));
        const std::string_view value = trim(line.substr(eq + 1));
        if (section.empty())
            throw ConfigError(key, line_no, "key outside of any section");
        const std::string full = section + "." + key;
        const auto it = setters().find(full);
        if (it == setters().end())
            throw ConfigError(key, line_no, "unknown key in [" + section + "]");
        try {
            it->second(config, value);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(key, line_no, e.what());
        }
    }

    try {
        config.scenario.validate();
        config.solver.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError("config", 0, e.what());
    }
    return config;
}

ExperimentConfig parse_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError(path.string(), 0, "cannot open config file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

}  // namespace hetnet
