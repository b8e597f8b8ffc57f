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

#ifndef HETNET_CONFIG_HPP
#define HETNET_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hetnet/joint.hpp"
#include "hetnet/netmodel.hpp"
#include "hetnet/oracle.hpp"

namespace hetnet {

enum class Scheme { Mara, Auf, Uamser, Juapcmser };

std::string_view to_string(Scheme scheme) noexcept;

struct EmitFlags {
    bool metrics = true;
    bool cdf = true;
    bool convergence = true;
    bool validation = false;
};

struct ExperimentConfig {
    ScenarioConfig scenario;
    std::vector<Scheme> schemes{Scheme::Mara, Scheme::Auf, Scheme::Uamser, Scheme::Juapcmser};
    std::vector<std::uint64_t> seeds;  // defaults to 1..20
    JointParams solver;
    int auf_max_passes = 50;
    OracleBudget oracle;
    std::string output_dir = "out";
    EmitFlags emit;
    bool timing = false;  // adds a wall_ms column to metrics.csv
    int cdf_points = 200;

    ExperimentConfig();
};

/// Configuration problem with the offending key and 1-based line (0 when the
/// problem is not tied to a line).
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string key, int line, const std::string& message);

    const std::string& key() const noexcept { return key_; }
    int line() const noexcept { return line_; }

private:
    std::string key_;
    int line_;
};

/// Parses the INI-style experiment file:
///
///   # comment
///   [scenario]
///   macro_sites = 7
///   [experiment]
///   schemes = MARA, AUF, UAMSER, JUAPCMSER
///   seeds = 1..20
///
/// Absent keys keep their defaults. Throws ConfigError.
ExperimentConfig parse_config(const std::filesystem::path& path);
ExperimentConfig parse_config_text(std::string_view text);

/// "1..20", "3", "1, 4, 9"; brackets are allowed. Throws std::invalid_argument.
std::vector<std::uint64_t> parse_seeds(std::string_view text);

/// Comma-separated scheme names, case-insensitive. Throws std::invalid_argument.
std::vector<Scheme> parse_schemes(std::string_view text);

}  // namespace hetnet

#endif  // HETNET_CONFIG_HPP
