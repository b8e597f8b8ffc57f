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

#ifndef HETNET_EXPERIMENT_HPP
#define HETNET_EXPERIMENT_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hetnet/config.hpp"

namespace hetnet {

struct ConvergenceRow {
    std::string loop;  // OL, UA or PC
    int iter = 0;
    double value = 0.0;
};

struct ValidationRow {
    Scheme scheme = Scheme::Mara;
    std::uint64_t seed = 0;
    double oracle_objective = 0.0;
    double heuristic_objective = 0.0;
    double gap_pct = 0.0;
};

/// Association and powers a scheme settles on for one scenario.
struct SchemeSolution {
    Association x;
    PowerVector p;
    int outer_iters = 0;
    std::vector<ConvergenceRow> convergence;
};

SchemeSolution solve_scheme(const ExperimentConfig& config, const NetworkScenario& scenario, Scheme scheme);

struct RunRecord {
    Scheme scheme = Scheme::Mara;
    std::uint64_t seed = 0;
    double jain = 0.0;
    double avg_rate = 0.0;      // bits/s/Hz
    double avg_rate_bps = 0.0;  // avg_rate * bandwidth
    double avg_ee = 0.0;
    double macro_load = 0.0;
    double pico_load = 0.0;
    double objective = 0.0;  // sum of effective rates
    int outer_iters = 0;
    double wall_ms = 0.0;
    bool failed = false;
    std::string error;

    std::vector<double> rate_samples;
    std::vector<double> macro_rate_samples;
    std::vector<ConvergenceRow> convergence;
    std::optional<ValidationRow> validation;
};

RunRecord run_scheme(const ExperimentConfig& config, const NetworkScenario& scenario, Scheme scheme);

struct ExperimentResult {
    std::vector<RunRecord> records;  // sorted by (scheme, seed)
    bool any_failed = false;
};

/// Runs every (scheme, seed) pair on up to `jobs` threads.
ExperimentResult run_experiment(const ExperimentConfig& config, int jobs = 1);

/// Writes the enabled CSV files into `dir`, creating it if needed.
/// Throws std::runtime_error when the directory is not writable.
void write_outputs(const ExperimentConfig& config, const ExperimentResult& result, const std::filesystem::path& dir);

void write_validation_csv(const std::filesystem::path& path, std::span<const ValidationRow> rows);

/// 9 significant digits.
std::string format_number(double value);

}  // namespace hetnet

#endif  // HETNET_EXPERIMENT_HPP
