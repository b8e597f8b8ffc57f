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

// Runs a (scheme x seed) grid and writes CSV plot data.
//
// Exit codes: 0 ok, 1 configuration error, 2 solver failure.

#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "hetnet/config.hpp"
#include "hetnet/experiment.hpp"

int main(int argc, char** argv)
{
    CLI::App app{"Two-tier HetNet association and power control experiments"};
    std::string config_path;
    std::string out_dir;
    std::string seeds;
    std::string schemes;
    int jobs = 1;
    bool validate = false;
    bool timing = false;
    app.add_option("--config", config_path, "Experiment file (INI-style)")->check(CLI::ExistingFile);
    app.add_option("--out", out_dir, "Output directory (overrides [output] dir)");
    app.add_option("--jobs", jobs, "Concurrent runs")->check(CLI::PositiveNumber);
    app.add_option("--seeds", seeds, "Seed range or list, e.g. 1..20 or 1,5,9");
    app.add_option("--schemes", schemes, "Comma-separated subset of MARA,AUF,UAMSER,JUAPCMSER");
    app.add_flag("--validate", validate, "Compare against the exhaustive oracle when within budget");
    app.add_flag("--timing", timing, "Add a wall_ms column to metrics.csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    hetnet::ExperimentConfig config;
    try {
        if (!config_path.empty())
            config = hetnet::parse_config(config_path);
        if (!seeds.empty()) {
            config.seeds = hetnet::parse_seeds(seeds);
            if (config.seeds.empty())
                throw hetnet::ConfigError("--seeds", 0, "at least one seed is required");
        }
        if (!schemes.empty()) {
            config.schemes = hetnet::parse_schemes(schemes);
            if (config.schemes.empty())
                throw hetnet::ConfigError("--schemes", 0, "at least one scheme is required");
        }
    } catch (const hetnet::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 1;
    }
    if (!out_dir.empty())
        config.output_dir = out_dir;
    if (validate)
        config.emit.validation = true;
    if (timing)
        config.timing = true;

    const auto result = hetnet::run_experiment(config, jobs);
    try {
        hetnet::write_outputs(config, result, config.output_dir);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    std::printf("%-10s %8s %10s %10s %10s %10s\n", "scheme", "jain", "avg_rate", "avg_ee", "macro", "pico");
    for (auto scheme : config.schemes) {
        double jain = 0, rate = 0, ee = 0, macro = 0, pico = 0;
        int count = 0;
        for (const auto& r : result.records) {
            if (r.scheme != scheme || r.failed)
                continue;
            jain += r.jain;
            rate += r.avg_rate;
            ee += r.avg_ee;
            macro += r.macro_load;
            pico += r.pico_load;
            ++count;
        }
        if (count > 0)
            std::printf("%-10s %8.4f %10.4f %10.4f %10.1f %10.1f\n", std::string(hetnet::to_string(scheme)).c_str(),
                        jain / count, rate / count, ee / count, macro / count, pico / count);
    }
    for (const auto& r : result.records)
        if (r.failed)
            std::cerr << "failed: " << hetnet::to_string(r.scheme) << " seed " << r.seed << ": " << r.error << '\n';
    std::printf("wrote %s\n", config.output_dir.c_str());
    return result.any_failed ? 2 : 0;
}
