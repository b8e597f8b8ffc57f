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

#include "hetnet/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <thread>

#include "hetnet/baselines.hpp"
#include "hetnet/joint.hpp"
#include "hetnet/metrics.hpp"
#include "hetnet/oracle.hpp"
#include "hetnet/uamser.hpp"

namespace hetnet {

std::string format_number(double value)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", value);
    return buf;
}

SchemeSolution solve_scheme(const ExperimentConfig& config, const NetworkScenario& scenario, Scheme scheme)
{
    SchemeSolution out;
    const PowerVector p_max = scenario.max_power();
    switch (scheme) {
    case Scheme::Mara: {
        out.p = p_max;
        out.x = mara(scenario, p_max);
        out.outer_iters = 1;
        out.convergence.push_back({"UA", 1, sum_effective_rates(scenario, p_max, out.x)});
        break;
    }
    case Scheme::Auf: {
        out.p = p_max;
        auto res = auf_search(rate_matrix(scenario, p_max), config.auf_max_passes);
        out.outer_iters = res.passes;
        for (std::size_t i = 0; i < res.utility_trace.size(); ++i)
            out.convergence.push_back({"UA", static_cast<int>(i), res.utility_trace[i]});
        out.x = std::move(res.x);
        break;
    }
    case Scheme::Uamser: {
        out.p = p_max;
        auto res = uamser_solve(scenario, p_max, config.solver.uamser);
        out.outer_iters = res.iterations;
        for (const auto& it : res.trace)
            out.convergence.push_back({"UA", it.iter, it.objective});
        out.x = std::move(res.x);
        break;
    }
    case Scheme::Juapcmser: {
        auto res = juapcmser_solve(scenario, config.solver);
        out.outer_iters = res.outer_iterations;
        for (std::size_t i = 0; i < res.outer_trace.size(); ++i)
            out.convergence.push_back({"OL", static_cast<int>(i + 1), res.outer_trace[i]});
        if (!res.association_traces.empty())
            for (const auto& it : res.association_traces.front())
                out.convergence.push_back({"UA", it.iter, it.objective});
        if (!res.inner_traces.empty())
            for (const auto& it : res.inner_traces.front())
                out.convergence.push_back({"PC", it.iter, it.objective});
        out.x = std::move(res.last_x);
        out.p = std::move(res.last_p);
        break;
    }
    }
    return out;
}

RunRecord run_scheme(const ExperimentConfig& config, const NetworkScenario& scenario, Scheme scheme)
{
    RunRecord rec;
    rec.scheme = scheme;
    rec.seed = scenario.seed();
    const auto start = std::chrono::steady_clock::now();
    try {
        auto sol = solve_scheme(config, scenario, scheme);
        const auto report = summarize(scenario, sol.x, sol.p);
        rec.jain = report.jain;
        rec.avg_rate = report.avg_rate;
        rec.avg_rate_bps = report.avg_rate * scenario.bandwidth_hz();
        rec.avg_ee = report.avg_ee;
        rec.macro_load = report.macro_load;
        rec.pico_load = report.pico_load;
        rec.objective = sum_effective_rates(scenario, sol.p, sol.x);
        rec.outer_iters = sol.outer_iters;
        rec.rate_samples = report.rate_samples;
        rec.macro_rate_samples = report.macro_rate_samples;
        rec.convergence = std::move(sol.convergence);

        if (config.emit.validation &&
            association_count(scenario.num_bs(), scenario.num_users()) <= config.oracle.max_assoc_combos) {
            const auto best = brute_force_association(scenario, sol.p, config.oracle);
            ValidationRow row;
            row.scheme = scheme;
            row.seed = rec.seed;
            row.oracle_objective = best.objective;
            row.heuristic_objective = rec.objective;
            row.gap_pct = best.objective > 0.0 ? 100.0 * (best.objective - rec.objective) / best.objective : 0.0;
            rec.validation = row;
        }
    } catch (const std::exception& e) {
        rec.failed = true;
        rec.error = e.what();
    }
    rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rec;
}

namespace {

template <class Fn>
void parallel_for(std::size_t count, int jobs, Fn fn)
{
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++)
            fn(i);
    };
    const auto threads = std::min<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), count);
    if (threads <= 1) {
        worker();
        return;
    }
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t)
        pool.emplace_back(worker);
}

std::ofstream open_csv(const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    return out;
}

double mean_of(const std::vector<const RunRecord*>& recs, double RunRecord::*field)
{
    double s = 0.0;
    for (const auto* r : recs)
        s += r->*field;
    return recs.empty() ? 0.0 : s / static_cast<double>(recs.size());
}

// Successful records of each scheme, in requested scheme order.
std::vector<std::pair<Scheme, std::vector<const RunRecord*>>> by_scheme(const ExperimentConfig& config,
                                                                         const ExperimentResult& result)
{
    std::vector<std::pair<Scheme, std::vector<const RunRecord*>>> groups;
    for (Scheme s : config.schemes) {
        std::vector<const RunRecord*> recs;
        for (const auto& r : result.records)
            if (r.scheme == s && !r.failed)
                recs.push_back(&r);
        groups.emplace_back(s, std::move(recs));
    }
    return groups;
}

void write_metrics(const ExperimentConfig& config, const ExperimentResult& result, const std::filesystem::path& path)
{
    auto out = open_csv(path);
    out << "scheme,seed,jain,avg_rate,avg_ee,macro_load,pico_load,objective,outer_iters,avg_rate_bps";
    if (config.timing)
        out << ",wall_ms";
    out << '\n';
    for (const auto& r : result.records) {
        out << to_string(r.scheme) << ',' << r.seed << ',';
        if (r.failed) {
            out << "FAILED,,,,,,,";
            if (config.timing)
                out << ',';
            out << '\n';
            continue;
        }
        out << format_number(r.jain) << ',' << format_number(r.avg_rate) << ',' << format_number(r.avg_ee) << ','
            << format_number(r.macro_load) << ',' << format_number(r.pico_load) << ','
            << format_number(r.objective) << ',' << r.outer_iters << ',' << format_number(r.avg_rate_bps);
        if (config.timing)
            out << ',' << format_number(r.wall_ms);
        out << '\n';
    }
    for (const auto& [scheme, recs] : by_scheme(config, result)) {
        double iters = 0.0;
        for (const auto* r : recs)
            iters += r->outer_iters;
        if (!recs.empty())
            iters /= static_cast<double>(recs.size());
        out << to_string(scheme) << ",mean," << format_number(mean_of(recs, &RunRecord::jain)) << ','
            << format_number(mean_of(recs, &RunRecord::avg_rate)) << ','
            << format_number(mean_of(recs, &RunRecord::avg_ee)) << ','
            << format_number(mean_of(recs, &RunRecord::macro_load)) << ','
            << format_number(mean_of(recs, &RunRecord::pico_load)) << ','
            << format_number(mean_of(recs, &RunRecord::objective)) << ',' << format_number(iters) << ','
            << format_number(mean_of(recs, &RunRecord::avg_rate_bps));
        if (config.timing)
            out << ',' << format_number(mean_of(recs, &RunRecord::wall_ms));
        out << '\n';
    }
}

void write_tier_loads(const ExperimentConfig& config, const ExperimentResult& result,
                      const std::filesystem::path& path)
{
    auto out = open_csv(path);
    out << "scheme,seed,macro_load,pico_load\n";
    for (const auto& r : result.records) {
        out << to_string(r.scheme) << ',' << r.seed << ',';
        if (r.failed)
            out << "FAILED,\n";
        else
            out << format_number(r.macro_load) << ',' << format_number(r.pico_load) << '\n';
    }
    for (const auto& [scheme, recs] : by_scheme(config, result))
        out << to_string(scheme) << ",mean," << format_number(mean_of(recs, &RunRecord::macro_load)) << ','
            << format_number(mean_of(recs, &RunRecord::pico_load)) << '\n';
}

void write_cdf(const ExperimentConfig& config, const ExperimentResult& result, const std::filesystem::path& path,
               std::vector<double> RunRecord::*samples)
{
    auto out = open_csv(path);
    out << "scheme,rate,cdf\n";
    const auto groups = by_scheme(config, result);
    double hi = 0.0;
    for (const auto& [scheme, recs] : groups)
        for (const auto* r : recs)
            for (double v : r->*samples)
                hi = std::max(hi, v);
    std::vector<double> grid;
    for (int i = 0; i < config.cdf_points; ++i)
        grid.push_back(config.cdf_points == 1 ? hi : hi * i / (config.cdf_points - 1));
    for (const auto& [scheme, recs] : groups) {
        std::vector<double> pooled;
        for (const auto* r : recs)
            pooled.insert(pooled.end(), (r->*samples).begin(), (r->*samples).end());
        if (grid.empty())
            continue;
        if (pooled.empty()) {
            for (double g : grid)
                out << to_string(scheme) << ',' << format_number(g) << ",0\n";
            continue;
        }
        for (const auto& [rate, frac] : rate_cdf(pooled, grid))
            out << to_string(scheme) << ',' << format_number(rate) << ',' << format_number(frac) << '\n';
    }
}

void write_convergence(const ExperimentResult& result, const std::filesystem::path& path)
{
    auto out = open_csv(path);
    out << "scheme,seed,loop,iter,value\n";
    for (const auto& r : result.records)
        for (const auto& row : r.convergence)
            out << to_string(r.scheme) << ',' << r.seed << ',' << row.loop << ',' << row.iter << ','
                << format_number(row.value) << '\n';
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config, int jobs)
{
    if (config.schemes.empty() || config.seeds.empty())
        throw std::invalid_argument("at least one scheme and one seed are required");

    std::vector<std::optional<NetworkScenario>> scenarios(config.seeds.size());
    std::vector<std::string> scenario_errors(config.seeds.size());
    parallel_for(config.seeds.size(), jobs, [&](std::size_t i) {
        try {
            scenarios[i] = generate_scenario(config.scenario, config.seeds[i]);
        } catch (const std::exception& e) {
            scenario_errors[i] = e.what();
        }
    });

    const std::size_t n_runs = config.schemes.size() * config.seeds.size();
    ExperimentResult result;
    result.records.resize(n_runs);
    parallel_for(n_runs, jobs, [&](std::size_t i) {
        const std::size_t s = i / config.seeds.size();
        const std::size_t d = i % config.seeds.size();
        if (!scenarios[d]) {
            RunRecord& rec = result.records[i];
            rec.scheme = config.schemes[s];
            rec.seed = config.seeds[d];
            rec.failed = true;
            rec.error = scenario_errors[d];
            return;
        }
        result.records[i] = run_scheme(config, *scenarios[d], config.schemes[s]);
    });

    std::map<Scheme, std::size_t> order;
    for (std::size_t i = 0; i < config.schemes.size(); ++i)
        order[config.schemes[i]] = i;
    std::stable_sort(result.records.begin(), result.records.end(), [&](const RunRecord& a, const RunRecord& b) {
        return std::pair(order[a.scheme], a.seed) < std::pair(order[b.scheme], b.seed);
    });
    result.any_failed = std::any_of(result.records.begin(), result.records.end(),
                                    [](const RunRecord& r) { return r.failed; });
    return result;
}

void write_validation_csv(const std::filesystem::path& path, std::span<const ValidationRow> rows)
{
    auto out = open_csv(path);
    out << "scheme,seed,oracle_objective,heuristic_objective,gap_pct\n";
    for (const auto& row : rows)
        out << to_string(row.scheme) << ',' << row.seed << ',' << format_number(row.oracle_objective) << ','
            << format_number(row.heuristic_objective) << ',' << format_number(row.gap_pct) << '\n';
}

void write_outputs(const ExperimentConfig& config, const ExperimentResult& result, const std::filesystem::path& dir)
{
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec)
        throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());

    if (config.emit.metrics) {
        write_metrics(config, result, dir / "metrics.csv");
        write_tier_loads(config, result, dir / "tier_loads.csv");
    }
    if (config.emit.cdf) {
        write_cdf(config, result, dir / "cdf_all.csv", &RunRecord::rate_samples);
        write_cdf(config, result, dir / "cdf_macro.csv", &RunRecord::macro_rate_samples);
    }
    if (config.emit.convergence)
        write_convergence(result, dir / "convergence.csv");
    if (config.emit.validation) {
        std::vector<ValidationRow> rows;
        for (const auto& r : result.records)
            if (r.validation)
                rows.push_back(*r.validation);
        write_validation_csv(dir / "validation.csv", rows);
    }
}

}  // namespace hetnet
