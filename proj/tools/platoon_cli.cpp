// Command-line front end: run one scenario, run a sweep, or check a config.
//
// Exit codes: 0 success, 1 runtime failure, 2 configuration error.

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "platoon/config_error.hpp"
#include "platoon/config_io.hpp"
#include "platoon/sweep.hpp"
#include "platoon/trace.hpp"

namespace {

using namespace platoon;

struct Options {
    std::string config;
    std::string out;
    std::string trace;
    std::size_t workers = 0;
    std::optional<std::uint64_t> seed;
};

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    return out;
}

int run_single(const Options& o) {
    PlatoonRunConfig config = load_run_config(o.config);
    if (o.seed) config.seed = *o.seed;

    const RunOutput output = run_scenario(config);
    CsvRecord record = describe_run({0, config});
    record.result = output.result;

    if (!o.trace.empty()) {
        std::ofstream trace = open_output(o.trace);
        write_trace_tsv(trace, output.trace);
    }
    if (o.out.empty()) {
        write_csv(std::cout, {record});
    } else {
        std::ofstream csv = open_output(o.out);
        write_csv(csv, {record});
    }
    const RunResult& r = output.result;
    if (r.crashed) {
        std::fprintf(stderr, "collision at %.2f s, rear vehicle %zu, delta v %.3f m/s\n", *r.crash_time,
                     *r.crash_rear_index, *r.delta_v);
    } else {
        std::fprintf(stderr, "no collision, max spacing error %.3f m\n", r.max_spacing_error);
    }
    return 0;
}

int run_sweep(const Options& o) {
    SweepConfig sweep = load_sweep_config(o.config);
    if (o.seed) sweep.base_seed = *o.seed;
    const auto runs = expand_sweep(sweep);
    const auto records = execute_sweep(runs, o.workers);

    const std::string path = o.out.empty() ? sweep.output : o.out;
    if (path.empty()) {
        write_csv(std::cout, records);
    } else {
        std::ofstream csv = open_output(path);
        write_csv(csv, records);
    }
    std::size_t failed = 0;
    for (const auto& r : records) failed += r.result ? 0 : 1;
    std::fprintf(stderr, "%zu runs, %zu failed\n", records.size(), failed);
    return 0;
}

int run_validate(const Options& o) {
    const std::string text = read_text_file(o.config);
    if (is_sweep_document(text)) {
        const auto runs = expand_sweep(parse_sweep_config(text));
        // Validate every planned config, not just the first.
        for (const auto& run : runs) validate(run.config);
        std::printf("sweep config ok: %zu planned runs\n", runs.size());
    } else {
        parse_run_config(text);
        std::printf("run config ok: 1 planned run\n");
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Longitudinal platoon simulator with V2V attack models"};
    app.require_subcommand(1);
    Options o;

    auto* run = app.add_subcommand("run", "simulate one config; write a one-row CSV and optionally a trace");
    run->add_option("--config", o.config, "run config (JSON)")->required();
    run->add_option("--out", o.out, "CSV path (default: stdout)");
    run->add_option("--trace", o.trace, "trace TSV path");
    run->add_option("--seed", o.seed, "override the seed");

    auto* sweep = app.add_subcommand("sweep", "expand and execute a sweep config");
    sweep->add_option("--config", o.config, "sweep config (JSON)")->required();
    sweep->add_option("--out", o.out, "CSV path (default: the config's output, else stdout)");
    sweep->add_option("--workers", o.workers, "worker threads (0 = all cores)");
    sweep->add_option("--seed", o.seed, "override the base seed");

    auto* check = app.add_subcommand("validate", "check a run or sweep config without simulating");
    check->add_option("--config", o.config, "config (JSON)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*run) return run_single(o);
        if (*sweep) return run_sweep(o);
        return run_validate(o);
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
