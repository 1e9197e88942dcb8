#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "platoon/attack.hpp"
#include "platoon/controllers.hpp"
#include "platoon/metrics.hpp"
#include "platoon/scenario.hpp"

namespace platoon {

struct SweepAttack {
    AttackKind kind = AttackKind::None;
    std::vector<double> values{0.0};  // config units, see config_io.hpp
    std::vector<double> starts{30.0}; // s
};

struct SweepConfig {
    PlatoonRunConfig base;
    std::vector<ControllerKind> controllers;
    std::vector<double> cacc_spacings;    // m, expands CACC entries only
    std::vector<double> target_speeds_kmh;
    std::vector<SweepAttack> attacks;
    std::size_t repeats = 5;
    std::uint64_t base_seed = 1;
    std::string output; // default CSV path, may be empty
};

// Sweep documents hold a "base" object of run keys plus the list keys
// controllers, cacc_spacings_m, target_speeds_kmh, attacks, repeats, base_seed
// and output. Throws ConfigError.
SweepConfig parse_sweep_config(std::string_view json_text);
SweepConfig load_sweep_config(const std::filesystem::path& path);

// True when the document looks like a sweep (has a "controllers" key).
bool is_sweep_document(std::string_view json_text);

struct PlannedRun {
    std::size_t run_id = 0;
    PlatoonRunConfig config;
};

// Dimension order, outermost first: controller (CACC once per spacing),
// target speed, attack kind, attack value, attack start, repeat. run_id is
// the position in that order and the seed is base_seed + repeat.
// Throws ConfigError on an empty dimension.
std::vector<PlannedRun> expand_sweep(const SweepConfig& sweep);

struct CsvRecord {
    std::size_t run_id = 0;
    std::uint64_t seed = 0;
    ControllerKind controller = ControllerKind::Cacc;
    double spacing_param = 0.0; // cacc_gap for CACC, time headway otherwise
    double target_speed_kmh = 0.0;
    AttackKind attack_kind = AttackKind::None;
    double attack_value = 0.0; // config units
    double attack_start = 0.0;
    std::optional<RunResult> result; // empty for a failed run
    std::string error;
};

inline constexpr std::string_view kCsvHeader =
    "run_id,seed,controller,spacing_param,target_speed_kmh,attack_kind,attack_value,"
    "attack_start_s,crashed,crash_time_s,crash_rear_index,delta_v_ms,max_spacing_err_m,"
    "avg_max_spacing_err_m,avg_max_abs_accel_ms2";

double spacing_param(const ControllerParams& params);

// The identifying columns of a run, without results.
CsvRecord describe_run(const PlannedRun& run);

// Runs one planned config. Failures become an error record instead of throwing.
CsvRecord execute_run(const PlannedRun& run);

// Runs every config on `workers` threads (0 picks the hardware concurrency).
// The result is ordered by run_id whatever the completion order.
std::vector<CsvRecord> execute_sweep(const std::vector<PlannedRun>& runs, std::size_t workers);

void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const CsvRecord& record);
void write_csv(std::ostream& out, const std::vector<CsvRecord>& records);

} // namespace platoon
