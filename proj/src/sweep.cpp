#include "platoon/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <thread>

#include <json.hpp>

#include "platoon/config_error.hpp"
#include "platoon/config_io.hpp"

namespace platoon {

namespace {

using nlohmann::json;

std::vector<double> number_list(const json& v, const std::string& key) {
    if (!v.is_array()) throw ConfigError(key, "expected a list of numbers");
    std::vector<double> out;
    for (const json& item : v) {
        if (!item.is_number()) throw ConfigError(key, "expected a list of numbers");
        out.push_back(item.get<double>());
    }
    return out;
}

std::size_t unsigned_value(const json& v, const std::string& key) {
    if (!v.is_number_integer() || v.get<long long>() < 0)
        throw ConfigError(key, "expected a non-negative integer");
    return v.get<std::size_t>();
}

SweepAttack parse_attack(const json& v) {
    if (!v.is_object()) throw ConfigError("attacks", "each entry must be an object");
    SweepAttack attack;
    bool has_kind = false;
    for (const auto& [key, value] : v.items()) {
        if (key == "kind") {
            if (!value.is_string()) throw ConfigError("attacks.kind", "expected a string");
            try {
                attack.kind = parse_attack_kind(value.get<std::string>());
            } catch (const std::invalid_argument& e) {
                throw ConfigError("attacks.kind", e.what());
            }
            has_kind = true;
        } else if (key == "values") {
            attack.values = number_list(value, "attacks.values");
        } else if (key == "starts_s") {
            attack.starts = number_list(value, "attacks.starts_s");
        } else {
            throw ConfigError("attacks." + key, "unknown key");
        }
    }
    if (!has_kind) throw ConfigError("attacks.kind", "missing");
    // Jamming and the attack-free baseline carry no value.
    if (attack.kind == AttackKind::None || attack.kind == AttackKind::Jam) attack.values = {0.0};
    if (attack.kind == AttackKind::None) attack.starts = {0.0};
    return attack;
}

void require_nonempty(bool empty, const char* key) {
    if (empty) throw ConfigError(key, "must not be empty");
}

std::string format_number(const char* format, double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, format, value);
    return buf;
}

} // namespace

bool is_sweep_document(std::string_view json_text) {
    try {
        const json doc = json::parse(json_text);
        return doc.is_object() && doc.contains("controllers");
    } catch (const json::parse_error&) {
        return false;
    }
}

SweepConfig parse_sweep_config(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError("<document>", std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("<document>", "expected a JSON object");

    SweepConfig sweep;
    sweep.base.controller.kind = ControllerKind::Cacc;
    bool has_spacings = false;
    bool has_speeds = false;
    for (const auto& [key, value] : doc.items()) {
        if (key == "base") {
            apply_run_overrides(sweep.base, value.dump());
        } else if (key == "controllers") {
            if (!value.is_array()) throw ConfigError(key, "expected a list of controller names");
            for (const json& name : value) {
                if (!name.is_string()) throw ConfigError(key, "expected a list of controller names");
                try {
                    sweep.controllers.push_back(parse_controller_kind(name.get<std::string>()));
                } catch (const std::invalid_argument& e) {
                    throw ConfigError("controller", e.what());
                }
            }
        } else if (key == "cacc_spacings_m") {
            sweep.cacc_spacings = number_list(value, key);
            has_spacings = true;
        } else if (key == "target_speeds_kmh") {
            sweep.target_speeds_kmh = number_list(value, key);
            has_speeds = true;
        } else if (key == "attacks") {
            if (!value.is_array()) throw ConfigError(key, "expected a list of attack objects");
            for (const json& a : value) sweep.attacks.push_back(parse_attack(a));
        } else if (key == "repeats") {
            sweep.repeats = unsigned_value(value, key);
        } else if (key == "base_seed") {
            sweep.base_seed = unsigned_value(value, key);
        } else if (key == "output") {
            if (!value.is_string()) throw ConfigError(key, "expected a path");
            sweep.output = value.get<std::string>();
        } else {
            throw ConfigError(key, "unknown key");
        }
    }
    if (!has_spacings) sweep.cacc_spacings = {sweep.base.controller.cacc_gap};
    if (!has_speeds) sweep.target_speeds_kmh = {sweep.base.target_speed_kmh};
    if (sweep.attacks.empty()) sweep.attacks.push_back(SweepAttack{});
    return sweep;
}

SweepConfig load_sweep_config(const std::filesystem::path& path) {
    return parse_sweep_config(read_text_file(path));
}

std::vector<PlannedRun> expand_sweep(const SweepConfig& sweep) {
    require_nonempty(sweep.controllers.empty(), "controllers");
    require_nonempty(sweep.target_speeds_kmh.empty(), "target_speeds_kmh");
    require_nonempty(sweep.attacks.empty(), "attacks");
    if (sweep.repeats == 0) throw ConfigError("repeats", "must be at least 1");
    for (const SweepAttack& a : sweep.attacks) {
        require_nonempty(a.values.empty(), "attacks.values");
        require_nonempty(a.starts.empty(), "attacks.starts_s");
    }
    const bool any_cacc = std::find(sweep.controllers.begin(), sweep.controllers.end(),
                                    ControllerKind::Cacc) != sweep.controllers.end();
    if (any_cacc) require_nonempty(sweep.cacc_spacings.empty(), "cacc_spacings_m");

    std::vector<PlannedRun> runs;
    const auto emit = [&](PlatoonRunConfig config) {
        for (double speed : sweep.target_speeds_kmh) {
            config.target_speed_kmh = speed;
            for (const SweepAttack& a : sweep.attacks) {
                config.attack.kind = a.kind;
                for (double value : a.values) {
                    config.attack.value = attack_value_to_si(a.kind, value);
                    for (double start : a.starts) {
                        config.attack.start = start;
                        for (std::size_t r = 0; r < sweep.repeats; ++r) {
                            config.seed = sweep.base_seed + r;
                            runs.push_back({runs.size(), config});
                        }
                    }
                }
            }
        }
    };
    for (ControllerKind kind : sweep.controllers) {
        PlatoonRunConfig config = sweep.base;
        config.controller.kind = kind;
        if (kind == ControllerKind::Cacc) {
            for (double gap : sweep.cacc_spacings) {
                config.controller.cacc_gap = gap;
                emit(config);
            }
        } else {
            emit(config);
        }
    }
    return runs;
}

double spacing_param(const ControllerParams& p) {
    switch (p.kind) {
    case ControllerKind::Cacc: return p.cacc_gap;
    case ControllerKind::Ploeg: return p.ploeg_h;
    case ControllerKind::Acc: return p.acc_headway;
    case ControllerKind::Consensus: return p.cons_h;
    }
    return p.cacc_gap;
}

CsvRecord describe_run(const PlannedRun& run) {
    const PlatoonRunConfig& c = run.config;
    CsvRecord record;
    record.run_id = run.run_id;
    record.seed = c.seed;
    record.controller = c.controller.kind;
    record.spacing_param = spacing_param(c.controller);
    record.target_speed_kmh = c.target_speed_kmh;
    record.attack_kind = c.attack.kind;
    record.attack_value = attack_value_from_si(c.attack.kind, c.attack.value);
    record.attack_start = c.attack.start;
    return record;
}

CsvRecord execute_run(const PlannedRun& run) {
    CsvRecord record = describe_run(run);
    try {
        record.result = run_scenario(run.config).result;
    } catch (const std::exception& e) {
        record.error = e.what();
    }
    return record;
}

std::vector<CsvRecord> execute_sweep(const std::vector<PlannedRun>& runs, std::size_t workers) {
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, std::max<std::size_t>(runs.size(), 1));

    // Each slot is written by exactly one worker, so the output order is the
    // input order no matter how the runs interleave.
    std::vector<CsvRecord> records(runs.size());
    std::atomic<std::size_t> next{0};
    const auto work = [&] {
        for (std::size_t i = next++; i < runs.size(); i = next++) records[i] = execute_run(runs[i]);
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    std::sort(records.begin(), records.end(),
              [](const CsvRecord& a, const CsvRecord& b) { return a.run_id < b.run_id; });
    return records;
}

void write_csv_header(std::ostream& out) { out << kCsvHeader << '\n'; }

void write_csv_row(std::ostream& out, const CsvRecord& r) {
    out << r.run_id << ',' << r.seed << ',' << to_string(r.controller) << ','
        << format_number("%g", r.spacing_param) << ',' << format_number("%g", r.target_speed_kmh) << ','
        << to_string(r.attack_kind) << ',' << format_number("%.10g", r.attack_value) << ','
        << format_number("%g", r.attack_start) << ',';
    if (!r.result) {
        out << "error,,,,,,\n";
        return;
    }
    const RunResult& m = *r.result;
    out << (m.crashed ? "true" : "false") << ',';
    if (m.crashed) {
        out << format_number("%.2f", *m.crash_time) << ',' << *m.crash_rear_index << ','
            << format_number("%.6f", *m.delta_v) << ',';
    } else {
        out << ",,,";
    }
    out << format_number("%.6f", m.max_spacing_error) << ','
        << format_number("%.6f", m.avg_max_spacing_error) << ','
        << format_number("%.6f", m.avg_max_abs_accel) << '\n';
}

void write_csv(std::ostream& out, const std::vector<CsvRecord>& records) {
    write_csv_header(out);
    for (const CsvRecord& r : records) write_csv_row(out, r);
}

} // namespace platoon
