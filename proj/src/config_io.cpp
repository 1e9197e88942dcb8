#include "platoon/config_io.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "platoon/config_error.hpp"

namespace platoon {

namespace {

using nlohmann::json;

constexpr double kKmh = 1.0 / 3.6;

double number(const json& v, const std::string& key) {
    if (!v.is_number()) throw ConfigError(key, "expected a number");
    return v.get<double>();
}

bool boolean(const json& v, const std::string& key) {
    if (!v.is_boolean()) throw ConfigError(key, "expected true or false");
    return v.get<bool>();
}

std::string text(const json& v, const std::string& key) {
    if (!v.is_string()) throw ConfigError(key, "expected a string");
    return v.get<std::string>();
}

std::size_t count(const json& v, const std::string& key) {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
        throw ConfigError(key, "expected a non-negative integer");
    return v.get<std::size_t>();
}

using Setter = std::function<void(PlatoonRunConfig&, const json&, const std::string&)>;

template <typename T>
Setter num(T PlatoonRunConfig::*member) {
    return [member](PlatoonRunConfig& c, const json& v, const std::string& k) { c.*member = number(v, k); };
}

Setter ctl(double ControllerParams::*member) {
    return [member](PlatoonRunConfig& c, const json& v, const std::string& k) {
        c.controller.*member = number(v, k);
    };
}

Setter drive(double DrivetrainParams::*member) {
    return [member](PlatoonRunConfig& c, const json& v, const std::string& k) {
        c.drivetrain.*member = number(v, k);
    };
}

const std::map<std::string, Setter>& setters() {
    static const std::map<std::string, Setter> table = {
        {"controller",
         [](PlatoonRunConfig& c, const json& v, const std::string& k) {
             try {
                 c.controller.kind = parse_controller_kind(text(v, k));
             } catch (const ConfigError&) {
                 throw;
             } catch (const std::invalid_argument& e) {
                 throw ConfigError(k, e.what());
             }
         }},
        {"cacc_gap", ctl(&ControllerParams::cacc_gap)},
        {"cacc_c1", ctl(&ControllerParams::cacc_c1)},
        {"cacc_xi", ctl(&ControllerParams::cacc_xi)},
        {"cacc_omega_n", ctl(&ControllerParams::cacc_omega_n)},
        {"cacc_degrade_on_stale",
         [](PlatoonRunConfig& c, const json& v, const std::string& k) {
             c.controller.cacc_degrade_on_stale = boolean(v, k);
         }},
        {"ploeg_h", ctl(&ControllerParams::ploeg_h)},
        {"ploeg_kp", ctl(&ControllerParams::ploeg_kp)},
        {"ploeg_kd", ctl(&ControllerParams::ploeg_kd)},
        {"ploeg_r0", ctl(&ControllerParams::ploeg_r0)},
        {"ploeg_ff_timeout", ctl(&ControllerParams::ploeg_ff_timeout)},
        {"acc_headway", ctl(&ControllerParams::acc_headway)},
        {"acc_lambda", ctl(&ControllerParams::acc_lambda)},
        {"cons_kp", ctl(&ControllerParams::cons_kp)},
        {"cons_kd", ctl(&ControllerParams::cons_kd)},
        {"cons_h", ctl(&ControllerParams::cons_h)},
        {"cons_r0", ctl(&ControllerParams::cons_r0)},
        {"cons_leader_weight", ctl(&ControllerParams::cons_leader_weight)},
        {"fallback_factor", ctl(&ControllerParams::fallback_factor)},
        {"beacon_timeout", ctl(&ControllerParams::beacon_timeout)},
        {"platoon_size",
         [](PlatoonRunConfig& c, const json& v, const std::string& k) { c.platoon_size = count(v, k); }},
        {"attacker",
         [](PlatoonRunConfig& c, const json& v, const std::string& k) { c.attack.attacker = count(v, k); }},
        {"target_speed_kmh", num(&PlatoonRunConfig::target_speed_kmh)},
        {"oscillation_amplitude_kmh", num(&PlatoonRunConfig::oscillation_amplitude_kmh)},
        {"oscillation_period_s", num(&PlatoonRunConfig::oscillation_period)},
        {"oscillation_start_s", num(&PlatoonRunConfig::oscillation_start)},
        {"attack_kind",
         [](PlatoonRunConfig& c, const json& v, const std::string& k) {
             try {
                 c.attack.kind = parse_attack_kind(text(v, k));
             } catch (const ConfigError&) {
                 throw;
             } catch (const std::invalid_argument& e) {
                 throw ConfigError(k, e.what());
             }
         }},
        {"attack_start_s",
         [](PlatoonRunConfig& c, const json& v, const std::string& k) { c.attack.start = number(v, k); }},
        {"jam_receivers",
         [](PlatoonRunConfig& c, const json& v, const std::string& k) {
             if (!v.is_array()) throw ConfigError(k, "expected a list of vehicle indices");
             c.attack.jam_receivers.clear();
             for (const json& item : v) c.attack.jam_receivers.push_back(count(item, k));
         }},
        {"seed",
         [](PlatoonRunConfig& c, const json& v, const std::string& k) { c.seed = count(v, k); }},
        {"duration_s", num(&PlatoonRunConfig::duration)},
        {"dt_s", num(&PlatoonRunConfig::dt)},
        {"repeats",
         [](PlatoonRunConfig& c, const json& v, const std::string& k) { c.repeats = count(v, k); }},
        {"loss_probability", num(&PlatoonRunConfig::loss_probability)},
        {"beacon_period_s", num(&PlatoonRunConfig::beacon_period)},
        {"actuator_lag_s", drive(&DrivetrainParams::actuator_lag)},
        {"accel_limit", drive(&DrivetrainParams::accel_limit)},
        {"decel_limit", drive(&DrivetrainParams::decel_limit)},
        {"vehicle_length_m", num(&PlatoonRunConfig::vehicle_length)},
        {"leader_speed_gain", num(&PlatoonRunConfig::leader_speed_gain)},
        {"leader_lag_compensation",
         [](PlatoonRunConfig& c, const json& v, const std::string& k) {
             c.leader_lag_compensation = boolean(v, k);
         }},
    };
    return table;
}

json parse_document(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError("<document>", std::string("malformed JSON: ") + e.what());
    }
}

void apply_object(PlatoonRunConfig& config, const json& doc) {
    if (!doc.is_object()) throw ConfigError("<document>", "expected a JSON object");
    // Kind and value may arrive in either order; convert once both are known.
    std::optional<double> raw_value;
    for (const auto& [key, value] : doc.items()) {
        if (key == "attack_value") {
            raw_value = number(value, key);
            continue;
        }
        const auto it = setters().find(key);
        if (it == setters().end()) throw ConfigError(key, "unknown key");
        it->second(config, value, key);
    }
    if (raw_value) config.attack.value = attack_value_to_si(config.attack.kind, *raw_value);
}

} // namespace

double attack_value_to_si(AttackKind kind, double value) {
    return kind == AttackKind::ConstSpeed ? value * kKmh : value;
}

double attack_value_from_si(AttackKind kind, double value) {
    return kind == AttackKind::ConstSpeed ? value / kKmh : value;
}

void apply_run_overrides(PlatoonRunConfig& config, std::string_view json_text) {
    apply_object(config, parse_document(json_text));
}

PlatoonRunConfig parse_run_config(std::string_view json_text) {
    PlatoonRunConfig config;
    apply_object(config, parse_document(json_text));
    validate(config);
    return config;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("--config", "cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

PlatoonRunConfig load_run_config(const std::filesystem::path& path) {
    return parse_run_config(read_text_file(path));
}

} // namespace platoon
