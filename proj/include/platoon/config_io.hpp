#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "platoon/attack.hpp"
#include "platoon/scenario.hpp"

namespace platoon {

// Run configs are flat JSON objects. Every key is optional and defaults to the
// PlatoonRunConfig default; unknown keys are rejected. Units follow the key
// suffix (_s, _m, _kmh). Attack values keep the units of their sweep tables:
// m/s for pos_shift, km/h for const_speed, m/s^2 for const_accel.
//
// All parse and load functions throw ConfigError naming the offending key.
PlatoonRunConfig parse_run_config(std::string_view json_text);
PlatoonRunConfig load_run_config(const std::filesystem::path& path);

// Applies the keys of a flat JSON object on top of `config`.
void apply_run_overrides(PlatoonRunConfig& config, std::string_view json_text);

// Converts an attack value from config units to the SI value carried by
// AttackSpec, and back.
double attack_value_to_si(AttackKind kind, double value);
double attack_value_from_si(AttackKind kind, double value);

std::string read_text_file(const std::filesystem::path& path);

} // namespace platoon
