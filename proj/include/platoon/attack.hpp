#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "platoon/beacon.hpp"

namespace platoon {

enum class AttackKind { None, Jam, PositionShift, ConstSpeed, ConstAccel };

std::string_view to_string(AttackKind kind);
// Accepts the names produced by to_string; throws std::invalid_argument otherwise.
AttackKind parse_attack_kind(std::string_view name);

// The active attack of a run. `value` is the shift rate (m/s) for
// PositionShift, the claimed speed (m/s) for ConstSpeed and the claimed
// acceleration (m/s^2) for ConstAccel; it is unused otherwise.
struct AttackSpec {
    AttackKind kind = AttackKind::None;
    double value = 0.0;
    double start = 0.0;        // s
    std::size_t attacker = 3;  // never the leader
    // Receivers affected by jamming; empty means every receiver.
    std::vector<std::size_t> jam_receivers;

    bool is_injection() const {
        return kind == AttackKind::PositionShift || kind == AttackKind::ConstSpeed ||
               kind == AttackKind::ConstAccel;
    }
};

// Falsifies the attacker's own beacon from `start` on. The attacker's vehicle
// keeps driving on true data; only the message changes.
Beacon mutate_beacon(const Beacon& beacon, const AttackSpec& attack, double t);

} // namespace platoon
