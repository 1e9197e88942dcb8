#include "platoon/attack.hpp"

#include <stdexcept>
#include <string>

namespace platoon {

std::string_view to_string(AttackKind kind) {
    switch (kind) {
    case AttackKind::None: return "none";
    case AttackKind::Jam: return "jam";
    case AttackKind::PositionShift: return "pos_shift";
    case AttackKind::ConstSpeed: return "const_speed";
    case AttackKind::ConstAccel: return "const_accel";
    }
    return "none";
}

AttackKind parse_attack_kind(std::string_view name) {
    for (auto kind : {AttackKind::None, AttackKind::Jam, AttackKind::PositionShift,
                      AttackKind::ConstSpeed, AttackKind::ConstAccel}) {
        if (name == to_string(kind)) return kind;
    }
    throw std::invalid_argument("unknown attack kind '" + std::string(name) + "'");
}

Beacon mutate_beacon(const Beacon& beacon, const AttackSpec& attack, double t) {
    if (beacon.sender != attack.attacker || t < attack.start - kTimeEpsilon) return beacon;
    Beacon out = beacon;
    switch (attack.kind) {
    case AttackKind::PositionShift:
        out.position += attack.value * (t - attack.start);
        break;
    case AttackKind::ConstSpeed:
        out.speed = attack.value;
        break;
    case AttackKind::ConstAccel:
        out.accel = attack.value;
        out.cmd_accel = attack.value;
        break;
    case AttackKind::None:
    case AttackKind::Jam:
        break;
    }
    return out;
}

} // namespace platoon
