#include "platoon/beacon.hpp"

namespace platoon {

Beacon emit_beacon(const VehicleState& state, double t, std::uint64_t seq) {
    return {state.index, seq, t, state.position, state.speed, state.accel, state.cmd_accel};
}

void NeighborTable::update(const Beacon& beacon, double received_at) {
    auto& slot = entries_.at(beacon.sender);
    if (slot && slot->beacon.seq > beacon.seq) return;
    slot = Entry{beacon, received_at};
}

const NeighborTable::Entry* NeighborTable::fresh(std::size_t member, double now, double max_age) const {
    const auto& slot = entries_.at(member);
    if (!slot || now - slot->received_at > max_age + kTimeEpsilon) return nullptr;
    return &*slot;
}

} // namespace platoon
