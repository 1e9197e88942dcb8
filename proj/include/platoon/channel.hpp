#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "platoon/attack.hpp"
#include "platoon/beacon.hpp"

namespace platoon {

struct ChannelState {
    double loss_probability = 0.0;
    std::uint64_t seed = 0;
    bool jam_active = false;
    // Receivers that jamming applies to; empty means all of them.
    std::vector<std::size_t> jam_receivers;

    bool jammed(std::size_t receiver) const;
};

// Sets jam_active from the attack at time t.
void update_channel(ChannelState& channel, const AttackSpec& attack, double t);

// Pure function of (seed, sender, seq, receiver): whether one reception
// survives random loss. Does not consider jamming.
bool survives_loss(const ChannelState& channel, const Beacon& beacon, std::size_t receiver);

// One flag per receiver. A jammed receiver gets nothing; the others receive
// independently with probability 1 - loss_probability.
std::vector<bool> deliver(const Beacon& beacon, std::span<const std::size_t> receivers,
                          const ChannelState& channel);

// Delivers and writes every successful reception into the receiver's table at
// time t (zero latency). `tables` is indexed by vehicle.
std::size_t deliver_to_tables(const Beacon& beacon, std::span<const std::size_t> receivers,
                              const ChannelState& channel, double t,
                              std::span<NeighborTable> tables);

} // namespace platoon
