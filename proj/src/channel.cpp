#include "platoon/channel.hpp"

#include <algorithm>

namespace platoon {

namespace {

std::uint64_t mix(std::uint64_t x) {
    // splitmix64 finalizer
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

bool ChannelState::jammed(std::size_t receiver) const {
    if (!jam_active) return false;
    return jam_receivers.empty() ||
           std::find(jam_receivers.begin(), jam_receivers.end(), receiver) != jam_receivers.end();
}

void update_channel(ChannelState& channel, const AttackSpec& attack, double t) {
    channel.jam_active = attack.kind == AttackKind::Jam && t >= attack.start - kTimeEpsilon;
    channel.jam_receivers = attack.jam_receivers;
}

bool survives_loss(const ChannelState& channel, const Beacon& beacon, std::size_t receiver) {
    if (channel.loss_probability <= 0.0) return true;
    if (channel.loss_probability >= 1.0) return false;
    std::uint64_t h = mix(channel.seed);
    h = mix(h ^ beacon.sender);
    h = mix(h ^ beacon.seq);
    h = mix(h ^ receiver);
    const double uniform = static_cast<double>(h >> 11) * 0x1.0p-53;
    return uniform >= channel.loss_probability;
}

std::vector<bool> deliver(const Beacon& beacon, std::span<const std::size_t> receivers,
                          const ChannelState& channel) {
    std::vector<bool> received(receivers.size(), false);
    for (std::size_t k = 0; k < receivers.size(); ++k) {
        const std::size_t r = receivers[k];
        received[k] = !channel.jammed(r) && survives_loss(channel, beacon, r);
    }
    return received;
}

std::size_t deliver_to_tables(const Beacon& beacon, std::span<const std::size_t> receivers,
                              const ChannelState& channel, double t,
                              std::span<NeighborTable> tables) {
    const auto received = deliver(beacon, receivers, channel);
    std::size_t count = 0;
    for (std::size_t k = 0; k < receivers.size(); ++k) {
        if (!received[k]) continue;
        tables[receivers[k]].update(beacon, t);
        ++count;
    }
    return count;
}

} // namespace platoon
