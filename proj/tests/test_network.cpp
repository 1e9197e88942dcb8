#include <doctest.h>

#include <algorithm>
#include <vector>

#include "platoon/attack.hpp"
#include "platoon/beacon.hpp"
#include "platoon/channel.hpp"

using namespace platoon;

namespace {

VehicleState vehicle(std::size_t index, double p, double v, double a) {
    VehicleState s;
    s.index = index;
    s.position = p;
    s.speed = v;
    s.accel = a;
    return s;
}

AttackSpec attack(AttackKind kind, double value, double start) {
    AttackSpec a;
    a.kind = kind;
    a.value = value;
    a.start = start;
    return a;
}

std::vector<std::size_t> others(std::size_t n, std::size_t sender) {
    std::vector<std::size_t> r;
    for (std::size_t i = 0; i < n; ++i)
        if (i != sender) r.push_back(i);
    return r;
}

} // namespace

TEST_CASE("beacons carry ground truth and the emission time") {
    const Beacon b = emit_beacon(vehicle(2, 100.0, 27.78, 0.0), 1.5, 7);
    CHECK(b.sender == 2);
    CHECK(b.seq == 7);
    CHECK(b.timestamp == 1.5);
    CHECK(b.position == 100.0);
    CHECK(b.speed == 27.78);
    CHECK(b.accel == 0.0);
}

TEST_CASE("neighbor tables keep the newest beacon per sender") {
    NeighborTable table(3);
    Beacon b = emit_beacon(vehicle(1, 10.0, 1.0, 0.0), 0.1, 5);
    table.update(b, 0.1);
    Beacon older = b;
    older.seq = 4;
    older.position = -1.0;
    table.update(older, 0.2);
    REQUIRE(table.entry(1).has_value());
    CHECK(table.entry(1)->beacon.seq == 5);
    CHECK(table.entry(1)->received_at == 0.1);
    CHECK_FALSE(table.entry(0).has_value());

    CHECK(table.fresh(1, 0.4, 0.3) != nullptr); // age 0.3 up to float noise
    CHECK(table.fresh(1, 0.41, 0.3) == nullptr);
}

TEST_CASE("position shift grows linearly from the attack start") {
    const AttackSpec a = attack(AttackKind::PositionShift, 3.0, 30.0);
    Beacon b = emit_beacon(vehicle(3, 500.0, 27.0, 0.0), 32.0, 1);
    const Beacon m = mutate_beacon(b, a, 32.0);
    CHECK(m.position == doctest::Approx(506.0).epsilon(1e-12));
    CHECK(m.speed == b.speed);
    CHECK(m.accel == b.accel);
}

TEST_CASE("constant acceleration falsifies both acceleration fields only") {
    const AttackSpec a = attack(AttackKind::ConstAccel, -30.0, 30.0);
    VehicleState s = vehicle(3, 500.0, 27.0, 0.4);
    s.cmd_accel = 0.3;
    const Beacon b = emit_beacon(s, 31.0, 1);
    const Beacon m = mutate_beacon(b, a, 31.0);
    CHECK(m.accel == -30.0);
    CHECK(m.cmd_accel == -30.0);
    CHECK(m.position == b.position);
    CHECK(m.speed == b.speed);
    CHECK(s.accel == 0.4);
}

TEST_CASE("constant speed replaces the speed field") {
    const AttackSpec a = attack(AttackKind::ConstSpeed, 41.0, 30.0);
    const Beacon b = emit_beacon(vehicle(3, 500.0, 27.0, 0.4), 31.0, 1);
    const Beacon m = mutate_beacon(b, a, 31.0);
    CHECK(m.speed == 41.0);
    CHECK(m.position == b.position);
    CHECK(m.accel == b.accel);
}

TEST_CASE("beacons before the start, from other senders, or under jam/none are untouched") {
    const Beacon b = emit_beacon(vehicle(3, 500.0, 27.0, 0.4), 29.9, 1);
    CHECK(mutate_beacon(b, attack(AttackKind::PositionShift, 3.0, 30.0), 29.9) == b);
    const Beacon other = emit_beacon(vehicle(2, 500.0, 27.0, 0.4), 31.0, 1);
    CHECK(mutate_beacon(other, attack(AttackKind::ConstAccel, 10.0, 30.0), 31.0) == other);
    CHECK(mutate_beacon(b, attack(AttackKind::Jam, 0.0, 0.0), 31.0) == b);
    CHECK(mutate_beacon(b, attack(AttackKind::None, 0.0, 0.0), 31.0) == b);
}

TEST_CASE("attack kind names round-trip") {
    for (auto k : {AttackKind::None, AttackKind::Jam, AttackKind::PositionShift, AttackKind::ConstSpeed,
                   AttackKind::ConstAccel})
        CHECK(parse_attack_kind(to_string(k)) == k);
    CHECK_THROWS(parse_attack_kind("replay"));
}

TEST_CASE("an active jam drops every reception") {
    ChannelState ch;
    update_channel(ch, attack(AttackKind::Jam, 0.0, 30.0), 29.9);
    CHECK_FALSE(ch.jam_active);
    update_channel(ch, attack(AttackKind::Jam, 0.0, 30.0), 30.0);
    CHECK(ch.jam_active);
    const auto r = others(8, 0);
    const auto flags = deliver(emit_beacon(vehicle(0, 0, 0, 0), 30.0, 1), r, ch);
    CHECK(std::count(flags.begin(), flags.end(), true) == 0);
}

TEST_CASE("jamming can be scoped to chosen receivers") {
    ChannelState ch;
    AttackSpec a = attack(AttackKind::Jam, 0.0, 0.0);
    a.jam_receivers = {2, 5};
    update_channel(ch, a, 1.0);
    const auto r = others(8, 0);
    const auto flags = deliver(emit_beacon(vehicle(0, 0, 0, 0), 1.0, 1), r, ch);
    for (std::size_t k = 0; k < r.size(); ++k) CHECK(flags[k] == (r[k] != 2 && r[k] != 5));
}

TEST_CASE("a lossless channel updates all N-1 receivers") {
    ChannelState ch;
    std::vector<NeighborTable> tables(8, NeighborTable(8));
    const auto r = others(8, 3);
    const Beacon b = emit_beacon(vehicle(3, 1, 2, 3), 0.0, 0);
    CHECK(deliver_to_tables(b, r, ch, 0.0, tables) == 7);
    for (std::size_t i : r) CHECK(tables[i].entry(3)->beacon == b);
    CHECK_FALSE(tables[3].entry(3).has_value());
}

TEST_CASE("loss probability 1 receives nothing, like a jam from t = 0") {
    ChannelState lossy;
    lossy.loss_probability = 1.0;
    ChannelState jammed;
    update_channel(jammed, attack(AttackKind::Jam, 0.0, 0.0), 0.0);
    const auto r = others(8, 1);
    for (std::uint64_t seq = 0; seq < 600; ++seq) {
        const Beacon b = emit_beacon(vehicle(1, 0, 0, 0), 0.1 * seq, seq);
        CHECK(deliver(b, r, lossy) == deliver(b, r, jammed));
    }
}

TEST_CASE("random loss is a pure function of seed, sender, seq and receiver") {
    ChannelState ch;
    ch.loss_probability = 0.3;
    ch.seed = 42;
    std::size_t received = 0, total = 0;
    for (std::size_t sender = 0; sender < 8; ++sender) {
        for (std::uint64_t seq = 0; seq < 500; ++seq) {
            Beacon b = emit_beacon(vehicle(sender, 0, 0, 0), 0.1 * seq, seq);
            for (std::size_t r = 0; r < 8; ++r) {
                const bool first = survives_loss(ch, b, r);
                Beacon altered = b;
                altered.position = 1e6; // payload must not matter
                CHECK(survives_loss(ch, altered, r) == first);
                received += first;
                ++total;
            }
        }
    }
    const double rate = static_cast<double>(received) / static_cast<double>(total);
    CHECK(rate == doctest::Approx(0.7).epsilon(0.02));

    ChannelState other = ch;
    other.seed = 43;
    std::size_t differ = 0;
    for (std::uint64_t seq = 0; seq < 1000; ++seq) {
        const Beacon b = emit_beacon(vehicle(1, 0, 0, 0), 0.0, seq);
        differ += survives_loss(ch, b, 2) != survives_loss(other, b, 2);
    }
    CHECK(differ > 100);
}
