#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "platoon/vehicle.hpp"

namespace platoon {

// Tolerance for comparing simulation times built as step * dt.
inline constexpr double kTimeEpsilon = 1e-9;

struct Beacon {
    std::size_t sender = 0;
    std::uint64_t seq = 0;
    double timestamp = 0.0; // s, emission time
    double position = 0.0;  // m
    double speed = 0.0;     // m/s
    double accel = 0.0;     // m/s^2, actual
    double cmd_accel = 0.0; // m/s^2, commanded

    friend bool operator==(const Beacon&, const Beacon&) = default;
};

// Snapshot of the sender's ground truth at time t.
Beacon emit_beacon(const VehicleState& state, double t, std::uint64_t seq);

// The newest beacon received from each platoon member, with its receipt time.
class NeighborTable {
public:
    struct Entry {
        Beacon beacon;
        double received_at = 0.0;
    };

    explicit NeighborTable(std::size_t members = 0) : entries_(members) {}

    std::size_t size() const { return entries_.size(); }

    // Keeps the newer beacon when both carry the same sender.
    void update(const Beacon& beacon, double received_at);

    const std::optional<Entry>& entry(std::size_t member) const { return entries_.at(member); }

    // Entry of `member` if it was received no longer than max_age before now.
    const Entry* fresh(std::size_t member, double now, double max_age) const;

private:
    std::vector<std::optional<Entry>> entries_;
};

} // namespace platoon
