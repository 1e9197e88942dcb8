#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "platoon/vehicle.hpp"

namespace platoon {

struct Collision {
    std::size_t rear_index = 0; // the vehicle that ran into its predecessor
    double delta_v = 0.0;       // m/s, rear speed minus front speed at contact
};

// Returns the contact with the smallest rear index, if any. States must be
// ordered by platoon index. Contact means the rear vehicle's front bumper
// reached the predecessor's rear bumper.
std::optional<Collision> detect_first_collision(std::span<const VehicleState> states);

} // namespace platoon
