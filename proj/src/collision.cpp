#include "platoon/collision.hpp"

namespace platoon {

std::optional<Collision> detect_first_collision(std::span<const VehicleState> states) {
    for (std::size_t i = 1; i < states.size(); ++i) {
        const VehicleState& front = states[i - 1];
        const VehicleState& rear = states[i];
        if (front.position - rear.position - front.length <= 0.0)
            return Collision{rear.index, rear.speed - front.speed};
    }
    return std::nullopt;
}

} // namespace platoon
