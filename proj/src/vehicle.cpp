#include "platoon/vehicle.hpp"

#include <algorithm>

namespace platoon {

double clamp_command(double u, const DrivetrainParams& drivetrain) {
    return std::clamp(u, drivetrain.decel_limit, drivetrain.accel_limit);
}

VehicleState integrate_step(const VehicleState& state, double u, double dt,
                            const DrivetrainParams& drivetrain) {
    VehicleState next = state;
    next.cmd_accel = clamp_command(u, drivetrain);
    next.accel = state.accel + (next.cmd_accel - state.accel) * (dt / drivetrain.actuator_lag);
    next.speed = std::max(0.0, state.speed + next.accel * dt);
    next.position = state.position + next.speed * dt;
    return next;
}

} // namespace platoon
