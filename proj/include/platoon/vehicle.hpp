#pragma once

#include <cstddef>

namespace platoon {

// Kinematic truth of one vehicle. Position is the front bumper along the
// track, increasing in the direction of travel.
struct VehicleState {
    std::size_t index = 0;  // 0 = leader
    double position = 0.0;  // m
    double speed = 0.0;     // m/s, never negative
    double accel = 0.0;     // m/s^2, realized
    double cmd_accel = 0.0; // m/s^2, controller output before actuator lag
    double length = 4.0;    // m
};

struct DrivetrainParams {
    double actuator_lag = 0.5; // s, first-order lag time constant
    double accel_limit = 2.5;  // m/s^2
    double decel_limit = -8.0; // m/s^2
};

double clamp_command(double u, const DrivetrainParams& drivetrain);

/// Advances one vehicle by dt. The command u is clamped to the drivetrain
/// limits, passed through a first-order lag, and integrated with
/// semi-implicit Euler (speed first, then position with the new speed).
/// Speed is clamped at standstill.
VehicleState integrate_step(const VehicleState& state, double u, double dt,
                            const DrivetrainParams& drivetrain);

} // namespace platoon
