#pragma once

namespace platoon {

// Sinusoidal speed profile of the platoon leader. Before oscillation_start the
// leader holds target_speed; afterwards the desired speed is
//   v(t) = target_speed - amplitude * cos(2*pi*(t - oscillation_start) / period)
// so the desired acceleration is positive on
// [oscillation_start + k*period, oscillation_start + k*period + period/2).
struct LeaderProfile {
    double target_speed = 100.0 / 3.6; // m/s
    double amplitude = 10.0 / 3.6;     // m/s
    double period = 5.0;               // s
    double oscillation_start = 10.0;   // s
};

struct LeaderSetpoint {
    double speed = 0.0; // m/s
    double accel = 0.0; // m/s^2
    double jerk = 0.0;  // m/s^3
};

// Throws std::invalid_argument when the profile violates its invariants.
void validate(const LeaderProfile& profile);

LeaderSetpoint leader_setpoint(double t, const LeaderProfile& profile);

// Feedforward plus proportional speed tracking:
//   u = a_d + lag * jerk_d + k_v * (v_d - v)
// The jerk term cancels the phase lag of a first-order actuator with time
// constant `lag`; pass 0 for plain feedforward.
double leader_command(const LeaderSetpoint& setpoint, double speed, double speed_gain,
                      double lag = 0.0);

} // namespace platoon
