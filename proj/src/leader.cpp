#include "platoon/leader.hpp"

#include <cmath>
#include <numbers>

#include "platoon/config_error.hpp"

namespace platoon {

void validate(const LeaderProfile& profile) {
    if (!(profile.period > 0.0)) throw ConfigError("oscillation_period_s", "must be positive");
    if (!(profile.amplitude >= 0.0)) throw ConfigError("oscillation_amplitude_kmh", "must be non-negative");
    if (!(profile.target_speed > profile.amplitude))
        throw ConfigError("target_speed_kmh", "must exceed the oscillation amplitude");
    if (!(profile.oscillation_start >= 0.0))
        throw ConfigError("oscillation_start_s", "must be non-negative");
}

LeaderSetpoint leader_setpoint(double t, const LeaderProfile& profile) {
    if (t < profile.oscillation_start) return {profile.target_speed, 0.0, 0.0};
    const double omega = 2.0 * std::numbers::pi / profile.period;
    const double phase = omega * (t - profile.oscillation_start);
    return {profile.target_speed - profile.amplitude * std::cos(phase),
            profile.amplitude * omega * std::sin(phase),
            profile.amplitude * omega * omega * std::cos(phase)};
}

double leader_command(const LeaderSetpoint& setpoint, double speed, double speed_gain, double lag) {
    return setpoint.accel + lag * setpoint.jerk + speed_gain * (setpoint.speed - speed);
}

} // namespace platoon
