#include <doctest.h>

#include <cmath>
#include <numbers>

#include "platoon/config_error.hpp"
#include "platoon/leader.hpp"

using namespace platoon;

namespace {

LeaderProfile profile() {
    LeaderProfile p;
    p.target_speed = 27.78;
    p.amplitude = 2.778;
    p.period = 5.0;
    p.oscillation_start = 10.0;
    return p;
}

} // namespace

TEST_CASE("the leader holds target speed before the oscillation starts") {
    const LeaderSetpoint s = leader_setpoint(5.0, profile());
    CHECK(s.speed == 27.78);
    CHECK(s.accel == 0.0);
    CHECK(s.jerk == 0.0);
}

TEST_CASE("peak desired acceleration sits at the window midpoint") {
    const LeaderSetpoint s = leader_setpoint(31.25, profile());
    const double expected = 2.778 * (2.0 * std::numbers::pi / 5.0);
    CHECK(s.accel == doctest::Approx(expected).epsilon(1e-12));
    CHECK(s.accel == doctest::Approx(3.49).epsilon(1e-3));
}

TEST_CASE("desired acceleration is positive exactly on [t0 + 5k, t0 + 5k + 2.5)") {
    const LeaderProfile p = profile();
    CHECK(leader_setpoint(30.0, p).accel == doctest::Approx(0.0).scale(1.0));
    for (int i = 0; i < 5000; ++i) {
        const double t = 10.0 + 0.01 * i + 0.005; // avoid the exact zero crossings
        const double phase = std::fmod(t - 10.0, 5.0);
        CHECK((leader_setpoint(t, p).accel > 0.0) == (phase < 2.5));
    }
}

TEST_CASE("speed spans [V - A, V + A] and acceleration is its derivative") {
    const LeaderProfile p = profile();
    double lo = 1e9, hi = -1e9;
    for (int i = 0; i <= 5000; ++i) {
        const double t = 10.0 + 0.001 * i;
        const LeaderSetpoint s = leader_setpoint(t, p);
        lo = std::min(lo, s.speed);
        hi = std::max(hi, s.speed);
        const double h = 1e-6;
        const double numeric = (leader_setpoint(t + h, p).speed - leader_setpoint(t - h, p).speed) / (2 * h);
        if (t > 10.0 + h) CHECK(s.accel == doctest::Approx(numeric).epsilon(1e-6));
    }
    CHECK(lo == doctest::Approx(27.78 - 2.778));
    CHECK(hi == doctest::Approx(27.78 + 2.778));
}

TEST_CASE("leader command is feedforward plus proportional speed error") {
    LeaderSetpoint s;
    s.speed = 20.0;
    s.accel = 0.5;
    s.jerk = 2.0;
    CHECK(leader_command(s, 19.0, 1.0) == doctest::Approx(1.5));
    CHECK(leader_command(s, 19.0, 1.0, 0.5) == doctest::Approx(2.5));
}

TEST_CASE("profile validation names the offending field") {
    LeaderProfile p = profile();
    p.period = 0.0;
    try {
        validate(p);
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.field() == "oscillation_period_s");
    }
    p = profile();
    p.amplitude = 30.0;
    CHECK_THROWS_AS(validate(p), ConfigError);
}
