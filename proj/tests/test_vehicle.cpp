#include <doctest.h>

#include "platoon/vehicle.hpp"

using namespace platoon;

TEST_CASE("coasting keeps speed and advances position by speed * dt") {
    VehicleState s;
    s.speed = 20.0;
    const VehicleState next = integrate_step(s, 0.0, 0.01, DrivetrainParams{});
    CHECK(next.speed == 20.0);
    CHECK(next.position == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(next.accel == 0.0);
}

TEST_CASE("first-order lag moves accel by u * dt / lag") {
    VehicleState s;
    const VehicleState next = integrate_step(s, 1.0, 0.01, DrivetrainParams{});
    CHECK(next.accel == doctest::Approx(1.0 * 0.01 / 0.5).epsilon(1e-12));
    CHECK(next.cmd_accel == 1.0);
}

TEST_CASE("semi-implicit Euler uses the new speed for position") {
    VehicleState s;
    s.speed = 10.0;
    s.accel = 1.0;
    const double dt = 0.01;
    const VehicleState next = integrate_step(s, 1.0, dt, DrivetrainParams{});
    const double v = 10.0 + 1.0 * dt;
    CHECK(next.speed == doctest::Approx(v).epsilon(1e-14));
    CHECK(next.position == doctest::Approx(v * dt).epsilon(1e-14));
}

TEST_CASE("commands are clamped to the drivetrain limits") {
    const DrivetrainParams d;
    CHECK(clamp_command(-30.0, d) == -8.0);
    CHECK(clamp_command(30.0, d) == 2.5);
    CHECK(clamp_command(1.0, d) == 1.0);

    VehicleState s;
    s.speed = 30.0;
    for (int k = 0; k < 2000; ++k) {
        s = integrate_step(s, -30.0, 0.01, d);
        CHECK(s.accel >= -8.0);
        CHECK(s.cmd_accel == -8.0);
    }
    CHECK(s.accel < -7.9);
}

TEST_CASE("speed never goes negative") {
    VehicleState s;
    s.speed = 0.5;
    s.accel = -8.0;
    for (int k = 0; k < 200; ++k) {
        s = integrate_step(s, -8.0, 0.01, DrivetrainParams{});
        CHECK(s.speed >= 0.0);
    }
    CHECK(s.speed == 0.0);
}

TEST_CASE("zero command from rest acceleration holds speed exactly over a long horizon") {
    VehicleState s;
    s.speed = 27.777777777777779;
    for (int k = 0; k < 600000; ++k) s = integrate_step(s, 0.0, 0.01, DrivetrainParams{});
    CHECK(s.speed == 27.777777777777779);
    CHECK(s.accel == 0.0);
}
