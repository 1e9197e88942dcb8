#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

#include "platoon/attack.hpp"
#include "platoon/beacon.hpp"
#include "platoon/controllers.hpp"
#include "platoon/leader.hpp"
#include "platoon/metrics.hpp"
#include "platoon/trace.hpp"
#include "platoon/vehicle.hpp"

namespace platoon {

struct PlatoonRunConfig {
    ControllerParams controller;
    std::size_t platoon_size = 8;
    double target_speed_kmh = 100.0;
    double oscillation_amplitude_kmh = 10.0;
    double oscillation_period = 5.0; // s
    double oscillation_start = 10.0; // s
    AttackSpec attack;               // attack.attacker is the attacker index
    std::uint64_t seed = 1;
    double duration = 60.0; // s
    double dt = 0.01;       // s
    std::size_t repeats = 5;
    double beacon_period = 0.1; // s
    double loss_probability = 0.0;
    DrivetrainParams drivetrain;
    double vehicle_length = 4.0;    // m
    double leader_speed_gain = 1.0; // 1/s
    // Adds actuator_lag times the profile jerk to the leader command so the
    // realized acceleration stays in phase with the profile.
    bool leader_lag_compensation = true;
};

// Throws ConfigError naming the offending field.
void validate(const PlatoonRunConfig& config);

LeaderProfile leader_profile(const PlatoonRunConfig& config);

// Hooks for tests and diagnostics; every method defaults to a no-op.
class RunObserver {
public:
    virtual ~RunObserver() = default;
    // `sent` is what went on air, `truthful` the unmodified beacon.
    virtual void on_beacon(const Beacon& /*truthful*/, const Beacon& /*sent*/) {}
    virtual void on_reception(std::size_t /*receiver*/, const Beacon& /*beacon*/, double /*t*/) {}
    // Called after the controllers ran at time t, before integration.
    virtual void on_control(double /*t*/, std::span<const VehicleState> /*states*/,
                            std::span<const NeighborTable> /*tables*/,
                            std::span<const ControlMode> /*modes*/) {}
};

struct RunOutput {
    RunTrace trace;
    RunResult result;
    std::optional<CollisionEvent> collision;
};

// Simulates one platoon run from a steady formation at target speed until
// `duration` or the first collision.
RunOutput run_scenario(const PlatoonRunConfig& config, RunObserver* observer = nullptr);

} // namespace platoon
