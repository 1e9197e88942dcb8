#include "platoon/scenario.hpp"

#include <cmath>
#include <numeric>
#include <vector>

#include "platoon/channel.hpp"
#include "platoon/collision.hpp"
#include "platoon/config_error.hpp"

namespace platoon {

namespace {

constexpr double kKmh = 1.0 / 3.6;

std::size_t step_count(double duration, double dt) {
    return static_cast<std::size_t>(std::floor(duration / dt + 1e-9));
}

std::vector<double> spacing_errors(std::span<const VehicleState> states, const ControllerParams& params) {
    std::vector<double> errors(states.size(), 0.0);
    for (std::size_t i = 1; i < states.size(); ++i) {
        const double gap = states[i - 1].position - states[i - 1].length - states[i].position;
        errors[i] = gap - desired_gap(params.kind, states[i].speed, params);
    }
    return errors;
}

} // namespace

LeaderProfile leader_profile(const PlatoonRunConfig& config) {
    return {config.target_speed_kmh * kKmh, config.oscillation_amplitude_kmh * kKmh,
            config.oscillation_period, config.oscillation_start};
}

void validate(const PlatoonRunConfig& c) {
    validate(c.controller);
    validate(leader_profile(c));
    if (c.platoon_size < 2) throw ConfigError("platoon_size", "must be at least 2");
    if (c.attack.attacker < 1 || c.attack.attacker >= c.platoon_size)
        throw ConfigError("attacker", "must be a follower index in [1, platoon_size - 1]");
    if (!(c.dt > 0.0)) throw ConfigError("dt_s", "must be positive");
    if (!(c.duration > 0.0)) throw ConfigError("duration_s", "must be positive");
    if (!(c.drivetrain.actuator_lag > 0.0)) throw ConfigError("actuator_lag_s", "must be positive");
    if (c.dt > c.drivetrain.actuator_lag) throw ConfigError("dt_s", "must not exceed actuator_lag_s");
    if (!(c.drivetrain.accel_limit > 0.0)) throw ConfigError("accel_limit", "must be positive");
    if (!(c.drivetrain.decel_limit < 0.0)) throw ConfigError("decel_limit", "must be negative");
    if (!(c.vehicle_length > 0.0)) throw ConfigError("vehicle_length_m", "must be positive");
    if (!(c.leader_speed_gain > 0.0)) throw ConfigError("leader_speed_gain", "must be positive");
    if (c.repeats < 1) throw ConfigError("repeats", "must be at least 1");
    if (!(c.loss_probability >= 0.0 && c.loss_probability <= 1.0))
        throw ConfigError("loss_probability", "must lie in [0, 1]");
    if (!(c.beacon_period > 0.0)) throw ConfigError("beacon_period_s", "must be positive");
    const double ratio = c.beacon_period / c.dt;
    if (std::abs(ratio - std::round(ratio)) > 1e-6 || std::round(ratio) < 1.0)
        throw ConfigError("beacon_period_s", "must be a whole multiple of dt_s");
    if (!(c.attack.start >= 0.0)) throw ConfigError("attack_start_s", "must be non-negative");
    if (c.attack.kind != AttackKind::None && !(c.duration > c.attack.start))
        throw ConfigError("duration_s", "must exceed attack_start_s");
    for (std::size_t r : c.attack.jam_receivers) {
        if (r >= c.platoon_size) throw ConfigError("jam_receivers", "index outside the platoon");
    }
}

RunOutput run_scenario(const PlatoonRunConfig& config, RunObserver* observer) {
    validate(config);
    const LeaderProfile profile = leader_profile(config);
    const ControllerParams& params = config.controller;
    const std::size_t n = config.platoon_size;
    const double dt = config.dt;

    // Steady formation at target speed with zero spacing error.
    std::vector<VehicleState> states(n);
    const double v0 = profile.target_speed;
    const double slot = config.vehicle_length + desired_gap(params.kind, v0, params);
    for (std::size_t i = 0; i < n; ++i) {
        states[i].index = i;
        states[i].length = config.vehicle_length;
        states[i].speed = v0;
        states[i].position = static_cast<double>(n - 1 - i) * slot;
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<NeighborTable> tables(n, NeighborTable(n));
    std::vector<FollowerController> controllers(n);
    std::vector<ControlMode> modes(n, ControlMode::Cooperative);
    modes[0] = ControlMode::Leader;
    std::vector<std::uint64_t> seq(n, 0);
    std::vector<double> commands(n, 0.0);

    ChannelState channel;
    channel.loss_probability = config.loss_probability;
    channel.seed = config.seed;

    std::vector<std::vector<std::size_t>> receivers(n);
    for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t r = 0; r < n; ++r)
            if (r != s) receivers[s].push_back(r);
    }

    const std::size_t steps = step_count(config.duration, dt);
    const auto beacon_every = static_cast<std::size_t>(std::llround(config.beacon_period / dt));

    const double leader_lag = config.leader_lag_compensation ? config.drivetrain.actuator_lag : 0.0;

    RunOutput out;
    out.trace = RunTrace(n, dt, config.duration);
    out.trace.append(states, spacing_errors(states, params));

    for (std::size_t step = 0; step < steps; ++step) {
        const double t = static_cast<double>(step) * dt;

        if (step % beacon_every == 0) {
            update_channel(channel, config.attack, t);
            for (std::size_t s = 0; s < n; ++s) {
                const Beacon truthful = emit_beacon(states[s], t, seq[s]++);
                const Beacon sent = mutate_beacon(truthful, config.attack, t);
                if (observer) observer->on_beacon(truthful, sent);
                const auto flags = deliver(sent, receivers[s], channel);
                for (std::size_t k = 0; k < flags.size(); ++k) {
                    if (!flags[k]) continue;
                    tables[receivers[s][k]].update(sent, t);
                    if (observer) observer->on_reception(receivers[s][k], sent, t);
                }
            }
        }

        commands[0] = leader_command(leader_setpoint(t, profile), states[0].speed,
                                     config.leader_speed_gain, leader_lag);
        for (std::size_t i = 1; i < n; ++i) {
            const ControllerInput input{states[i], measure_radar(states[i - 1], states[i]),
                                        tables[i], t, params, order};
            commands[i] = controllers[i].command(input, dt);
            modes[i] = controllers[i].mode();
        }
        if (observer) observer->on_control(t, states, tables, modes);

        for (std::size_t i = 0; i < n; ++i)
            states[i] = integrate_step(states[i], commands[i], dt, config.drivetrain);
        out.trace.append(states, spacing_errors(states, params));

        if (const auto hit = detect_first_collision(states)) {
            out.collision = CollisionEvent{step + 1, static_cast<double>(step + 1) * dt,
                                           hit->rear_index, hit->delta_v};
            break;
        }
    }

    out.result = aggregate_run(out.trace, out.collision);
    return out;
}

} // namespace platoon
