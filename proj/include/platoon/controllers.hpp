#pragma once

#include <cstddef>
#include <span>
#include <string_view>

#include "platoon/beacon.hpp"
#include "platoon/vehicle.hpp"

namespace platoon {

enum class ControllerKind { Acc, Cacc, Ploeg, Consensus };

std::string_view to_string(ControllerKind kind);
// Case-insensitive; throws std::invalid_argument for unknown names.
ControllerKind parse_controller_kind(std::string_view name);

struct ControllerParams {
    ControllerKind kind = ControllerKind::Cacc;

    // Constant-spacing CACC.
    double cacc_gap = 5.0;      // m
    double cacc_c1 = 0.5;       // leader vs predecessor weighting
    double cacc_xi = 1.0;       // damping ratio
    double cacc_omega_n = 0.2;  // rad/s
    // When false, CACC keeps using the newest beacons however old they are and
    // only the gap-overshoot check can hand control to ACC.
    bool cacc_degrade_on_stale = false;

    // Ploeg constant time headway CACC.
    double ploeg_h = 0.5;   // s
    double ploeg_kp = 0.2;
    double ploeg_kd = 0.7;
    double ploeg_r0 = 2.0;  // m, standstill distance
    // Predecessor beacon age beyond which the feedforward switches to the
    // radar-based estimate.
    double ploeg_ff_timeout = 0.15; // s

    // ACC, also the degradation fallback.
    double acc_headway = 1.2; // s
    double acc_lambda = 0.1;  // 1/s

    // Consensus.
    double cons_kp = 0.7;  // 1/s^2
    double cons_kd = 1.75; // 1/s
    double cons_h = 0.8;   // s
    double cons_r0 = 3.0;  // m
    // Weight of the leader's term in the average; every other member counts 1.
    double cons_leader_weight = 4.0;

    double fallback_factor = 2.0;
    double beacon_timeout = 0.3; // s
};

// Throws std::invalid_argument naming the offending field.
void validate(const ControllerParams& params);

struct RadarReading {
    double gap = 0.0;       // m, own front bumper to predecessor rear bumper
    double rel_speed = 0.0; // m/s, predecessor speed minus own speed
    bool valid = false;
};

// Exact radar from ground truth; invalid when the vehicles overlap.
RadarReading measure_radar(const VehicleState& predecessor, const VehicleState& own);

// Everything a control law may read.
struct ControllerInput {
    const VehicleState& own;
    RadarReading radar;
    const NeighborTable& neighbors;
    double now = 0.0;
    const ControllerParams& params;
    std::span<const std::size_t> platoon_order;

    // Rank of the owning vehicle in platoon_order.
    std::size_t rank() const;
    std::size_t predecessor() const;
    std::size_t leader() const { return platoon_order.front(); }
};

double desired_gap(ControllerKind kind, double own_speed, const ControllerParams& params);

// Cooperative laws report `degraded` when the beacons they depend on are
// missing or older than beacon_timeout. The gate then takes over.
struct LawOutput {
    double u = 0.0;
    bool degraded = false;
};

double acc_law(const ControllerInput& input);

LawOutput cacc_law(const ControllerInput& input);

struct PloegState {
    double u_prev = 0.0;
};

struct PloegOutput {
    double u = 0.0;
    PloegState next;
    bool degraded = false;
    bool estimating = false; // feedforward came from the estimator
};

// `estimated_predecessor_accel` replaces the beaconed command when the
// predecessor beacon is older than ploeg_ff_timeout.
PloegOutput ploeg_law(const ControllerInput& input, const PloegState& state,
                      double estimated_predecessor_accel, double dt);

LawOutput consensus_law(const ControllerInput& input);

// Falls back to acc_law when the law is degraded or the gap has grown beyond
// fallback_factor times the controller's desired gap.
bool fallback_required(bool degraded, const ControllerInput& input);
double fallback_gate(bool degraded, const ControllerInput& input, double candidate_u);

// Radar-only predecessor acceleration estimate: own acceleration plus an
// exponentially smoothed finite difference of the relative speed.
class PredecessorAccelEstimator {
public:
    static constexpr double kSmoothing = 0.05;

    explicit PredecessorAccelEstimator(double smoothing = kSmoothing) : smoothing_(smoothing) {}

    void update(const RadarReading& radar, double dt);
    double estimate(double own_accel) const;
    std::size_t samples() const { return samples_; }

private:
    double smoothing_;
    double last_rel_speed_ = 0.0;
    double rel_accel_ = 0.0;
    std::size_t samples_ = 0;
};

// Runs the estimator over a radar history. Fewer than two samples yield own_accel.
double estimate_predecessor_accel(std::span<const RadarReading> history, double own_accel, double dt);

enum class ControlMode { Leader, Cooperative, Estimating, Fallback };

// One follower's upper controller: selects the law for params.kind, carries the
// Ploeg integrator and estimator state, and applies the fallback gate.
class FollowerController {
public:
    double command(const ControllerInput& input, double dt);
    ControlMode mode() const { return mode_; }

private:
    PloegState ploeg_;
    PredecessorAccelEstimator estimator_;
    ControlMode mode_ = ControlMode::Cooperative;
};

} // namespace platoon
