#include "platoon/controllers.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>

#include "platoon/config_error.hpp"

namespace platoon {

std::string_view to_string(ControllerKind kind) {
    switch (kind) {
    case ControllerKind::Acc: return "ACC";
    case ControllerKind::Cacc: return "CACC";
    case ControllerKind::Ploeg: return "PLOEG";
    case ControllerKind::Consensus: return "CONSENSUS";
    }
    return "CACC";
}

ControllerKind parse_controller_kind(std::string_view name) {
    std::string upper(name);
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    for (auto kind : {ControllerKind::Acc, ControllerKind::Cacc, ControllerKind::Ploeg,
                      ControllerKind::Consensus}) {
        if (upper == to_string(kind)) return kind;
    }
    throw std::invalid_argument("unknown controller '" + std::string(name) + "'");
}

void validate(const ControllerParams& p) {
    const auto positive = [](double v, const char* field) {
        if (!(v > 0.0)) throw ConfigError(field, "must be positive");
    };
    positive(p.cacc_gap, "cacc_gap");
    positive(p.cacc_c1, "cacc_c1");
    positive(p.cacc_xi, "cacc_xi");
    positive(p.cacc_omega_n, "cacc_omega_n");
    positive(p.ploeg_h, "ploeg_h");
    positive(p.ploeg_kp, "ploeg_kp");
    positive(p.ploeg_kd, "ploeg_kd");
    positive(p.ploeg_r0, "ploeg_r0");
    positive(p.ploeg_ff_timeout, "ploeg_ff_timeout");
    positive(p.acc_headway, "acc_headway");
    positive(p.acc_lambda, "acc_lambda");
    positive(p.cons_kp, "cons_kp");
    positive(p.cons_kd, "cons_kd");
    positive(p.cons_h, "cons_h");
    positive(p.cons_r0, "cons_r0");
    positive(p.cons_leader_weight, "cons_leader_weight");
    positive(p.beacon_timeout, "beacon_timeout");
    if (p.cacc_xi < 1.0) throw ConfigError("cacc_xi", "must be at least 1");
    if (!(p.fallback_factor > 1.0)) throw ConfigError("fallback_factor", "must exceed 1");
}

RadarReading measure_radar(const VehicleState& predecessor, const VehicleState& own) {
    const double gap = predecessor.position - predecessor.length - own.position;
    return {gap, predecessor.speed - own.speed, gap > 0.0};
}

std::size_t ControllerInput::rank() const {
    const auto it = std::find(platoon_order.begin(), platoon_order.end(), own.index);
    if (it == platoon_order.end()) throw std::invalid_argument("own index not in platoon order");
    return static_cast<std::size_t>(it - platoon_order.begin());
}

std::size_t ControllerInput::predecessor() const {
    const std::size_t r = rank();
    if (r == 0) throw std::invalid_argument("the leader has no predecessor");
    return platoon_order[r - 1];
}

double desired_gap(ControllerKind kind, double own_speed, const ControllerParams& p) {
    switch (kind) {
    case ControllerKind::Cacc: return p.cacc_gap;
    case ControllerKind::Ploeg: return p.ploeg_r0 + p.ploeg_h * own_speed;
    case ControllerKind::Acc: return p.ploeg_r0 + p.acc_headway * own_speed;
    case ControllerKind::Consensus: return p.cons_r0 + p.cons_h * own_speed;
    }
    return p.cacc_gap;
}

double acc_law(const ControllerInput& in) {
    if (!in.radar.valid) return 0.0;
    const ControllerParams& p = in.params;
    const double e = in.radar.gap - desired_gap(ControllerKind::Acc, in.own.speed, p);
    return (in.radar.rel_speed + p.acc_lambda * e) / p.acc_headway;
}

LawOutput cacc_law(const ControllerInput& in) {
    const ControllerParams& p = in.params;
    const std::size_t pred = in.predecessor();
    const std::size_t lead = in.leader();

    LawOutput out;
    if (p.cacc_degrade_on_stale) {
        out.degraded = !in.neighbors.fresh(pred, in.now, p.beacon_timeout) ||
                       !in.neighbors.fresh(lead, in.now, p.beacon_timeout);
    }

    const auto& pred_entry = in.neighbors.entry(pred);
    const auto& lead_entry = in.neighbors.entry(lead);
    if (!pred_entry || !lead_entry || !in.radar.valid) {
        out.degraded = true;
        return out;
    }
    const Beacon& bp = pred_entry->beacon;
    const Beacon& bl = lead_entry->beacon;

    const double root = p.cacc_xi + std::sqrt(p.cacc_xi * p.cacc_xi - 1.0);
    const double pred_gain = (2.0 * p.cacc_xi - p.cacc_c1 * root) * p.cacc_omega_n;
    const double lead_gain = p.cacc_c1 * root * p.cacc_omega_n;
    const double e = in.radar.gap - p.cacc_gap;
    const double v = in.own.speed;

    // Feedforward uses the beaconed commands; the realized accelerations trail
    // them by the actuator lag.
    out.u = (1.0 - p.cacc_c1) * bp.cmd_accel + p.cacc_c1 * bl.cmd_accel - pred_gain * (v - bp.speed) -
            lead_gain * (v - bl.speed) + p.cacc_omega_n * p.cacc_omega_n * e;
    return out;
}

PloegOutput ploeg_law(const ControllerInput& in, const PloegState& state,
                      double estimated_predecessor_accel, double dt) {
    const ControllerParams& p = in.params;
    const std::size_t pred = in.predecessor();

    PloegOutput out;
    out.degraded = !in.neighbors.fresh(pred, in.now, p.beacon_timeout);

    double u_ff = estimated_predecessor_accel;
    if (const auto* entry = in.neighbors.fresh(pred, in.now, p.ploeg_ff_timeout)) {
        u_ff = entry->beacon.cmd_accel;
    } else {
        out.estimating = true;
    }

    const double e = in.radar.gap - (p.ploeg_r0 + p.ploeg_h * in.own.speed);
    const double e_dot = in.radar.rel_speed - p.ploeg_h * in.own.accel;
    const double u_dot = (-state.u_prev + u_ff + p.ploeg_kp * e + p.ploeg_kd * e_dot) / p.ploeg_h;
    out.u = state.u_prev + u_dot * dt;
    out.next.u_prev = out.u;
    return out;
}

LawOutput consensus_law(const ControllerInput& in) {
    const ControllerParams& p = in.params;
    const std::size_t own_rank = in.rank();
    const double v = in.own.speed;
    const double slot = in.own.length + p.cons_r0 + p.cons_h * v;

    double sum = 0.0;
    double total_weight = 0.0;
    for (std::size_t r = 0; r < in.platoon_order.size(); ++r) {
        if (r == own_rank) continue;
        const auto* entry = in.neighbors.fresh(in.platoon_order[r], in.now, p.beacon_timeout);
        if (!entry) continue;
        const Beacon& b = entry->beacon;
        const double offset = (static_cast<double>(own_rank) - static_cast<double>(r)) * slot;
        // Beacons are up to one period old. Advancing them at our own speed
        // keeps a uniform age from reading as a formation error.
        const double p_j = b.position + v * (in.now - b.timestamp);
        const double w = r == 0 ? p.cons_leader_weight : 1.0;
        sum += w * (b.cmd_accel + p.cons_kd * (b.speed - v) + p.cons_kp * (p_j - in.own.position - offset));
        total_weight += w;
    }
    if (total_weight == 0.0) return {0.0, true};
    return {sum / total_weight, false};
}

bool fallback_required(bool degraded, const ControllerInput& in) {
    if (!in.radar.valid) return false;
    const ControllerParams& p = in.params;
    return degraded || in.radar.gap > p.fallback_factor * desired_gap(p.kind, in.own.speed, p);
}

double fallback_gate(bool degraded, const ControllerInput& in, double candidate_u) {
    return fallback_required(degraded, in) ? acc_law(in) : candidate_u;
}

void PredecessorAccelEstimator::update(const RadarReading& radar, double dt) {
    if (samples_ > 0) {
        const double diff = (radar.rel_speed - last_rel_speed_) / dt;
        rel_accel_ += smoothing_ * (diff - rel_accel_);
    }
    last_rel_speed_ = radar.rel_speed;
    ++samples_;
}

double PredecessorAccelEstimator::estimate(double own_accel) const {
    return samples_ < 2 ? own_accel : own_accel + rel_accel_;
}

double estimate_predecessor_accel(std::span<const RadarReading> history, double own_accel, double dt) {
    PredecessorAccelEstimator estimator;
    for (const RadarReading& r : history) estimator.update(r, dt);
    return estimator.estimate(own_accel);
}

double FollowerController::command(const ControllerInput& in, double dt) {
    estimator_.update(in.radar, dt);

    bool degraded = false;
    double candidate = 0.0;
    bool estimating = false;
    switch (in.params.kind) {
    case ControllerKind::Acc:
        mode_ = ControlMode::Cooperative;
        return acc_law(in);
    case ControllerKind::Cacc: {
        const LawOutput out = cacc_law(in);
        candidate = out.u;
        degraded = out.degraded;
        break;
    }
    case ControllerKind::Ploeg: {
        const PloegOutput out = ploeg_law(in, ploeg_, estimator_.estimate(in.own.accel), dt);
        candidate = out.u;
        degraded = out.degraded;
        estimating = out.estimating;
        break;
    }
    case ControllerKind::Consensus: {
        const LawOutput out = consensus_law(in);
        candidate = out.u;
        degraded = out.degraded;
        break;
    }
    }

    const bool fell_back = fallback_required(degraded, in);
    const double u = fell_back ? acc_law(in) : candidate;
    mode_ = fell_back ? ControlMode::Fallback
                      : (estimating ? ControlMode::Estimating : ControlMode::Cooperative);
    // The Ploeg integrator follows the applied command so that leaving the
    // fallback is bumpless.
    if (in.params.kind == ControllerKind::Ploeg) ploeg_.u_prev = u;
    return u;
}

} // namespace platoon
