#include "platoon/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace platoon {

namespace {
constexpr double kMinPeakForRatio = 1e-3; // m
}

double spacing_error(double gap, double desired) {
    return std::abs(gap - desired);
}

RunResult aggregate_run(const RunTrace& trace, const std::optional<CollisionEvent>& collision) {
    if (trace.empty()) throw std::invalid_argument("aggregate_run: empty trace");

    RunResult result;
    if (collision) {
        result.crashed = true;
        result.crash_time = collision->time;
        result.crash_rear_index = collision->rear_index;
        result.delta_v = collision->delta_v;
    }

    const std::size_t steps =
        collision ? std::min(collision->step, trace.step_count()) : trace.step_count();
    const std::size_t followers = trace.vehicle_count() > 0 ? trace.vehicle_count() - 1 : 0;
    if (followers == 0 || steps == 0) return result;

    double sum_error_peaks = 0.0;
    double sum_accel_peaks = 0.0;
    for (std::size_t i = 1; i < trace.vehicle_count(); ++i) {
        double error_peak = 0.0;
        double accel_peak = 0.0;
        for (std::size_t k = 0; k < steps; ++k) {
            const TraceSample& s = trace.at(k, i);
            error_peak = std::max(error_peak, std::abs(s.spacing_error));
            accel_peak = std::max(accel_peak, std::abs(s.accel));
        }
        result.max_spacing_error = std::max(result.max_spacing_error, error_peak);
        sum_error_peaks += error_peak;
        sum_accel_peaks += accel_peak;
    }
    result.avg_max_spacing_error = sum_error_peaks / static_cast<double>(followers);
    result.avg_max_abs_accel = sum_accel_peaks / static_cast<double>(followers);
    return result;
}

double string_stability_ratio(const RunTrace& trace) {
    const std::size_t n = trace.vehicle_count();
    std::vector<double> peaks(n, 0.0);
    for (std::size_t k = 0; k < trace.step_count(); ++k) {
        for (std::size_t i = 1; i < n; ++i)
            peaks[i] = std::max(peaks[i], std::abs(trace.at(k, i).spacing_error));
    }
    double ratio = 0.0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (peaks[i] < kMinPeakForRatio) continue;
        ratio = std::max(ratio, peaks[i + 1] / peaks[i]);
    }
    return ratio;
}

double delta_v_at_collision(const VehicleState& front, const VehicleState& rear) {
    return rear.speed - front.speed;
}

} // namespace platoon
