#pragma once

#include <cstddef>
#include <optional>

#include "platoon/trace.hpp"
#include "platoon/vehicle.hpp"

namespace platoon {

struct CollisionEvent {
    std::size_t step = 0; // trace sample at which contact was detected
    double time = 0.0;
    std::size_t rear_index = 0;
    double delta_v = 0.0;
};

struct RunResult {
    bool crashed = false;
    std::optional<double> crash_time;
    std::optional<std::size_t> crash_rear_index;
    std::optional<double> delta_v;
    double max_spacing_error = 0.0;
    double avg_max_spacing_error = 0.0;
    double avg_max_abs_accel = 0.0;

    friend bool operator==(const RunResult&, const RunResult&) = default;
};

// Magnitude of the deviation from the desired gap.
double spacing_error(double gap, double desired);

// Aggregates followers (index >= 1). With a collision, the spacing and
// acceleration aggregates cover only the samples before the contact sample.
// Throws std::invalid_argument on an empty trace.
RunResult aggregate_run(const RunTrace& trace, const std::optional<CollisionEvent>& collision);

// Largest ratio of peak spacing-error magnitude between consecutive followers
// (downstream over upstream). Pairs whose upstream peak is below 1 mm are
// skipped; 0 when every pair is skipped.
double string_stability_ratio(const RunTrace& trace);

double delta_v_at_collision(const VehicleState& front, const VehicleState& rear);

} // namespace platoon
