#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "platoon/vehicle.hpp"

namespace platoon {

struct TraceSample {
    double position = 0.0;
    double speed = 0.0;
    double accel = 0.0;
    double cmd_accel = 0.0;
    double spacing_error = 0.0; // signed, gap minus desired gap; 0 for the leader

    friend bool operator==(const TraceSample&, const TraceSample&) = default;
};

// Per-step, per-vehicle samples at a constant stride. Sample k is taken at
// time k * timestep; sample 0 is the initial state.
class RunTrace {
public:
    RunTrace() = default;
    RunTrace(std::size_t vehicle_count, double timestep, double duration);

    void append(std::span<const VehicleState> states, std::span<const double> spacing_errors);

    std::size_t vehicle_count() const { return vehicle_count_; }
    std::size_t step_count() const { return vehicle_count_ == 0 ? 0 : samples_.size() / vehicle_count_; }
    double timestep() const { return timestep_; }
    double duration() const { return duration_; }
    double time_at(std::size_t step) const { return static_cast<double>(step) * timestep_; }
    bool empty() const { return samples_.empty(); }

    const TraceSample& at(std::size_t step, std::size_t vehicle) const {
        return samples_[step * vehicle_count_ + vehicle];
    }
    std::span<const TraceSample> step(std::size_t step) const {
        return {samples_.data() + step * vehicle_count_, vehicle_count_};
    }

    // Keeps the first `steps` samples of every vehicle.
    RunTrace truncated(std::size_t steps) const;

    friend bool operator==(const RunTrace&, const RunTrace&) = default;

private:
    std::size_t vehicle_count_ = 0;
    double timestep_ = 0.0;
    double duration_ = 0.0;
    std::vector<TraceSample> samples_;
};

inline constexpr const char* kTraceHeader =
    "time\tindex\tposition\tspeed\taccel\tcmd_accel\tspacing_error";

// Tab-separated export, one row per (step, vehicle), header first.
void write_trace_tsv(std::ostream& out, const RunTrace& trace);

} // namespace platoon
