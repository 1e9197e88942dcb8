#include "platoon/trace.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace platoon {

RunTrace::RunTrace(std::size_t vehicle_count, double timestep, double duration)
    : vehicle_count_(vehicle_count), timestep_(timestep), duration_(duration) {
    const auto steps = static_cast<std::size_t>(std::floor(duration / timestep + 1e-9)) + 1;
    samples_.reserve(steps * vehicle_count);
}

void RunTrace::append(std::span<const VehicleState> states, std::span<const double> spacing_errors) {
    for (std::size_t i = 0; i < vehicle_count_; ++i) {
        const VehicleState& s = states[i];
        samples_.push_back({s.position, s.speed, s.accel, s.cmd_accel, spacing_errors[i]});
    }
}

RunTrace RunTrace::truncated(std::size_t steps) const {
    RunTrace out = *this;
    if (steps < step_count()) out.samples_.resize(steps * vehicle_count_);
    return out;
}

void write_trace_tsv(std::ostream& out, const RunTrace& trace) {
    out << kTraceHeader << '\n';
    char line[256];
    for (std::size_t k = 0; k < trace.step_count(); ++k) {
        for (std::size_t i = 0; i < trace.vehicle_count(); ++i) {
            const TraceSample& s = trace.at(k, i);
            std::snprintf(line, sizeof line, "%.4f\t%zu\t%.6f\t%.6f\t%.6f\t%.6f\t%.6f\n",
                          trace.time_at(k), i, s.position, s.speed, s.accel, s.cmd_accel,
                          s.spacing_error);
            out << line;
        }
    }
}

} // namespace platoon
