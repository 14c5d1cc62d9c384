#include "fwbesov/blowup.hpp"

#include <cmath>

namespace fwbesov {

BreakingReport blowup_monitor(const Trajectory& traj) {
    BreakingReport report;
    if (traj.diagnostics.empty()) return report;

    report.times.reserve(traj.size());
    const double initial_abs_slope = std::abs(traj.diagnostics.front().min_slope);
    const double initial_sup = traj.diagnostics.front().sup_abs;

    for (std::size_t i = 0; i < traj.diagnostics.size(); ++i) {
        const auto& d = traj.diagnostics[i];
        report.times.push_back(d.t);
        report.breaking_integral.push_back(traj.breaking_integral[i]);
        report.min_slope.push_back(d.min_slope);
        report.sup_abs.push_back(d.sup_abs);
        const bool slope_deep = d.min_slope < -10.0 * initial_abs_slope;
        const bool amp_tame = d.sup_abs < 2.0 * initial_sup;
        if (slope_deep && amp_tame) report.wave_breaking_suspected = true;
    }
    return report;
}

} // namespace fwbesov
