#ifndef FWBESOV_BLOWUP_HPP
#define FWBESOV_BLOWUP_HPP

#include "fwbesov/solver.hpp"

namespace fwbesov {

/// Wave-breaking diagnostics along a trajectory. The breaking integral
/// is the finite-time portion of int_0^t ||u_x||_{Linf} dtau, the
/// quantity whose divergence characterizes finite maximal existence time.
struct BreakingReport {
    std::vector<double> times;
    std::vector<double> breaking_integral;
    std::vector<double> min_slope;
    std::vector<double> sup_abs;
    /// Slope deepened tenfold while the amplitude grew by less than 2x.
    bool wave_breaking_suspected = false;
};

BreakingReport blowup_monitor(const Trajectory& traj);

} // namespace fwbesov

#endif
