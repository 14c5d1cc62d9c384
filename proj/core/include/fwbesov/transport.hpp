#ifndef FWBESOV_TRANSPORT_HPP
#define FWBESOV_TRANSPORT_HPP

#include "fwbesov/solver.hpp"

#include <functional>

namespace fwbesov {

/// Time-indexed field source, evaluable at RK4 stage times.
using TimeField = std::function<SpectralField(double)>;

/// Piecewise cubic Hermite interpolant through the trajectory's stored
/// states and RHS samples; keeps the transport solve fourth-order.
/// Requires a trajectory produced by evolve/transport_evolve (RHS stored).
TimeField make_interpolant(const Trajectory& traj);

TimeField constant_source(const SpectralField& f);

TimeField zero_source(const TorusGrid& grid);

/// Apply a linear spectral map to another source, e.g. the smoothing
/// operator of the iteration forcing.
TimeField transformed_source(TimeField base,
                             std::function<SpectralField(const SpectralField&)> op);

/// Integrate the linear transport equation  f_t + v f_x = F  with the
/// same RK4 core as evolve. Linear in (f0, F).
Trajectory transport_evolve(const TimeField& velocity, const SpectralField& f0,
                            const TimeField& forcing, const SolverConfig& cfg);

/// The constructive scheme behind the existence proof: starting from the
/// zero seed, each u_{n+1} solves
///   d/dt u_{n+1} + (3/2) u_n dx u_{n+1} = -(1-dx^2)^{-1} dx u_n,
///   u_{n+1}(0) = J_{n+1} u0.
/// Returns the iterates u_1 .. u_{n_iters}. cfg.t_end must not exceed the
/// supplied lifespan.
std::vector<Trajectory> existence_iteration(const SpectralField& u0, int n_iters,
                                            const SolverConfig& cfg,
                                            const LifespanEstimate& lifespan);

} // namespace fwbesov

#endif
