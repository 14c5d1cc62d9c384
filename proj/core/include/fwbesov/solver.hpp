#ifndef FWBESOV_SOLVER_HPP
#define FWBESOV_SOLVER_HPP

#include "fwbesov/besov.hpp"
#include "fwbesov/spectral_ops.hpp"

#include <string>
#include <vector>

namespace fwbesov {

struct SolverConfig {
    double dt = 1e-3;
    double t_end = 1.0;
    bool dealias = true;
    /// Max allowed advective CFL number sup|u| * dt * N / L.
    double cfl_guard = 0.5;
    /// Apply exponential_filter once per step (peaked-wave runs).
    bool spectral_filter = false;
    /// Norm recorded in the per-step diagnostics.
    BesovParams diagnostic_norm{};

    void validate() const {
        if (!(dt > 0.0)) throw std::invalid_argument("SolverConfig: dt must be positive");
        if (!(t_end >= 0.0)) throw std::invalid_argument("SolverConfig: t_end must be >= 0");
        if (!(cfl_guard > 0.0 && cfl_guard <= 1.0))
            throw std::invalid_argument("SolverConfig: cfl_guard must be in (0, 1]");
    }
};

enum class HaltStatus { completed, cfl_halt, nan_halt, amplitude_halt };

std::string to_string(HaltStatus s);

/// Per-sample scalar diagnostics.
struct StepDiagnostics {
    double t = 0.0;
    double besov = 0.0;      ///< || u ||_{B^s_{2,r}} at the configured (s, r)
    double sup_abs = 0.0;    ///< sup_x |u|
    double min_slope = 0.0;  ///< min_x u_x
    double max_abs_slope = 0.0;
};

/// Time-stamped solution samples plus running diagnostics.
///
/// `states` and `rhs_values` are stored at every accepted step so stage
/// values of a transport solve can be reconstructed by cubic Hermite
/// interpolation. `breaking_integral` accumulates the trapezoid rule over
/// max|u_x|.
struct Trajectory {
    std::vector<double> times;
    std::vector<SpectralField> states;
    std::vector<SpectralField> rhs_values;
    std::vector<StepDiagnostics> diagnostics;
    std::vector<double> breaking_integral;
    HaltStatus status = HaltStatus::completed;

    std::size_t size() const { return times.size(); }
    const SpectralField& front_state() const { return states.front(); }
    const SpectralField& back_state() const { return states.back(); }
};

/// Right-hand side of the FW equation u_t = -(3/2) u u_x - (1-dx^2)^{-1} dx u.
///
/// Sign note: this is the orientation under which the exponential peakon
/// with amplitude 8/9 travels to the right at speed 4/3; the mirrored
/// convention (u -> -u, x -> -x) flips the sign of the nonlocal term.
SpectralField fw_rhs(const SpectralField& u, bool dealias = true);

/// Classical fixed-step RK4 time integration with per-step diagnostics.
/// Halts early (truncating the trajectory) on CFL violation, non-finite
/// values, or sup|u| > 1e6.
Trajectory evolve(const SpectralField& u0, const SolverConfig& cfg);

/// Build a trajectory from externally supplied states (diagnostics are
/// recomputed; no RHS samples, so it cannot drive a transport solve).
Trajectory make_trajectory(std::vector<double> times, std::vector<SpectralField> states,
                           const BesovParams& diag_norm = {});

/// Friedrichs mollifier J_n: coefficients scaled by jhat(|kappa|/n) where
/// jhat is 1 on [0, 1/2] and 0 on [1, inf), smooth in between.
SpectralField mollify(const SpectralField& u0, int n);

double mollifier_profile(double rho);

struct LifespanEstimate {
    double T = 0.0;
    double C = 0.0;
    double norm0 = 0.0;
};

/// T = 1 / (4 C ||u0||_{B^s_{2,r}}). Throws on trivial (zero-norm) data.
LifespanEstimate lifespan_estimate(const DyadicSystem& sys, const SpectralField& u0,
                                   const BesovParams& params, double C);

} // namespace fwbesov

#endif
