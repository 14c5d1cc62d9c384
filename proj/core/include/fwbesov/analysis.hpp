#ifndef FWBESOV_ANALYSIS_HPP
#define FWBESOV_ANALYSIS_HPP

#include "fwbesov/besov.hpp"
#include "fwbesov/solver.hpp"

#include <cstdint>
#include <vector>

namespace fwbesov {

// ---------------------------------------------------------------------------
// Approximate solutions and residue decay
// ---------------------------------------------------------------------------

/// One branch of the approximate-solution family
///   sign * (2/3) n^{-1} + n^{-s} cos(n x - sign * t).
struct ApproxSolutionSpec {
    int n = 16;
    double s = 2.0;
    int sign = +1;

    void validate() const {
        if (n < 1) throw std::invalid_argument("ApproxSolutionSpec: n must be >= 1");
        if (sign != 1 && sign != -1)
            throw std::invalid_argument("ApproxSolutionSpec: sign must be +-1");
    }
};

/// Exact sampling of the approximate solution on a unit torus (L = 2*pi).
/// n must be resolved: n <= N/3.
SpectralField approximate_solution(const ApproxSolutionSpec& spec, double t,
                                   const TorusGrid& grid);

/// Residue of the approximate solution in the evolution equation, closed
/// form: the Burgers part collapses to -(3/4) n^{1-2s} sin(2(nx - sign t))
/// and the nonlocal term is applied exactly to the two represented modes.
SpectralField residue_field(const ApproxSolutionSpec& spec, double t, const TorusGrid& grid);

/// Same residue assembled term by term (sampled d/dt plus the spectral
/// product); independent route for cross-checking the closed form.
SpectralField residue_field_assembled(const ApproxSolutionSpec& spec, double t,
                                      const TorusGrid& grid);

/// Decay exponent of ||R||_{B^gamma_{2,inf}}: s+1-gamma for s >= 2,
/// 2s-1-gamma below. Requires 0 < gamma < s.
double alpha_exponent(double s, double gamma);

/// Interpolation exponent for the solution error: (s2-s)/(s2-gamma) for
/// s >= 2, times (s-1) below. Requires gamma < s < s2.
double beta_exponent(double s, double gamma, double s2);

// ---------------------------------------------------------------------------
// Peakon traveling wave
// ---------------------------------------------------------------------------

/// Traveling-wave residual of u = A e^{-|x - c t|/2} on the real line,
/// evaluated off-crest with the exact convolution against the Helmholtz
/// kernel G = (1/2) e^{-|x|}:
///   R(x) = -c u' + (3/2) u u' + (G * u)'.
/// Exactly zero (all x != 0) iff (A, c) = (8/9, 4/3).
double peakon_residual(double A, double c, const std::vector<double>& x_samples);

/// (G * A e^{-|.|/2})(x), closed form; exposed for the oracle tests.
double peakon_convolution(double A, double x);

/// Periodized peakon samples: sum of images A e^{-|x - x0 + m L|/2}.
SpectralField periodized_peakon(const TorusGrid& grid, double A, double x0, int images = 8);

/// Crest position per sample (argmax with parabolic refinement), unwrapped
/// across the periodic seam, plus the least-squares speed.
struct CrestTrack {
    std::vector<double> times;
    std::vector<double> positions;
    double speed = 0.0;
};

CrestTrack track_crest(const Trajectory& traj);

// ---------------------------------------------------------------------------
// Time-Taylor expansion and the analyticity norm
// ---------------------------------------------------------------------------

/// Coefficients u^{(0)} .. u^{(K)} of the expansion u(t) = sum u^{(k)} t^k
/// at t = 0.
struct TaylorSeries {
    std::vector<SpectralField> coeffs;
    int order() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// Formal time-Taylor coefficients generated by the evolution equation:
///   u^{(k+1)} = ( -(3/2) sum_{j<=k} u^{(j)} dx u^{(k-j)} - L u^{(k)} ) / (k+1),
/// with L the nonlocal smoothing operator. K <= 30; u0 must be
/// band-limited below N/6 so products stay resolved.
TaylorSeries taylor_time_series(const SpectralField& u0, int K);

SpectralField evaluate_taylor(const TaylorSeries& series, double t);

/// Max coefficient-recursion defect, re-deriving each u^{(k+1)} from the
/// stored lower coefficients. Self-check; ~1e-13 when healthy.
double taylor_recursion_defect(const TaylorSeries& series);

/// dx^k u for k = 1..K, computed spectrally.
std::vector<SpectralField> spatial_derivatives(const SpectralField& u, int K);

/// Finite-K analyticity norm sup_{k=1..K} ||dx^k u||_{B^{3/2}_{2,1}}
/// s^k (k+1)^2 / k!, a lower bound of the true sup, nondecreasing in K.
double es_norm(const DyadicSystem& sys, const std::vector<SpectralField>& derivatives,
               double s);

// ---------------------------------------------------------------------------
// Exponent fitting and random fields
// ---------------------------------------------------------------------------

/// Log-log least-squares power-law fit: value ~ exp(b) * n^{-exponent}.
struct DecayFit {
    std::vector<int> ns;
    std::vector<double> values;
    double fitted_exponent = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

DecayFit fit_decay_exponent(const std::vector<int>& ns, const std::vector<double>& values);

/// Real random field with modes 1..k_max (coefficients uniform in the
/// unit square) plus an optional mean term; deterministic in the seed.
SpectralField random_band_limited(const TorusGrid& grid, int k_max, std::uint64_t seed,
                                  bool with_mean = true);

} // namespace fwbesov

#endif
