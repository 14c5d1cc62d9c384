#ifndef FWBESOV_DYADIC_HPP
#define FWBESOV_DYADIC_HPP

#include "fwbesov/spectral_field.hpp"

namespace fwbesov {

/// C-infinity ramp: 0 for t <= 0, 1 for t >= 1, built from f(t) = e^{-1/t}
/// as psi(t) = f(t) / (f(t) + f(1-t)). Exact 0/1 outside the transition.
double smooth_ramp(double t);

/// The dyadic cutoff pair (chi, phi).
///
/// chi is 1 on |xi| <= 1 and ramps to 0 at |xi| = 4/3; phi(xi) =
/// chi(xi/2) - chi(xi) is supported in 1 <= |xi| <= 8/3. By construction
/// chi(xi) + sum_{q=0}^{Q} phi(2^{-q} xi) telescopes to chi(2^{-Q-1} xi),
/// so the partition of unity is exact once Q is large enough for the
/// grid. Blocks two or more apart have exactly disjoint supports.
class DyadicSystem {
public:
    double chi(double xi) const;
    double phi(double xi) const;

    /// Largest block index with possible overlap on the grid; all higher
    /// blocks vanish identically there.
    int q_max(const TorusGrid& grid) const;
};

DyadicSystem build_dyadic_system();

/// Nonhomogeneous dyadic block: q = -1 applies chi, q >= 0 applies
/// phi(2^{-q} .), q <= -2 gives the zero field.
SpectralField dyadic_block(const DyadicSystem& sys, const SpectralField& u, int q);

/// Low-frequency cutoff S_q = chi(2^{-q} D), q >= 0. Equals the sum of
/// blocks below q.
SpectralField low_freq_cutoff(const DyadicSystem& sys, const SpectralField& u, int q);

/// ||Delta_q u||_{L^2} for q = -1 .. q_max, computed spectrally.
std::vector<double> block_l2_norms(const DyadicSystem& sys, const SpectralField& u);

} // namespace fwbesov

#endif
