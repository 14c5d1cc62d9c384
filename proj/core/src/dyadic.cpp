#include "fwbesov/besov.hpp"

#include <cmath>

namespace fwbesov {

double smooth_ramp(double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    const double a = std::exp(-1.0 / t);
    const double b = std::exp(-1.0 / (1.0 - t));
    return a / (a + b);
}

double DyadicSystem::chi(double xi) const {
    const double a = std::abs(xi);
    if (a <= 1.0) return 1.0;
    if (a >= 4.0 / 3.0) return 0.0;
    return 1.0 - smooth_ramp(3.0 * (a - 1.0));
}

double DyadicSystem::phi(double xi) const {
    return chi(xi / 2.0) - chi(xi);
}

int DyadicSystem::q_max(const TorusGrid& grid) const {
    return static_cast<int>(std::ceil(std::log2(grid.kappa_max()))) + 1;
}

DyadicSystem build_dyadic_system() { return DyadicSystem{}; }

SpectralField dyadic_block(const DyadicSystem& sys, const SpectralField& u, int q) {
    SpectralField out(u.grid());
    if (q <= -2) return out;
    const double scale = q >= 0 ? std::pow(2.0, -q) : 1.0;
    for (std::size_t j = 0; j < u.size(); ++j) {
        const double xi = u.grid().kappa(j) * scale;
        const double m = q == -1 ? sys.chi(xi) : sys.phi(xi);
        out[j] = m * u[j];
    }
    return out;
}

SpectralField low_freq_cutoff(const DyadicSystem& sys, const SpectralField& u, int q) {
    if (q < 0) throw std::invalid_argument("low_freq_cutoff: q must be >= 0");
    SpectralField out(u.grid());
    const double scale = std::pow(2.0, -q);
    for (std::size_t j = 0; j < u.size(); ++j)
        out[j] = sys.chi(u.grid().kappa(j) * scale) * u[j];
    return out;
}

std::vector<double> block_l2_norms(const DyadicSystem& sys, const SpectralField& u) {
    const int qm = sys.q_max(u.grid());
    const double length = u.grid().length();
    std::vector<double> norms(static_cast<std::size_t>(qm + 2), 0.0);
    for (std::size_t j = 0; j < u.size(); ++j) {
        const double kap = u.grid().kappa(j);
        const double c2 = std::norm(u[j]);
        if (c2 == 0.0) continue;
        double m = sys.chi(kap);
        norms[0] += m * m * c2;
        for (int q = 0; q <= qm; ++q) {
            m = sys.phi(kap * std::pow(2.0, -q));
            if (m != 0.0) norms[static_cast<std::size_t>(q + 1)] += m * m * c2;
        }
    }
    for (auto& v : norms) v = std::sqrt(length * v);
    return norms;
}

double besov_norm(const DyadicSystem& sys, const SpectralField& u, const BesovParams& params) {
    const auto norms = block_l2_norms(sys, u);
    double acc = 0.0;
    for (std::size_t i = 0; i < norms.size(); ++i) {
        const int q = static_cast<int>(i) - 1;
        const double a = std::pow(2.0, params.s * q) * norms[i];
        if (params.r.is_infinite())
            acc = std::max(acc, a);
        else
            acc += std::pow(a, params.r.value());
    }
    return params.r.is_infinite() ? acc : std::pow(acc, 1.0 / params.r.value());
}

double besov_norm(const DyadicSystem& sys, const SpectralField& u, double s, Summability r) {
    return besov_norm(sys, u, BesovParams{s, r});
}

double sobolev_norm(const SpectralField& u, double s) {
    double acc = 0.0;
    for (std::size_t j = 0; j < u.size(); ++j) {
        const double k = u.grid().kappa(j);
        acc += std::pow(1.0 + k * k, s) * std::norm(u[j]);
    }
    return std::sqrt(u.grid().length() * acc);
}

} // namespace fwbesov
