#ifndef FWBESOV_TORUS_GRID_HPP
#define FWBESOV_TORUS_GRID_HPP

#include <cstddef>
#include <numbers>
#include <stdexcept>

namespace fwbesov {

/// Uniform collocation grid on the torus [0, L).
///
/// Wavenumbers follow the usual FFT layout: storage slot j holds the
/// integer frequency k = j for j < N/2 and k = j - N otherwise, so the
/// represented set is {-N/2, ..., N/2 - 1}. Physical frequencies are
/// kappa = k * 2*pi/L; on the default torus (L = 2*pi) kappa is integer.
class TorusGrid {
public:
    TorusGrid(std::size_t n, double length = 2.0 * std::numbers::pi)
        : n_(n), length_(length) {
        if (n < 8 || (n & (n - 1)) != 0)
            throw std::invalid_argument("TorusGrid: N must be a power of two >= 8");
        if (!(length > 0.0))
            throw std::invalid_argument("TorusGrid: L must be positive");
    }

    std::size_t size() const { return n_; }
    double length() const { return length_; }
    double spacing() const { return length_ / static_cast<double>(n_); }

    /// Physical node x_j = j*L/N.
    double node(std::size_t j) const { return spacing() * static_cast<double>(j); }

    /// Integer frequency stored in slot j.
    int freq(std::size_t j) const {
        return j < n_ / 2 ? static_cast<int>(j)
                          : static_cast<int>(j) - static_cast<int>(n_);
    }

    /// Scaled wavenumber kappa = k * 2*pi/L for slot j.
    double kappa(std::size_t j) const {
        return static_cast<double>(freq(j)) * 2.0 * std::numbers::pi / length_;
    }

    /// Storage slot for integer frequency k in [-N/2, N/2).
    std::size_t slot(int k) const {
        return k >= 0 ? static_cast<std::size_t>(k)
                      : n_ - static_cast<std::size_t>(-k);
    }

    /// Largest |kappa| on the grid (the Nyquist slot).
    double kappa_max() const {
        return static_cast<double>(n_ / 2) * 2.0 * std::numbers::pi / length_;
    }

    std::size_t nyquist_slot() const { return n_ / 2; }

    friend bool operator==(const TorusGrid& a, const TorusGrid& b) {
        return a.n_ == b.n_ && a.length_ == b.length_;
    }

private:
    std::size_t n_;
    double length_;
};

} // namespace fwbesov

#endif
