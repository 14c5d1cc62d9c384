#ifndef FWBESOV_SPECTRAL_FIELD_HPP
#define FWBESOV_SPECTRAL_FIELD_HPP

#include "fwbesov/torus_grid.hpp"

#include <complex>
#include <vector>

namespace fwbesov {

/// Real periodic function stored as complex Fourier coefficients.
///
/// Normalization: coeff(k) = (1/N) sum_j u(x_j) e^{-i k x_j 2pi/L}, so
/// coeff(0) is the spatial mean and a pure cosine of unit amplitude has
/// coefficients 1/2 at +-k. Real-valued fields satisfy the Hermitian
/// symmetry coeff(-k) = conj(coeff(k)).
class SpectralField {
public:
    explicit SpectralField(const TorusGrid& grid)
        : grid_(grid), coeffs_(grid.size(), {0.0, 0.0}) {}

    SpectralField(const TorusGrid& grid, std::vector<std::complex<double>> coeffs)
        : grid_(grid), coeffs_(std::move(coeffs)) {
        if (coeffs_.size() != grid_.size())
            throw std::invalid_argument("SpectralField: coefficient count != N");
    }

    const TorusGrid& grid() const { return grid_; }
    std::size_t size() const { return coeffs_.size(); }

    /// Coefficient by storage slot (FFT order).
    std::complex<double>& operator[](std::size_t j) { return coeffs_[j]; }
    const std::complex<double>& operator[](std::size_t j) const { return coeffs_[j]; }

    /// Coefficient by signed integer frequency.
    std::complex<double>& at_freq(int k) { return coeffs_[grid_.slot(k)]; }
    const std::complex<double>& at_freq(int k) const { return coeffs_[grid_.slot(k)]; }

    const std::vector<std::complex<double>>& coeffs() const { return coeffs_; }
    std::vector<std::complex<double>>& coeffs() { return coeffs_; }

    double mean() const { return coeffs_[0].real(); }

    /// Max deviation from Hermitian symmetry, for real-valuedness checks.
    double hermitian_defect() const;

    SpectralField& operator+=(const SpectralField& rhs);
    SpectralField& operator-=(const SpectralField& rhs);
    SpectralField& operator*=(double a);

    friend SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
    friend SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
    friend SpectralField operator*(double a, SpectralField f) { return f *= a; }

private:
    TorusGrid grid_;
    std::vector<std::complex<double>> coeffs_;
};

/// a*x + y.
SpectralField axpy(double a, const SpectralField& x, const SpectralField& y);

void require_same_grid(const SpectralField& a, const SpectralField& b, const char* where);

} // namespace fwbesov

#endif
