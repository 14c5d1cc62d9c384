#ifndef FWBESOV_SPECTRAL_OPS_HPP
#define FWBESOV_SPECTRAL_OPS_HPP

#include "fwbesov/spectral_field.hpp"

#include <functional>
#include <span>
#include <vector>

namespace fwbesov {

/// DFT of real samples with the 1/N normalization (slot 0 = mean).
SpectralField transform_forward(const TorusGrid& grid, std::span<const double> samples);

/// Collocation values u(x_j); imaginary residue is dropped.
std::vector<double> transform_inverse(const SpectralField& u);

/// Sample f at the grid nodes and transform.
SpectralField sample_function(const TorusGrid& grid, const std::function<double(double)>& f);

/// Spectral derivative: coeff(k) *= (i*kappa)^order, order <= 4.
/// The unmatched Nyquist mode is zeroed for odd orders so outputs stay
/// exactly real-representable.
SpectralField differentiate(const SpectralField& u, int order = 1);

/// The smoothing operator (1 - dx^2)^{-1} dx, Fourier symbol
/// i*kappa/(1 + kappa^2). Zeroes the Nyquist mode like any odd symbol.
SpectralField helmholtz_inverse_dx(const SpectralField& u);

/// Zero every mode with |k| > k_keep.
SpectralField band_limit(const SpectralField& u, int k_keep);

/// Pointwise product with the 2/3-rule: both inputs and the result are
/// truncated to |k| <= floor(N/3), which makes the product alias-free for
/// band-limited inputs (N is a power of two, never divisible by 3).
SpectralField dealiased_product(const SpectralField& u, const SpectralField& v);

/// Plain pointwise product via collocation, no truncation. Test oracle.
SpectralField collocation_product(const SpectralField& u, const SpectralField& v);

/// High-order exponential filter exp(-36 (|k|/(N/2))^36), applied once per
/// step in peaked-wave runs.
SpectralField exponential_filter(const SpectralField& u);

/// max_j |u(x_j)|.
double linf_norm(const SpectralField& u);

/// Parseval L^2 norm: sqrt(L * sum |coeff|^2). Exact on the grid.
double l2_norm(const SpectralField& u);

/// min_j v(x_j) for physical values of a field (used on slopes).
double min_value(const SpectralField& u);

} // namespace fwbesov

#endif
