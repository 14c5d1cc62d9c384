#include "fwbesov/spectral_ops.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace fwbesov {

namespace {

// One cached FFTW plan pair per grid size. Plans are created with
// FFTW_UNALIGNED so they can execute on any caller buffer via the
// new-array interface; the planner itself is not thread-safe, hence the
// mutex. Execution is concurrency-safe on distinct buffers.
class FftEngine {
public:
    static FftEngine& instance() {
        static FftEngine engine;
        return engine;
    }

    void forward(std::size_t n, std::complex<double>* in, std::complex<double>* out) {
        fftw_execute_dft(plans(n).fwd, reinterpret_cast<fftw_complex*>(in),
                         reinterpret_cast<fftw_complex*>(out));
    }

    void backward(std::size_t n, std::complex<double>* in, std::complex<double>* out) {
        fftw_execute_dft(plans(n).bwd, reinterpret_cast<fftw_complex*>(in),
                         reinterpret_cast<fftw_complex*>(out));
    }

private:
    struct PlanPair {
        fftw_plan fwd = nullptr;
        fftw_plan bwd = nullptr;
    };

    const PlanPair& plans(std::size_t n) {
        std::scoped_lock lock(mutex_);
        auto it = cache_.find(n);
        if (it == cache_.end()) {
            std::vector<std::complex<double>> scratch_in(n), scratch_out(n);
            auto* si = reinterpret_cast<fftw_complex*>(scratch_in.data());
            auto* so = reinterpret_cast<fftw_complex*>(scratch_out.data());
            PlanPair p;
            p.fwd = fftw_plan_dft_1d(static_cast<int>(n), si, so, FFTW_FORWARD,
                                     FFTW_ESTIMATE | FFTW_UNALIGNED);
            p.bwd = fftw_plan_dft_1d(static_cast<int>(n), si, so, FFTW_BACKWARD,
                                     FFTW_ESTIMATE | FFTW_UNALIGNED);
            it = cache_.emplace(n, p).first;
        }
        return it->second;
    }

    std::mutex mutex_;
    std::map<std::size_t, PlanPair> cache_;
};

int dealias_cutoff(const TorusGrid& grid) {
    return static_cast<int>(grid.size() / 3);
}

} // namespace

double SpectralField::hermitian_defect() const {
    const std::size_t n = coeffs_.size();
    double worst = std::abs(coeffs_[0].imag());
    for (std::size_t j = 1; j < n / 2; ++j)
        worst = std::max(worst, std::abs(coeffs_[j] - std::conj(coeffs_[n - j])));
    return worst;
}

SpectralField& SpectralField::operator+=(const SpectralField& rhs) {
    require_same_grid(*this, rhs, "SpectralField::operator+=");
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += rhs.coeffs_[j];
    return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& rhs) {
    require_same_grid(*this, rhs, "SpectralField::operator-=");
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= rhs.coeffs_[j];
    return *this;
}

SpectralField& SpectralField::operator*=(double a) {
    for (auto& c : coeffs_) c *= a;
    return *this;
}

SpectralField axpy(double a, const SpectralField& x, const SpectralField& y) {
    require_same_grid(x, y, "axpy");
    SpectralField out(x.grid());
    for (std::size_t j = 0; j < x.size(); ++j) out[j] = a * x[j] + y[j];
    return out;
}

void require_same_grid(const SpectralField& a, const SpectralField& b, const char* where) {
    if (!(a.grid() == b.grid()))
        throw std::invalid_argument(std::string(where) + ": grid mismatch");
}

SpectralField transform_forward(const TorusGrid& grid, std::span<const double> samples) {
    if (samples.size() != grid.size())
        throw std::invalid_argument("transform_forward: sample count != N");
    const std::size_t n = grid.size();
    std::vector<std::complex<double>> in(n);
    for (std::size_t j = 0; j < n; ++j) in[j] = samples[j];
    SpectralField out(grid);
    FftEngine::instance().forward(n, in.data(), out.coeffs().data());
    const double scale = 1.0 / static_cast<double>(n);
    for (auto& c : out.coeffs()) c *= scale;
    return out;
}

std::vector<double> transform_inverse(const SpectralField& u) {
    const std::size_t n = u.size();
    std::vector<std::complex<double>> in(u.coeffs()), out(n);
    FftEngine::instance().backward(n, in.data(), out.data());
    std::vector<double> samples(n);
    for (std::size_t j = 0; j < n; ++j) samples[j] = out[j].real();
    return samples;
}

SpectralField sample_function(const TorusGrid& grid, const std::function<double(double)>& f) {
    std::vector<double> samples(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) samples[j] = f(grid.node(j));
    return transform_forward(grid, samples);
}

SpectralField differentiate(const SpectralField& u, int order) {
    if (order < 0 || order > 4)
        throw std::invalid_argument("differentiate: order must be in [0, 4]");
    SpectralField out(u);
    for (std::size_t j = 0; j < out.size(); ++j) {
        const std::complex<double> sym(0.0, out.grid().kappa(j));
        std::complex<double> m = 1.0;
        for (int p = 0; p < order; ++p) m *= sym;
        out[j] *= m;
    }
    if (order % 2 == 1) out[out.grid().nyquist_slot()] = 0.0;
    return out;
}

SpectralField helmholtz_inverse_dx(const SpectralField& u) {
    SpectralField out(u);
    for (std::size_t j = 0; j < out.size(); ++j) {
        const double k = out.grid().kappa(j);
        out[j] *= std::complex<double>(0.0, k / (1.0 + k * k));
    }
    out[out.grid().nyquist_slot()] = 0.0;
    return out;
}

SpectralField band_limit(const SpectralField& u, int k_keep) {
    SpectralField out(u);
    for (std::size_t j = 0; j < out.size(); ++j)
        if (std::abs(out.grid().freq(j)) > k_keep) out[j] = 0.0;
    return out;
}

SpectralField dealiased_product(const SpectralField& u, const SpectralField& v) {
    require_same_grid(u, v, "dealiased_product");
    const int cut = dealias_cutoff(u.grid());
    const auto uu = transform_inverse(band_limit(u, cut));
    const auto vv = transform_inverse(band_limit(v, cut));
    std::vector<double> prod(uu.size());
    for (std::size_t j = 0; j < prod.size(); ++j) prod[j] = uu[j] * vv[j];
    return band_limit(transform_forward(u.grid(), prod), cut);
}

SpectralField collocation_product(const SpectralField& u, const SpectralField& v) {
    require_same_grid(u, v, "collocation_product");
    const auto uu = transform_inverse(u);
    const auto vv = transform_inverse(v);
    std::vector<double> prod(uu.size());
    for (std::size_t j = 0; j < prod.size(); ++j) prod[j] = uu[j] * vv[j];
    return transform_forward(u.grid(), prod);
}

SpectralField exponential_filter(const SpectralField& u) {
    SpectralField out(u);
    const double half = static_cast<double>(u.size() / 2);
    for (std::size_t j = 0; j < out.size(); ++j) {
        const double r = std::abs(static_cast<double>(out.grid().freq(j))) / half;
        out[j] *= std::exp(-36.0 * std::pow(r, 36.0));
    }
    return out;
}

double linf_norm(const SpectralField& u) {
    double worst = 0.0;
    for (double v : transform_inverse(u)) worst = std::max(worst, std::abs(v));
    return worst;
}

double l2_norm(const SpectralField& u) {
    double acc = 0.0;
    for (const auto& c : u.coeffs()) acc += std::norm(c);
    return std::sqrt(u.grid().length() * acc);
}

double min_value(const SpectralField& u) {
    const auto vals = transform_inverse(u);
    return *std::min_element(vals.begin(), vals.end());
}

} // namespace fwbesov
