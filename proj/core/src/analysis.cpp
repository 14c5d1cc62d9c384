#include "fwbesov/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace fwbesov {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_unit_torus(const TorusGrid& grid, const char* where) {
    if (std::abs(grid.length() - kTwoPi) > 1e-12)
        throw std::invalid_argument(std::string(where) + ": requires L = 2*pi");
}

} // namespace

SpectralField approximate_solution(const ApproxSolutionSpec& spec, double t,
                                   const TorusGrid& grid) {
    spec.validate();
    require_unit_torus(grid, "approximate_solution");
    if (static_cast<std::size_t>(spec.n) > grid.size() / 3)
        throw std::invalid_argument("approximate_solution: n under-resolved (need n <= N/3)");

    const double n = spec.n;
    const double amp = std::pow(n, -spec.s);
    const double mean = spec.sign * (2.0 / 3.0) / n;
    SpectralField out(grid);
    out.at_freq(0) = mean;
    // n^{-s} cos(n x - sign t) = n^{-s}/2 [e^{-i sign t} e^{inx} + c.c.]
    const std::complex<double> half(0.5 * amp * std::cos(spec.sign * t),
                                    -0.5 * amp * std::sin(spec.sign * t));
    out.at_freq(spec.n) = half;
    out.at_freq(-spec.n) = std::conj(half);
    return out;
}

SpectralField residue_field(const ApproxSolutionSpec& spec, double t, const TorusGrid& grid) {
    spec.validate();
    require_unit_torus(grid, "residue_field");
    if (static_cast<std::size_t>(2 * spec.n) >= grid.size() / 2)
        throw std::invalid_argument("residue_field: 2n under-resolved");

    const double n = spec.n;
    const double amp2 = -0.75 * std::pow(n, 1.0 - 2.0 * spec.s);
    SpectralField out = helmholtz_inverse_dx(approximate_solution(spec, t, grid));
    // amp2 * sin(2(nx - sign t)) = amp2/(2i) [e^{-2i sign t} e^{2inx} - c.c.]
    const std::complex<double> phase(std::cos(2.0 * spec.sign * t),
                                     -std::sin(2.0 * spec.sign * t));
    const std::complex<double> c = amp2 * phase / std::complex<double>(0.0, 2.0);
    out.at_freq(2 * spec.n) += c;
    out.at_freq(-2 * spec.n) += std::conj(c);
    return out;
}

SpectralField residue_field_assembled(const ApproxSolutionSpec& spec, double t,
                                      const TorusGrid& grid) {
    spec.validate();
    require_unit_torus(grid, "residue_field_assembled");
    const double amp = std::pow(static_cast<double>(spec.n), -spec.s);
    // d/dt [n^{-s} cos(nx - sign t)] = sign n^{-s} sin(nx - sign t)
    SpectralField dudt = sample_function(grid, [&](double x) {
        return spec.sign * amp * std::sin(spec.n * x - spec.sign * t);
    });
    const SpectralField u = approximate_solution(spec, t, grid);
    const SpectralField burgers = dealiased_product(u, differentiate(u, 1));
    SpectralField out = helmholtz_inverse_dx(u);
    for (std::size_t j = 0; j < out.size(); ++j)
        out[j] += dudt[j] + 1.5 * burgers[j];
    return out;
}

double alpha_exponent(double s, double gamma) {
    if (!(gamma > 0.0 && gamma < s))
        throw std::invalid_argument("alpha_exponent: need 0 < gamma < s");
    return s >= 2.0 ? s + 1.0 - gamma : 2.0 * s - 1.0 - gamma;
}

double beta_exponent(double s, double gamma, double s2) {
    if (!(gamma < s && s < s2))
        throw std::invalid_argument("beta_exponent: need gamma < s < s2");
    const double base = (s2 - s) / (s2 - gamma);
    return s >= 2.0 ? base : base * (s - 1.0);
}

double peakon_convolution(double A, double x) {
    const double ax = std::abs(x);
    return A * ((4.0 / 3.0) * std::exp(-0.5 * ax) - (2.0 / 3.0) * std::exp(-ax));
}

double peakon_residual(double A, double c, const std::vector<double>& x_samples) {
    double worst = 0.0;
    for (double x : x_samples) {
        if (std::abs(x) < 0.05)
            throw std::invalid_argument("peakon_residual: sample too close to the crest");
        const double ax = std::abs(x);
        const double sg = x > 0.0 ? 1.0 : -1.0;
        const double u = A * std::exp(-0.5 * ax);
        const double up = -0.5 * sg * u;
        const double conv_prime =
            A * sg * (-(2.0 / 3.0) * std::exp(-0.5 * ax) + (2.0 / 3.0) * std::exp(-ax));
        const double r = -c * up + 1.5 * u * up + conv_prime;
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

SpectralField periodized_peakon(const TorusGrid& grid, double A, double x0, int images) {
    return sample_function(grid, [&](double x) {
        double acc = 0.0;
        for (int m = -images; m <= images; ++m)
            acc += A * std::exp(-0.5 * std::abs(x - x0 + m * grid.length()));
        return acc;
    });
}

CrestTrack track_crest(const Trajectory& traj) {
    CrestTrack track;
    const TorusGrid& grid = traj.front_state().grid();
    const double L = grid.length();
    const std::size_t n = grid.size();

    double prev = 0.0;
    double offset = 0.0;
    for (std::size_t i = 0; i < traj.size(); ++i) {
        const auto vals = transform_inverse(traj.states[i]);
        const std::size_t j =
            static_cast<std::size_t>(std::max_element(vals.begin(), vals.end()) - vals.begin());
        const double um = vals[(j + n - 1) % n];
        const double uc = vals[j];
        const double up = vals[(j + 1) % n];
        const double denom = um - 2.0 * uc + up;
        const double frac = std::abs(denom) > 1e-300 ? 0.5 * (um - up) / denom : 0.0;
        double pos = (static_cast<double>(j) + frac) * grid.spacing();

        if (i > 0) {
            // unwrap across the seam
            while (pos + offset - prev > L / 2) offset -= L;
            while (pos + offset - prev < -L / 2) offset += L;
        }
        const double unwrapped = pos + offset;
        prev = unwrapped;
        track.times.push_back(traj.times[i]);
        track.positions.push_back(unwrapped);
    }

    // least-squares slope
    const std::size_t m = track.times.size();
    if (m >= 2) {
        double st = 0.0, sp = 0.0, stt = 0.0, stp = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            st += track.times[i];
            sp += track.positions[i];
            stt += track.times[i] * track.times[i];
            stp += track.times[i] * track.positions[i];
        }
        const double d = m * stt - st * st;
        track.speed = d != 0.0 ? (m * stp - st * sp) / d : 0.0;
    }
    return track;
}

TaylorSeries taylor_time_series(const SpectralField& u0, int K) {
    if (K < 0 || K > 30)
        throw std::invalid_argument("taylor_time_series: K must be in [0, 30]");
    const std::size_t n = u0.grid().size();
    for (std::size_t j = 0; j < n; ++j)
        if (std::abs(u0.grid().freq(j)) * 6 >= static_cast<int>(n) && std::abs(u0[j]) > 0.0)
            throw std::invalid_argument("taylor_time_series: u0 must be band-limited below N/6");

    TaylorSeries series;
    series.coeffs.push_back(u0);
    for (int k = 0; k < K; ++k) {
        SpectralField acc(u0.grid());
        for (int j = 0; j <= k; ++j)
            acc += dealiased_product(series.coeffs[static_cast<std::size_t>(j)],
                                     differentiate(series.coeffs[static_cast<std::size_t>(k - j)], 1));
        const SpectralField smooth = helmholtz_inverse_dx(series.coeffs.back());
        SpectralField next(u0.grid());
        const double inv = 1.0 / (k + 1.0);
        for (std::size_t j = 0; j < next.size(); ++j)
            next[j] = inv * (-1.5 * acc[j] - smooth[j]);
        series.coeffs.push_back(std::move(next));
    }
    return series;
}

SpectralField evaluate_taylor(const TaylorSeries& series, double t) {
    SpectralField out(series.coeffs.front().grid());
    double tk = 1.0;
    for (const auto& c : series.coeffs) {
        out += tk * c;
        tk *= t;
    }
    return out;
}

double taylor_recursion_defect(const TaylorSeries& series) {
    double worst = 0.0;
    for (int k = 0; k + 1 < static_cast<int>(series.coeffs.size()); ++k) {
        SpectralField acc(series.coeffs.front().grid());
        for (int j = 0; j <= k; ++j)
            acc += dealiased_product(series.coeffs[static_cast<std::size_t>(j)],
                                     differentiate(series.coeffs[static_cast<std::size_t>(k - j)], 1));
        const SpectralField smooth =
            helmholtz_inverse_dx(series.coeffs[static_cast<std::size_t>(k)]);
        const double inv = 1.0 / (k + 1.0);
        const auto& stored = series.coeffs[static_cast<std::size_t>(k + 1)];
        for (std::size_t j = 0; j < stored.size(); ++j) {
            const std::complex<double> expect = inv * (-1.5 * acc[j] - smooth[j]);
            worst = std::max(worst, std::abs(expect - stored[j]));
        }
    }
    return worst;
}

std::vector<SpectralField> spatial_derivatives(const SpectralField& u, int K) {
    std::vector<SpectralField> out;
    out.reserve(static_cast<std::size_t>(K));
    SpectralField cur = u;
    for (int k = 1; k <= K; ++k) {
        cur = differentiate(cur, 1);
        out.push_back(cur);
    }
    return out;
}

double es_norm(const DyadicSystem& sys, const std::vector<SpectralField>& derivatives,
               double s) {
    if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("es_norm: s must be in (0, 1)");
    const BesovParams p{1.5, Summability::finite(1.0)};
    double sup = 0.0;
    double sk = 1.0;
    double kfact = 1.0;
    for (std::size_t i = 0; i < derivatives.size(); ++i) {
        const double k = static_cast<double>(i + 1);
        sk *= s;
        kfact *= k;
        const double term = besov_norm(sys, derivatives[i], p) * sk * (k + 1.0) * (k + 1.0) / kfact;
        sup = std::max(sup, term);
    }
    return sup;
}

DecayFit fit_decay_exponent(const std::vector<int>& ns, const std::vector<double>& values) {
    if (ns.size() != values.size() || ns.size() < 4)
        throw std::invalid_argument("fit_decay_exponent: need >= 4 matched points");
    for (std::size_t i = 0; i < ns.size(); ++i) {
        if (values[i] <= 0.0)
            throw std::invalid_argument("fit_decay_exponent: values must be positive");
        if (i > 0 && ns[i] <= ns[i - 1])
            throw std::invalid_argument("fit_decay_exponent: ns must be strictly increasing");
    }

    // least squares on log v = b - e log n
    const std::size_t m = ns.size();
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double x = std::log(static_cast<double>(ns[i]));
        const double y = std::log(values[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double denom = m * sxx - sx * sx;
    const double slope = (m * sxy - sx * sy) / denom;
    const double b = (sy - slope * sx) / m;

    double ss_res = 0.0, ss_tot = 0.0;
    const double ybar = sy / m;
    for (std::size_t i = 0; i < m; ++i) {
        const double x = std::log(static_cast<double>(ns[i]));
        const double y = std::log(values[i]);
        const double fit = b + slope * x;
        ss_res += (y - fit) * (y - fit);
        ss_tot += (y - ybar) * (y - ybar);
    }

    DecayFit out;
    out.ns = ns;
    out.values = values;
    out.fitted_exponent = -slope;
    out.intercept = b;
    out.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
    return out;
}

SpectralField random_band_limited(const TorusGrid& grid, int k_max, std::uint64_t seed,
                                  bool with_mean) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    SpectralField out(grid);
    if (with_mean) out.at_freq(0) = dist(rng);
    for (int k = 1; k <= k_max; ++k) {
        const std::complex<double> c(dist(rng), dist(rng));
        out.at_freq(k) = c;
        out.at_freq(-k) = std::conj(c);
    }
    return out;
}

} // namespace fwbesov
