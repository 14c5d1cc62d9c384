#include "fwbesov/solver.hpp"

#include <cmath>

namespace fwbesov {

namespace {

StepDiagnostics compute_diagnostics(const DyadicSystem& sys, const SpectralField& u,
                                    double t, const BesovParams& params) {
    StepDiagnostics d;
    d.t = t;
    d.besov = besov_norm(sys, u, params);
    d.sup_abs = linf_norm(u);
    const SpectralField ux = differentiate(u, 1);
    const auto slopes = transform_inverse(ux);
    double mn = slopes.empty() ? 0.0 : slopes[0];
    double mx = 0.0;
    for (double v : slopes) {
        mn = std::min(mn, v);
        mx = std::max(mx, std::abs(v));
    }
    d.min_slope = mn;
    d.max_abs_slope = mx;
    return d;
}

bool finite_field(const SpectralField& u) {
    for (const auto& c : u.coeffs())
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
    return true;
}

} // namespace

std::string to_string(HaltStatus s) {
    switch (s) {
        case HaltStatus::completed: return "completed";
        case HaltStatus::cfl_halt: return "cfl_halt";
        case HaltStatus::nan_halt: return "nan_halt";
        case HaltStatus::amplitude_halt: return "amplitude_halt";
    }
    return "unknown";
}

SpectralField fw_rhs(const SpectralField& u, bool dealias) {
    const SpectralField ux = differentiate(u, 1);
    SpectralField burgers = dealias ? dealiased_product(u, ux) : collocation_product(u, ux);
    SpectralField out = helmholtz_inverse_dx(u);
    for (std::size_t j = 0; j < out.size(); ++j)
        out[j] = -1.5 * burgers[j] - out[j];
    return out;
}

Trajectory evolve(const SpectralField& u0, const SolverConfig& cfg) {
    cfg.validate();
    if (u0.hermitian_defect() > 1e-9 * std::max(1.0, linf_norm(u0)))
        throw std::invalid_argument("evolve: initial data is not real-valued");

    const DyadicSystem sys = build_dyadic_system();
    const TorusGrid& grid = u0.grid();
    const auto rhs = [&](const SpectralField& u) { return fw_rhs(u, cfg.dealias); };

    Trajectory traj;
    SpectralField u = u0;
    double t = 0.0;

    auto push_sample = [&](const SpectralField& state, const SpectralField& f, double time) {
        traj.times.push_back(time);
        traj.states.push_back(state);
        traj.rhs_values.push_back(f);
        traj.diagnostics.push_back(compute_diagnostics(sys, state, time, cfg.diagnostic_norm));
        if (traj.breaking_integral.empty()) {
            traj.breaking_integral.push_back(0.0);
        } else {
            const auto& prev = traj.diagnostics[traj.diagnostics.size() - 2];
            const auto& cur = traj.diagnostics.back();
            traj.breaking_integral.push_back(
                traj.breaking_integral.back() +
                0.5 * (cur.t - prev.t) * (cur.max_abs_slope + prev.max_abs_slope));
        }
    };

    push_sample(u, rhs(u), 0.0);

    const double n_over_l = static_cast<double>(grid.size()) / grid.length();
    std::size_t step = 0;
    while (t < cfg.t_end - 1e-12 * std::max(1.0, cfg.t_end)) {
        const double dt = std::min(cfg.dt, cfg.t_end - t);

        const double sup = traj.diagnostics.back().sup_abs;
        if (sup * dt * n_over_l > cfg.cfl_guard) {
            traj.status = HaltStatus::cfl_halt;
            return traj;
        }

        const SpectralField& k1 = traj.rhs_values.back();
        const SpectralField k2 = rhs(axpy(0.5 * dt, k1, u));
        const SpectralField k3 = rhs(axpy(0.5 * dt, k2, u));
        const SpectralField k4 = rhs(axpy(dt, k3, u));
        SpectralField next(grid);
        for (std::size_t j = 0; j < u.size(); ++j)
            next[j] = u[j] + (dt / 6.0) * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
        if (cfg.spectral_filter) next = exponential_filter(next);

        if (!finite_field(next)) {
            traj.status = HaltStatus::nan_halt;
            return traj;
        }

        u = std::move(next);
        ++step;
        t = std::min(cfg.t_end, static_cast<double>(step) * cfg.dt);
        push_sample(u, rhs(u), t);

        if (traj.diagnostics.back().sup_abs > 1e6) {
            traj.status = HaltStatus::amplitude_halt;
            return traj;
        }
    }
    return traj;
}

Trajectory make_trajectory(std::vector<double> times, std::vector<SpectralField> states,
                           const BesovParams& diag_norm) {
    if (times.size() != states.size() || times.empty())
        throw std::invalid_argument("make_trajectory: times/states size mismatch");
    for (std::size_t i = 1; i < times.size(); ++i) {
        if (!(times[i] > times[i - 1]))
            throw std::invalid_argument("make_trajectory: times must be strictly increasing");
        if (!(states[i].grid() == states[0].grid()))
            throw std::invalid_argument("make_trajectory: states on mixed grids");
    }
    const DyadicSystem sys = build_dyadic_system();
    Trajectory traj;
    traj.times = std::move(times);
    traj.states = std::move(states);
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        traj.diagnostics.push_back(
            compute_diagnostics(sys, traj.states[i], traj.times[i], diag_norm));
        if (i == 0) {
            traj.breaking_integral.push_back(0.0);
        } else {
            traj.breaking_integral.push_back(
                traj.breaking_integral.back() +
                0.5 * (traj.times[i] - traj.times[i - 1]) *
                    (traj.diagnostics[i].max_abs_slope + traj.diagnostics[i - 1].max_abs_slope));
        }
    }
    return traj;
}

double mollifier_profile(double rho) {
    if (rho <= 0.5) return 1.0;
    if (rho >= 1.0) return 0.0;
    return 1.0 - smooth_ramp(2.0 * rho - 1.0);
}

SpectralField mollify(const SpectralField& u0, int n) {
    if (n < 1) throw std::invalid_argument("mollify: n must be positive");
    SpectralField out(u0);
    for (std::size_t j = 0; j < out.size(); ++j)
        out[j] *= mollifier_profile(std::abs(out.grid().kappa(j)) / static_cast<double>(n));
    return out;
}

LifespanEstimate lifespan_estimate(const DyadicSystem& sys, const SpectralField& u0,
                                   const BesovParams& params, double C) {
    if (!(C > 0.0)) throw std::invalid_argument("lifespan_estimate: C must be positive");
    const double norm0 = besov_norm(sys, u0, params);
    if (norm0 == 0.0)
        throw std::invalid_argument("lifespan_estimate: trivial data (zero initial norm)");
    return LifespanEstimate{1.0 / (4.0 * C * norm0), C, norm0};
}

} // namespace fwbesov
