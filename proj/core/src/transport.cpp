#include "fwbesov/transport.hpp"

#include <algorithm>
#include <cmath>

namespace fwbesov {

TimeField make_interpolant(const Trajectory& traj) {
    if (traj.states.empty())
        throw std::invalid_argument("make_interpolant: empty trajectory");
    if (traj.rhs_values.size() != traj.states.size())
        throw std::invalid_argument("make_interpolant: trajectory lacks RHS samples");
    if (traj.states.size() == 1) return constant_source(traj.states.front());

    // Copies keep the source self-contained; trajectories are immutable
    // once returned so sharing would also be safe, but cheap at desk scale.
    auto times = traj.times;
    auto states = traj.states;
    auto rhs = traj.rhs_values;
    return [times = std::move(times), states = std::move(states),
            rhs = std::move(rhs)](double t) -> SpectralField {
        if (t <= times.front()) return states.front();
        if (t >= times.back()) return states.back();
        const auto it = std::upper_bound(times.begin(), times.end(), t);
        const std::size_t i = static_cast<std::size_t>(it - times.begin()) - 1;
        const double h = times[i + 1] - times[i];
        const double th = (t - times[i]) / h;
        const double h00 = (1.0 + 2.0 * th) * (1.0 - th) * (1.0 - th);
        const double h10 = th * (1.0 - th) * (1.0 - th);
        const double h01 = th * th * (3.0 - 2.0 * th);
        const double h11 = th * th * (th - 1.0);
        SpectralField out(states[i].grid());
        for (std::size_t j = 0; j < out.size(); ++j)
            out[j] = h00 * states[i][j] + h * h10 * rhs[i][j] + h01 * states[i + 1][j] +
                     h * h11 * rhs[i + 1][j];
        return out;
    };
}

TimeField constant_source(const SpectralField& f) {
    return [f](double) { return f; };
}

TimeField zero_source(const TorusGrid& grid) {
    return [grid](double) { return SpectralField(grid); };
}

TimeField transformed_source(TimeField base,
                             std::function<SpectralField(const SpectralField&)> op) {
    return [base = std::move(base), op = std::move(op)](double t) { return op(base(t)); };
}

Trajectory transport_evolve(const TimeField& velocity, const SpectralField& f0,
                            const TimeField& forcing, const SolverConfig& cfg) {
    cfg.validate();
    const DyadicSystem sys = build_dyadic_system();
    const TorusGrid& grid = f0.grid();

    const auto rhs = [&](double t, const SpectralField& f) {
        const SpectralField fx = differentiate(f, 1);
        const SpectralField v = velocity(t);
        SpectralField advect =
            cfg.dealias ? dealiased_product(v, fx) : collocation_product(v, fx);
        const SpectralField force = forcing(t);
        SpectralField out(grid);
        for (std::size_t j = 0; j < out.size(); ++j) out[j] = -advect[j] + force[j];
        return out;
    };

    Trajectory traj;
    SpectralField f = f0;
    double t = 0.0;

    auto push_sample = [&](const SpectralField& state, const SpectralField& df, double time) {
        traj.times.push_back(time);
        traj.states.push_back(state);
        traj.rhs_values.push_back(df);
        StepDiagnostics d;
        d.t = time;
        d.besov = besov_norm(sys, state, cfg.diagnostic_norm);
        d.sup_abs = linf_norm(state);
        const auto slopes = transform_inverse(differentiate(state, 1));
        d.min_slope = *std::min_element(slopes.begin(), slopes.end());
        d.max_abs_slope = 0.0;
        for (double v : slopes) d.max_abs_slope = std::max(d.max_abs_slope, std::abs(v));
        traj.diagnostics.push_back(d);
        if (traj.breaking_integral.empty()) {
            traj.breaking_integral.push_back(0.0);
        } else {
            const auto& prev = traj.diagnostics[traj.diagnostics.size() - 2];
            traj.breaking_integral.push_back(
                traj.breaking_integral.back() +
                0.5 * (time - prev.t) * (d.max_abs_slope + prev.max_abs_slope));
        }
    };

    push_sample(f, rhs(0.0, f), 0.0);

    const double n_over_l = static_cast<double>(grid.size()) / grid.length();
    std::size_t step = 0;
    while (t < cfg.t_end - 1e-12 * std::max(1.0, cfg.t_end)) {
        const double dt = std::min(cfg.dt, cfg.t_end - t);

        const double sup_v = linf_norm(velocity(t));
        if (sup_v * dt * n_over_l > cfg.cfl_guard) {
            traj.status = HaltStatus::cfl_halt;
            return traj;
        }

        const SpectralField& k1 = traj.rhs_values.back();
        const SpectralField k2 = rhs(t + 0.5 * dt, axpy(0.5 * dt, k1, f));
        const SpectralField k3 = rhs(t + 0.5 * dt, axpy(0.5 * dt, k2, f));
        const SpectralField k4 = rhs(t + dt, axpy(dt, k3, f));
        SpectralField next(grid);
        for (std::size_t j = 0; j < f.size(); ++j)
            next[j] = f[j] + (dt / 6.0) * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);

        bool finite = true;
        for (const auto& c : next.coeffs())
            if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) finite = false;
        if (!finite) {
            traj.status = HaltStatus::nan_halt;
            return traj;
        }

        f = std::move(next);
        ++step;
        t = std::min(cfg.t_end, static_cast<double>(step) * cfg.dt);
        push_sample(f, rhs(t, f), t);

        if (traj.diagnostics.back().sup_abs > 1e6) {
            traj.status = HaltStatus::amplitude_halt;
            return traj;
        }
    }
    return traj;
}

std::vector<Trajectory> existence_iteration(const SpectralField& u0, int n_iters,
                                            const SolverConfig& cfg,
                                            const LifespanEstimate& lifespan) {
    if (n_iters < 1) throw std::invalid_argument("existence_iteration: n_iters must be >= 1");
    if (cfg.t_end > lifespan.T)
        throw std::invalid_argument("existence_iteration: t_end exceeds the lifespan estimate");

    std::vector<Trajectory> iterates;
    iterates.reserve(static_cast<std::size_t>(n_iters));

    for (int n = 1; n <= n_iters; ++n) {
        const SpectralField data = mollify(u0, n);
        if (n == 1) {
            // Zero seed: velocity and forcing vanish, so u_1 is frozen at
            // its mollified data. Materialize it on the cfg time grid so
            // the next iterate can interpolate.
            Trajectory frozen = transport_evolve(zero_source(u0.grid()), data,
                                                 zero_source(u0.grid()), cfg);
            iterates.push_back(std::move(frozen));
            continue;
        }
        const TimeField prev = make_interpolant(iterates.back());
        const TimeField velocity = transformed_source(prev, [](const SpectralField& u) {
            SpectralField v = u;
            return v *= 1.5;
        });
        const TimeField forcing = transformed_source(prev, [](const SpectralField& u) {
            SpectralField f = helmholtz_inverse_dx(u);
            return f *= -1.0;
        });
        iterates.push_back(transport_evolve(velocity, data, forcing, cfg));
    }
    return iterates;
}

} // namespace fwbesov
