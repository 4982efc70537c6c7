#include "mpde/solver.hpp"

#include <cmath>

#include "mpde/norms.hpp"
#include "mpde/propagator.hpp"

namespace mpde {

void SolverConfig::validate() const {
    if (!(dt > 0.0))
        throw std::invalid_argument("SolverConfig: dt must be positive");
    if (horizon < 0.0)
        throw std::invalid_argument("SolverConfig: horizon must be >= 0");
    double steps_f = horizon / dt;
    if (std::abs(steps_f - std::round(steps_f)) > 1e-9 * std::max(1.0, steps_f))
        throw std::invalid_argument("SolverConfig: dt must divide the horizon");
    if (snapshot_stride < 1)
        throw std::invalid_argument("SolverConfig: snapshot_stride must be >= 1");
    if (blowup_threshold < 0.0)
        throw std::invalid_argument("SolverConfig: blowup_threshold must be >= 0");
}

std::size_t SolverConfig::steps() const {
    return static_cast<std::size_t>(std::llround(horizon / dt));
}

namespace {

bool finite(const Field& f) {
    for (const auto& c : f.values())
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            return false;
    return true;
}

}  // namespace

Field step_strang(const Field& u, double dt, const ModelParams& p) {
    if (dt == 0.0)
        return u;
    if (!p.any_nonlinear(u.grid().dim()))
        return apply_flow(u, dt, p.nu);
    Field v = apply_flow(u, 0.5 * dt, p.nu);
    Field k1 = nonlinearity(v, p);
    Field vm = v + cplx(0.5 * dt, 0.0) * in_rep(k1, v.rep());
    Field v2 = v + cplx(dt, 0.0) * in_rep(nonlinearity(vm, p), v.rep());
    return apply_flow(v2, 0.5 * dt, p.nu);
}

Trajectory solve(const Field& u0, const ModelParams& p, const SolverConfig& c) {
    c.validate();
    p.validate(u0.grid().dim());
    const double threshold =
        c.blowup_threshold > 0.0 ? c.blowup_threshold : 1e3 * lp_norm(u0, 2.0);

    Trajectory traj;
    Field u = to_fourier(u0);
    traj.times.push_back(0.0);
    traj.snapshots.push_back(u);
    const std::size_t steps = c.steps();
    const double snap_dt = c.dt * c.snapshot_stride;
    for (std::size_t j = 1; j <= steps; ++j) {
        u = step_strang(u, c.dt, p);
        if (!finite(u) || lp_norm(u, 2.0) > threshold) {
            traj.status = RunStatus::blowup;
            return traj;
        }
        if (j % static_cast<std::size_t>(c.snapshot_stride) == 0) {
            traj.times.push_back(snap_dt * (j / c.snapshot_stride));
            traj.snapshots.push_back(u);
        }
    }
    traj.status = RunStatus::completed;
    return traj;
}

Trajectory solve_picard(const Field& u0, const ModelParams& p, const SolverConfig& c,
                        PicardInfo* info) {
    c.validate();
    p.validate(u0.grid().dim());
    const Grid& g = u0.grid();
    const std::size_t m = c.steps();
    const double threshold =
        c.blowup_threshold > 0.0 ? c.blowup_threshold : 1e3 * lp_norm(u0, 2.0);

    // Linear part G_nu(t_j) u0, fixed across sweeps.
    std::vector<Field> lin;
    lin.reserve(m + 1);
    Field u0h = to_fourier(u0);
    lin.push_back(u0h);
    for (std::size_t j = 1; j <= m; ++j)
        lin.push_back(apply_flow(u0h, static_cast<double>(j) * c.dt, p.nu));

    std::vector<Field> cur = lin;
    PicardInfo local;
    PicardInfo& pi = info ? *info : local;
    pi.iterate_diffs.clear();

    auto make_traj = [&](RunStatus st) {
        Trajectory traj;
        traj.status = st;
        for (std::size_t j = 0; j <= m; j += static_cast<std::size_t>(c.snapshot_stride)) {
            traj.times.push_back(static_cast<double>(j) * c.dt);
            traj.snapshots.push_back(cur[j]);
        }
        return traj;
    };

    if (!p.any_nonlinear(g.dim())) {
        pi.iterations = 1;
        return make_traj(RunStatus::completed);
    }

    int growth_streak = 0;
    double prev_diff = p_inf;
    for (int it = 0; it < c.picard_max_iters; ++it) {
        std::vector<Field> forcing;
        forcing.reserve(m + 1);
        for (std::size_t j = 0; j <= m; ++j)
            forcing.push_back(to_fourier(nonlinearity(cur[j], p)));

        // Trapezoid Duhamel, advanced recursively:
        // I_j = G(dt) I_{j-1} + dt/2 (G(dt) N_{j-1} + N_j).
        std::vector<Field> next;
        next.reserve(m + 1);
        next.push_back(lin[0]);
        Field integral(g, Rep::fourier);
        for (std::size_t j = 1; j <= m; ++j) {
            integral = apply_flow(integral, c.dt, p.nu) +
                       cplx(0.5 * c.dt, 0.0) *
                           (apply_flow(forcing[j - 1], c.dt, p.nu) + forcing[j]);
            next.push_back(lin[j] + integral);
        }

        double diff = 0.0;
        bool ok = true;
        for (std::size_t j = 0; j <= m; ++j) {
            if (!finite(next[j]) || lp_norm(next[j], 2.0) > threshold) {
                ok = false;
                break;
            }
            diff = std::max(diff, lp_norm(next[j] - cur[j], 2.0));
        }
        pi.iterations = it + 1;
        if (!ok) {
            pi.iterate_diffs.push_back(p_inf);
            return make_traj(RunStatus::diverged_picard);
        }
        pi.iterate_diffs.push_back(diff);
        cur = std::move(next);
        if (diff < c.picard_tol)
            return make_traj(RunStatus::completed);
        if (diff > prev_diff) {
            if (++growth_streak >= 3)
                return make_traj(RunStatus::diverged_picard);
        } else {
            growth_streak = 0;
        }
        prev_diff = diff;
    }
    return make_traj(RunStatus::diverged_picard);
}

}  // namespace mpde
