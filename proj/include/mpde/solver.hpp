#pragma once

#include "mpde/model.hpp"
#include "mpde/trajectory.hpp"

namespace mpde {

enum class Scheme { strang_etd, picard };

struct SolverConfig {
    double dt = 0.01;
    double horizon = 1.0;
    Scheme scheme = Scheme::strang_etd;
    int picard_max_iters = 60;
    double picard_tol = 1e-10;
    double blowup_threshold = 0.0;  // 0: default 1e3 * ||u0||_2
    int snapshot_stride = 1;

    void validate() const;
    std::size_t steps() const;
};

/// One Strang step: exact half linear flow, explicit-midpoint nonlinear
/// substep, exact half linear flow. Degenerates to the full linear flow when
/// all nonlinear coefficients vanish.
Field step_strang(const Field& u, double dt, const ModelParams& p);

/// March to the horizon, snapshotting every stride steps. Blowup (threshold
/// exceeded or non-finite values) terminates early with the last finite
/// snapshot retained.
Trajectory solve(const Field& u0, const ModelParams& p, const SolverConfig& c);

struct PicardInfo {
    std::vector<double> iterate_diffs;  // sup-over-t L2 gap per sweep
    int iterations = 0;
};

/// Fixed-point iteration u <- G_nu(t) u0 + A_nu[N(u)] on the whole window,
/// trapezoid quadrature at every dt node. Non-contraction (gap growth for
/// three consecutive sweeps) reports diverged_picard.
Trajectory solve_picard(const Field& u0, const ModelParams& p, const SolverConfig& c,
                        PicardInfo* info = nullptr);

}  // namespace mpde
