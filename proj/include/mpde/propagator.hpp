#pragma once

#include <vector>

#include "mpde/field.hpp"
#include "mpde/trajectory.hpp"
#include "mpde/window.hpp"

namespace mpde {

/// Exact linear flow G_nu(t): Fourier multiplier e^{-it|xi|^2 - nu t |xi|^2}.
/// Backward diffusion (t < 0 with nu > 0) is rejected as ill-posed.
Field apply_flow(const Field& f, double t, double nu);

/// Duhamel integral int_0^t G_nu(t - tau) f(tau) dtau by composite trapezoid
/// over uniformly sampled forcing covering [0, t].
Field duhamel(const Trajectory& forcing, double nu, double t);

struct MultiplierProbeRow {
    double t;
    double nu;
    double ratio;         // ||box_k G_nu(t) u0||_p / ||box_k u0||_p
    double normalized;    // ratio / (1 + t^{n/2})
};

struct MultiplierProbeReport {
    std::vector<MultiplierProbeRow> rows;
    double max_normalized;
};

/// Desk probe of the uniform L^p bound ||box_k G_nu(t) u0||_p
/// <= C (1+t^{n/2}) ||box_k u0||_p.
MultiplierProbeReport flow_multiplier_probe(const Field& u0, const std::array<int, 3>& k,
                                            const std::vector<double>& t_grid,
                                            const std::vector<double>& nu_grid, double p,
                                            const WindowFamily& w);

}  // namespace mpde
