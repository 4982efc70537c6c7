#pragma once

#include <limits>
#include <vector>

#include "mpde/field.hpp"
#include "mpde/trajectory.hpp"

namespace mpde {

constexpr double p_inf = std::numeric_limits<double>::infinity();

/// Discrete L^p norm with the torus quadrature weight dx^n. For p = 2 a
/// Fourier-side field is measured directly via Plancherel; other exponents
/// convert to physical space first.
double lp_norm(const Field& f, double p);

/// One nesting level of an anisotropic space-time norm.
/// dim: 0..n-1 for a spatial axis, time_dim for t.
struct NormLevel {
    int dim;
    double p;
};
constexpr int time_dim = -1;

/// Nested discrete norms over a trajectory, innermost level first. Every
/// dimension (t and all spatial axes) must appear exactly once. Finite
/// exponents carry dt / dx Riemann weights; p = inf takes the max.
double mixed_norm(const Trajectory& traj, const std::vector<NormLevel>& ordering);

}  // namespace mpde
