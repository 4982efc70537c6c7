#pragma once

#include <complex>
#include <vector>

#include "mpde/field.hpp"
#include "mpde/window.hpp"

namespace mpde {

// ---------------------------------------------------------------------------
// Interpolation inequalities (modulation-space convexity with explicit
// constants). The M21 variant checks
//   ||f||_{M21^s} <= C^theta ||f||_{M21^{s+}}^{1-2 theta} ||f||_{L2}^{2 theta}
// with theta = eps/(s+eps), s+ = (s+2 theta)/(1-2 theta) and C the tail sum
// sum_k <k>^{-2}. The M11 variant checks
//   ||f||_{M11^s} <= (C Cw)^theta ||f||_{M11^{s+}}^{1-theta} ||f||_{L1}^theta
// with s+ = (s+2 theta)/(1-theta) and Cw the L1 operator constant of the
// window convolution kernels.
// ---------------------------------------------------------------------------

enum class InterpVariant { m21, m11 };

struct InterpolationCase {
    double s = 1.0;
    double eps = 0.5;
    InterpVariant variant = InterpVariant::m21;

    double theta() const { return eps / (s + eps); }
    double s_plus() const {
        double th = theta();
        return variant == InterpVariant::m21 ? (s + 2.0 * th) / (1.0 - 2.0 * th)
                                             : (s + 2.0 * th) / (1.0 - th);
    }
    void validate() const;
};

struct InterpolationConstants {
    double tail_active;    // sum over the active set of <k>^{-2}
    double tail_infinite;  // infinite-lattice value (inf when divergent)
    double window_l1;      // max_k ||F^{-1} sigma_k||_{L1} on the grid
};

InterpolationConstants interpolation_constants(const WindowFamily& w);

struct InterpolationVerdict {
    bool pass;
    bool degenerate;
    double lhs;
    double rhs;
    double slack;  // rhs / lhs
};

InterpolationVerdict check_interpolation(const Field& f, const InterpolationCase& c,
                                         const WindowFamily& w,
                                         const InterpolationConstants& consts);

// ---------------------------------------------------------------------------
// 1D smoothing-effect probe: R(k, nu) = ||G_nu(t) box_k phi||_{Lx^inf Lt^2} /
// ||box_k phi||_{L2} on a finite time window, against the <k>^{-1/2} law.
// ---------------------------------------------------------------------------

struct SmoothingSpec {
    std::vector<int> k_list{8, 16, 32};
    std::vector<double> nu_list{1e-3, 1e-2, 1e-1, 1.0};
    double t_window = 0.75;
    double dt = 0.005;
};

struct SmoothingRow {
    int k;
    double nu;
    double ratio;       // R(k, nu)
    double normalized;  // R(k, nu) * <k>^{1/2}
};

struct SmoothingReport {
    std::vector<SmoothingRow> rows;
    std::vector<double> per_k_max_normalized;  // max over nu, per k (k_list order)
    double max_normalized;
};

SmoothingReport smoothing_probe(const SmoothingSpec& spec, const Grid& grid,
                                const WindowFamily& w);

// ---------------------------------------------------------------------------
// Oscillatory kernel probe: K(tau, z) = P.V. int e^{i z xi} xi /
// (tau + xi^2 - i nu (xi^2 + s)) dxi, singular neighborhoods integrated by
// symmetric-pair quadrature, tails split off analytically.
// ---------------------------------------------------------------------------

struct KernelProbeSpec {
    std::vector<double> tau_list{-4.0, -2.0, -1.0, -0.5, 0.5, 1.0, 2.0, 4.0};
    std::vector<double> z_list{0.0, 0.5, 1.0, 2.0};
    std::vector<double> nu_list{0.0, 1e-2, 1e-1, 1.0};
    std::vector<double> s_list{0.0, 1.0, 10.0};
    double cutoff = 40.0;         // quadrature cutoff Xi
    int panels_per_unit = 4;      // Gauss-Legendre panels per unit length
    double pv_half_width = 0.25;  // principal-value window half-width
    double tail_tol = 1e-4;

    void validate() const;
};

std::complex<double> kernel_value(double tau, double z, double nu, double s,
                                  const KernelProbeSpec& spec);

struct KernelProbeReport {
    double max_abs;            // max |K| at the base configuration
    double max_abs_nodes_x2;   // with doubled panel count
    double max_abs_cutoff_x2;  // with doubled cutoff
    bool stable;               // both rechecks within 20%
};

KernelProbeReport kernel_probe(const KernelProbeSpec& spec);

}  // namespace mpde
