#include "mpde/verifier.hpp"

#include <cmath>

#include "mpde/norms.hpp"
#include "mpde/propagator.hpp"

namespace mpde {

void InterpolationCase::validate() const {
    if (!(eps > 0.0))
        throw std::invalid_argument("InterpolationCase: eps must be positive");
    double th = theta();
    if (variant == InterpVariant::m21 && !(th > 0.0 && th < 0.5))
        throw std::invalid_argument("InterpolationCase: need theta in (0, 1/2) for M21");
    if (variant == InterpVariant::m11 && !(th > 0.0 && th < 1.0))
        throw std::invalid_argument("InterpolationCase: need theta in (0, 1) for M11");
}

InterpolationConstants interpolation_constants(const WindowFamily& w) {
    InterpolationConstants c{};
    const int dim = w.grid().dim();
    c.tail_active = 0.0;
    for (const auto& k : w.active_set()) {
        double k2 = 0.0;
        for (int d = 0; d < dim; ++d)
            k2 += static_cast<double>(k[d]) * k[d];
        double br = 1.0 + std::sqrt(k2);
        c.tail_active += 1.0 / (br * br);
    }
    // sum_{k in Z^n} <k>^{-2} converges only for n = 1.
    c.tail_infinite = dim == 1 ? (M_PI * M_PI / 3.0 - 1.0) : p_inf;

    // L1 operator constant of the window kernels, via the tensor structure:
    // ||F^{-1} sigma_k||_{L1(R^n)} = prod_i ||F^{-1} eta_{k_i}||_{L1(R)}.
    Grid g1(1, w.grid().points(), w.grid().half_width());
    WindowFamily w1(g1);
    double axis_max = 0.0;
    for (int j = -w1.kmax(); j <= w1.kmax(); ++j) {
        std::vector<cplx> v(g1.size());
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] = w1.sigma_at({j, 0, 0}, i);
        double l1 = lp_norm(Field(g1, Rep::fourier, std::move(v)), 1.0);
        axis_max = std::max(axis_max, l1);
    }
    c.window_l1 = std::pow(axis_max, dim);
    return c;
}

InterpolationVerdict check_interpolation(const Field& f, const InterpolationCase& c,
                                         const WindowFamily& w,
                                         const InterpolationConstants& consts) {
    c.validate();
    InterpolationVerdict v{};
    const double th = c.theta();
    const double sp = c.s_plus();
    if (c.variant == InterpVariant::m21) {
        v.lhs = modulation_norm(f, {SpaceKind::m21, c.s}, w);
        double msp = modulation_norm(f, {SpaceKind::m21, sp}, w);
        double l2 = lp_norm(f, 2.0);
        v.rhs = std::pow(consts.tail_active, th) * std::pow(msp, 1.0 - 2.0 * th) *
                std::pow(l2, 2.0 * th);
    } else {
        v.lhs = modulation_norm(f, {SpaceKind::m11, c.s}, w);
        double msp = modulation_norm(f, {SpaceKind::m11, sp}, w);
        double l1 = lp_norm(f, 1.0);
        v.rhs = std::pow(consts.tail_active * consts.window_l1, th) *
                std::pow(msp, 1.0 - th) * std::pow(l1, th);
    }
    v.degenerate = v.lhs == 0.0;
    v.slack = v.degenerate ? p_inf : v.rhs / v.lhs;
    v.pass = v.degenerate || v.lhs <= v.rhs * (1.0 + 1e-10);
    return v;
}

SmoothingReport smoothing_probe(const SmoothingSpec& spec, const Grid& grid,
                                const WindowFamily& w) {
    if (grid.dim() != 1)
        throw std::invalid_argument("smoothing_probe: 1D only");
    for (int k : spec.k_list)
        if (std::abs(k) < 4)
            throw std::invalid_argument("smoothing_probe: |k| >= 4 required");
    SmoothingReport rep{};
    rep.max_normalized = 0.0;

    // Flat-spectrum probe field: box_k phi = F^{-1} sigma_k, identical in
    // shape for every k up to modulation.
    std::vector<cplx> ones(grid.size(), cplx(1.0, 0.0));
    const Field phi(grid, Rep::fourier, std::move(ones));

    const std::size_t steps = static_cast<std::size_t>(std::llround(spec.t_window / spec.dt));
    for (int k : spec.k_list) {
        double per_k = 0.0;
        for (double nu : spec.nu_list) {
            Field piece = box(phi, {k, 0, 0}, w);
            const double denom = lp_norm(piece, 2.0);
            if (denom == 0.0)
                throw std::invalid_argument(
                    "smoothing_probe: k outside the grid's resolvable window range");
            // Trapezoid-in-t accumulation of |u(x, t)|^2 at every x.
            std::vector<double> acc(grid.size(), 0.0);
            Field state = piece;
            for (std::size_t j = 0; j <= steps; ++j) {
                double wt = (j == 0 || j == steps) ? 0.5 : 1.0;
                Field ph = to_physical(state);
                for (std::size_t i = 0; i < acc.size(); ++i)
                    acc[i] += wt * spec.dt * std::norm(ph[i]);
                if (j < steps)
                    state = apply_flow(state, spec.dt, nu);
            }
            double sup = 0.0;
            for (double a : acc)
                sup = std::max(sup, a);
            double ratio = std::sqrt(sup) / denom;
            double normalized = ratio * std::sqrt(1.0 + std::abs(static_cast<double>(k)));
            rep.rows.push_back({k, nu, ratio, normalized});
            per_k = std::max(per_k, normalized);
        }
        rep.per_k_max_normalized.push_back(per_k);
        rep.max_normalized = std::max(rep.max_normalized, per_k);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Kernel probe quadrature
// ---------------------------------------------------------------------------

namespace {

// 8-point Gauss-Legendre on [-1, 1].
constexpr double gl_x[8] = {-0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
                            -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
                            0.7966664774136267,  0.9602898564975363};
constexpr double gl_w[8] = {0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
                            0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
                            0.2223810344533745, 0.1012285362903763};

template <typename F>
cplx composite_gl(F&& f, double a, double b, int panels) {
    if (b <= a)
        return 0.0;
    panels = std::max(panels, 1);
    const double h = (b - a) / panels;
    cplx sum = 0.0;
    for (int p = 0; p < panels; ++p) {
        double mid = a + (p + 0.5) * h;
        for (int q = 0; q < 8; ++q)
            sum += gl_w[q] * f(mid + 0.5 * h * gl_x[q]);
    }
    return 0.5 * h * sum;
}

double si_series(double x) {
    double term = x;
    double sum = x;
    for (int m = 1; m < 30; ++m) {
        term *= -x * x / ((2 * m) * (2 * m + 1));
        double add = term / (2 * m + 1);
        sum += add;
        if (std::abs(add) < 1e-16)
            break;
    }
    return sum;
}

// int_x^inf sin(t)/t dt via the auxiliary functions
// f(x) = int_0^inf e^{-xt}/(1+t^2) dt, g(x) = int_0^inf t e^{-xt}/(1+t^2) dt.
double si_complement(double x) {
    if (x < 1.0)
        return M_PI / 2.0 - si_series(x);
    auto fx = composite_gl([&](double t) { return cplx(std::exp(-x * t) / (1.0 + t * t), 0.0); },
                           0.0, 50.0 / x, 64);
    auto gx = composite_gl(
        [&](double t) { return cplx(t * std::exp(-x * t) / (1.0 + t * t), 0.0); }, 0.0,
        50.0 / x, 64);
    return fx.real() * std::cos(x) + gx.real() * std::sin(x);
}

}  // namespace

void KernelProbeSpec::validate() const {
    if (!(cutoff > 4.0))
        throw std::invalid_argument("KernelProbeSpec: cutoff too small");
    if (panels_per_unit < 1)
        throw std::invalid_argument("KernelProbeSpec: panels_per_unit must be >= 1");
    if (!(pv_half_width > 0.0))
        throw std::invalid_argument("KernelProbeSpec: pv window must be positive");
    for (double nu : nu_list)
        if (nu < 0.0 || nu > 1.0)
            throw std::invalid_argument("KernelProbeSpec: nu must be in [0, 1]");
    for (double s : s_list)
        if (s < 0.0)
            throw std::invalid_argument("KernelProbeSpec: s must be >= 0");
}

namespace {

// int_{a}^{b} e^{i z xi} / (xi - p) dxi on a symmetric window about the
// near-singular point. The pole term integrates to a logarithm (principal
// value when p is real and interior); the rest, (e^{izu} - 1)/u, is entire
// and handled by panel quadrature along the shifted segment.
cplx windowed_pole_integral(double z, double a, double b, cplx p, int panels) {
    const cplx alpha = cplx(a, 0.0) - p;
    const cplx beta = cplx(b, 0.0) - p;
    auto entire = [&](double t) {
        cplx u = alpha + t * (beta - alpha);
        cplx zu = cplx(0.0, z) * u;
        cplx num = std::abs(zu) < 1e-8 ? zu * (1.0 + 0.5 * zu) : std::exp(zu) - 1.0;
        return num / u * (beta - alpha);
    };
    cplx log_term;
    if (p.imag() == 0.0 && a < p.real() && p.real() < b) {
        // True principal value: symmetric log magnitudes only.
        log_term = cplx(std::log(std::abs(beta)) - std::log(std::abs(alpha)), 0.0);
    } else {
        log_term = std::log(beta) - std::log(alpha);
    }
    return std::exp(cplx(0.0, z) * p) * (composite_gl(entire, 0.0, 1.0, panels) + log_term);
}

}  // namespace

cplx kernel_value(double tau, double z, double nu, double s, const KernelProbeSpec& spec) {
    const cplx one_m_inu(1.0, -nu);
    const cplx shift(tau, -nu * s);  // D(xi) = (1 - i nu) xi^2 + shift
    auto den = [&](double xi) { return one_m_inu * xi * xi + shift; };
    auto f = [&](double xi) { return std::exp(cplx(0.0, z * xi)) * xi / den(xi); };

    const double cut = spec.cutoff;
    auto panels = [&](double a, double b) {
        return std::max(1, static_cast<int>(std::ceil((b - a) * spec.panels_per_unit)));
    };

    cplx total = 0.0;
    // Partial fractions: xi / D(xi) = (A/2)[1/(xi - p) + 1/(xi + p)] with
    // p the principal root of -shift/(1 - i nu); Im p >= 0 always.
    const cplx amp = 1.0 / one_m_inu;
    const cplx p = std::sqrt(-shift / one_m_inu);
    const double x0 = p.real();
    const bool near_real_pole = tau <= 0.0 && x0 > 0.0;

    if (!near_real_pole) {
        total += composite_gl(f, -cut, cut, panels(-cut, cut));
    } else {
        // Symmetric windows about +-x0; the near pole is removed exactly and
        // the far-pole remainder is smooth there.
        const double wv = std::min(spec.pv_half_width, 0.5 * x0);
        const int wp = std::max(8, panels(0.0, 2.0 * wv) * 4);
        auto far_p = [&](double xi) {
            return 0.5 * amp * std::exp(cplx(0.0, z * xi)) / (cplx(xi, 0.0) + p);
        };
        auto far_m = [&](double xi) {
            return 0.5 * amp * std::exp(cplx(0.0, z * xi)) / (cplx(xi, 0.0) - p);
        };
        total += 0.5 * amp * windowed_pole_integral(z, x0 - wv, x0 + wv, p, wp);
        total += composite_gl(far_p, x0 - wv, x0 + wv, wp);
        total += 0.5 * amp * windowed_pole_integral(z, -x0 - wv, -x0 + wv, -p, wp);
        total += composite_gl(far_m, -x0 - wv, -x0 + wv, wp);
        const int mid_boost = x0 < 2.0 * spec.pv_half_width ? 8 : 1;
        total += composite_gl(f, -cut, -x0 - wv, panels(-cut, -x0 - wv));
        total += composite_gl(f, -x0 + wv, x0 - wv,
                              panels(-x0 + wv, x0 - wv) * mid_boost);
        total += composite_gl(f, x0 + wv, cut, panels(x0 + wv, cut));
    }

    // Tail |xi| > cutoff: split g = A/xi + r with A = 1/(1 - i nu) and
    // r = -shift A / (xi D(xi)) = O(xi^{-3}).
    if (z != 0.0) {
        double sc = si_complement(std::abs(z) * cut);
        total += amp * cplx(0.0, 2.0 * (z > 0.0 ? 1.0 : -1.0) * sc);
    }
    const double big = 8.0 * cut;
    auto rem = [&](double xi) {
        return std::exp(cplx(0.0, z * xi)) * (-shift) * amp / (xi * den(xi));
    };
    total += composite_gl(rem, cut, big, panels(cut, big));
    total += composite_gl(rem, -big, -cut, panels(-big, -cut));

    const double kappa = std::abs(one_m_inu) - (std::abs(tau) + nu * s) / (big * big);
    if (!(kappa > 0.0))
        throw std::invalid_argument("kernel_value: cutoff too small for tail bound");
    const double bound = std::abs(shift) * std::abs(amp) / (kappa * big * big);
    if (bound > spec.tail_tol)
        throw std::invalid_argument("kernel_value: tail estimate above tolerance");
    return total;
}

KernelProbeReport kernel_probe(const KernelProbeSpec& spec) {
    spec.validate();
    auto max_abs = [](const KernelProbeSpec& sp) {
        double m = 0.0;
        for (double tau : sp.tau_list)
            for (double z : sp.z_list)
                for (double nu : sp.nu_list)
                    for (double s : sp.s_list)
                        m = std::max(m, std::abs(kernel_value(tau, z, nu, s, sp)));
        return m;
    };
    KernelProbeReport rep{};
    rep.max_abs = max_abs(spec);
    KernelProbeSpec dense = spec;
    dense.panels_per_unit *= 2;
    rep.max_abs_nodes_x2 = max_abs(dense);
    KernelProbeSpec wide = spec;
    wide.cutoff *= 2.0;
    rep.max_abs_cutoff_x2 = max_abs(wide);
    auto within = [&](double a, double b) { return std::abs(a - b) <= 0.2 * std::max(a, b); };
    rep.stable = within(rep.max_abs, rep.max_abs_nodes_x2) &&
                 within(rep.max_abs, rep.max_abs_cutoff_x2);
    return rep;
}

}  // namespace mpde
