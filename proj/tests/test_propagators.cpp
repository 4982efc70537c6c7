#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mpde/norms.hpp"
#include "mpde/propagator.hpp"
#include "mpde/random_field.hpp"

using namespace mpde;

namespace {

double max_diff(const Field& a, const Field& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.values().size(); ++i)
        m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace

TEST_CASE("semigroup composition: G(t) G(s) = G(t + s)") {
    Grid g(1, 128, 4.0 * M_PI);
    Field u0 = to_fourier(random_band_limited(g, 1, 20, 1.0));
    for (double nu : {0.0, 0.3}) {
        Field two_step = apply_flow(apply_flow(u0, 0.3, nu), 0.45, nu);
        Field one_step = apply_flow(u0, 0.75, nu);
        CHECK(lp_norm(two_step - one_step, 2.0) / lp_norm(one_step, 2.0) <= 1e-12);
    }
}

TEST_CASE("nu = 0 flow is an L2 isometry") {
    Grid g(2, 32, 4.0 * M_PI);
    Field u0 = to_fourier(random_band_limited(g, 2, 8, 1.0));
    double before = lp_norm(u0, 2.0);
    double after = lp_norm(apply_flow(u0, 2.7, 0.0), 2.0);
    CHECK(std::abs(after - before) / before <= 1e-13);
}

TEST_CASE("flow of a Gaussian matches the closed-form complex heat solution") {
    // u(x, t) = (1 + 2(nu + i) t)^{-1/2} exp(-x^2 / (2 (1 + 2(nu + i) t)))
    Grid g(1, 512, 4.0 * M_PI);
    Field u0 = sample(g, [](const std::array<double, 3>& x) {
        return cplx(std::exp(-0.5 * x[0] * x[0]), 0.0);
    });
    for (double nu : {0.0, 0.1, 1.0}) {
        const double t = 0.4;
        Field ut = to_physical(apply_flow(to_fourier(u0), t, nu));
        const cplx a = 1.0 + 2.0 * cplx(nu, 1.0) * t;
        double m = 0.0;
        for (int j = 0; j < g.points(); ++j) {
            double x = g.x(j);
            cplx expect = std::exp(-x * x / (2.0 * a)) / std::sqrt(a);
            m = std::max(m, std::abs(ut[static_cast<std::size_t>(j)] - expect));
        }
        CHECK(m < 1e-8);
    }
}

TEST_CASE("backward diffusion is rejected, backward Schrodinger is fine") {
    Grid g(1, 32, 4.0 * M_PI);
    Field u0 = to_fourier(random_band_limited(g, 3, 4, 1.0));
    CHECK_THROWS_AS(apply_flow(u0, -0.1, 0.5), std::invalid_argument);
    CHECK_NOTHROW(apply_flow(u0, -0.1, 0.0));
    CHECK_THROWS_AS(apply_flow(u0, 0.1, 1.5), std::invalid_argument);
}

TEST_CASE("Duhamel integral of constant single-mode forcing matches the ODE formula") {
    // f(tau) = c e^{i m dxi x}: A[f](t) = c (1 - e^{-(nu + i) xi^2 t}) / ((nu + i) xi^2).
    Grid g(1, 64, 4.0 * M_PI);
    const int m = 8;
    const double xi = g.dxi() * m;
    Field mode = to_fourier(sample(g, [&](const std::array<double, 3>& x) {
        return std::exp(cplx(0.0, xi * x[0]));
    }));
    const double nu = 0.2, T = 0.5;
    const int steps = 400;
    Trajectory forcing;
    for (int j = 0; j <= steps; ++j) {
        forcing.times.push_back(T * j / steps);
        forcing.snapshots.push_back(mode);
    }
    Field integral = duhamel(forcing, nu, T);
    const cplx lam = cplx(nu, 1.0) * xi * xi;
    const cplx factor = (1.0 - std::exp(-lam * T)) / lam;
    Field expect = factor * mode;
    // Composite trapezoid: error O(dt^2) with a smooth scalar integrand.
    CHECK(max_diff(integral, expect) < 1e-4);
    // Halving dt shrinks the error by about 4.
    Trajectory fine;
    for (int j = 0; j <= 2 * steps; ++j) {
        fine.times.push_back(T * j / (2 * steps));
        fine.snapshots.push_back(mode);
    }
    double e1 = max_diff(integral, expect);
    double e2 = max_diff(duhamel(fine, nu, T), expect);
    CHECK(e1 / e2 > 3.5);
    CHECK(e1 / e2 < 4.5);
}

TEST_CASE("Duhamel rejects non-uniform sampling") {
    Grid g(1, 32, 4.0 * M_PI);
    Field z(g, Rep::fourier);
    Trajectory forcing;
    forcing.times = {0.0, 0.1, 0.35};
    forcing.snapshots = {z, z, z};
    CHECK_THROWS_AS(duhamel(forcing, 0.1, 0.35), std::invalid_argument);
}

TEST_CASE("flow multiplier probe stays bounded after (1 + t^{n/2}) normalization") {
    Grid g(1, 128, 4.0 * M_PI);
    WindowFamily w(g);
    Field u0 = to_fourier(random_band_limited(g, 4, 20, 1.0));
    auto rep = flow_multiplier_probe(u0, {5, 0, 0}, {0.1, 0.5, 1.0, 2.0, 5.0},
                                     {0.0, 0.01, 0.1, 1.0}, 4.0, w);
    CHECK(rep.rows.size() == 20);
    CHECK(std::isfinite(rep.max_normalized));
    CHECK(rep.max_normalized > 0.0);
    CHECK(rep.max_normalized < 10.0);
}
