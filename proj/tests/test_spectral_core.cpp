#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "mpde/field.hpp"
#include "mpde/norms.hpp"
#include "mpde/random_field.hpp"

using namespace mpde;

namespace {

Field random_physical(const Grid& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    std::vector<cplx> v(g.size());
    for (auto& c : v)
        c = cplx(gauss(rng), gauss(rng));
    return Field(g, Rep::physical, std::move(v));
}

double max_diff(const Field& a, const Field& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.values().size(); ++i)
        m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace

TEST_CASE("grid index round trip and frequency layout") {
    Grid g(2, 16, 4.0);
    for (std::size_t i = 0; i < g.size(); ++i)
        CHECK(g.flatten(g.unflatten(i)) == i);
    CHECK(g.freq_index(0) == 0);
    CHECK(g.freq_index(7) == 7);
    CHECK(g.freq_index(8) == -8);
    CHECK(g.freq_index(15) == -1);
    CHECK(g.xi(1) == doctest::Approx(M_PI / 4.0));
    CHECK(g.x(0) == -4.0);
}

TEST_CASE("grid constructor rejects bad parameters") {
    CHECK_THROWS_AS(Grid(0, 16, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(Grid(4, 16, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(Grid(1, 15, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(Grid(1, 4, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(Grid(1, 16, 0.0), std::invalid_argument);
}

TEST_CASE("transform round trip is the identity") {
    for (int dim : {1, 2, 3}) {
        Grid g(dim, dim == 3 ? 8 : 32, 2.5);
        Field f = random_physical(g, 7);
        Field back = to_physical(to_fourier(f));
        CHECK(max_diff(f, back) < 1e-12);
    }
}

TEST_CASE("forward transform of a pure mode hits a single coefficient") {
    // f(x) = e^{i m (pi/L) x} has F f = 2L at storage index m, zero elsewhere.
    Grid g(1, 32, 2.0);
    const int m = 5;
    Field f = sample(g, [&](const std::array<double, 3>& x) {
        return std::exp(cplx(0.0, g.dxi() * m * x[0]));
    });
    Field fh = to_fourier(f);
    for (int i = 0; i < g.points(); ++i) {
        cplx expect = g.freq_index(i) == m ? cplx(2.0 * g.half_width(), 0.0) : cplx(0.0, 0.0);
        CHECK(std::abs(fh[static_cast<std::size_t>(i)] - expect) < 1e-12);
    }
}

TEST_CASE("Plancherel: L2 norm agrees across representations") {
    for (int dim : {1, 2}) {
        Grid g(dim, 32, 3.0);
        Field f = random_physical(g, 11);
        double a = lp_norm(f, 2.0);
        double b = lp_norm(to_fourier(f), 2.0);
        CHECK(a == doctest::Approx(b).epsilon(1e-12));
    }
}

TEST_CASE("L2 norm of a Gaussian matches the continuum integral") {
    // ||e^{-x^2/2}||_2 = pi^{1/4}; periodization error is far below tolerance.
    Grid g(1, 256, 4.0 * M_PI);
    Field f = sample(g, [](const std::array<double, 3>& x) {
        return cplx(std::exp(-0.5 * x[0] * x[0]), 0.0);
    });
    CHECK(lp_norm(f, 2.0) == doctest::Approx(std::pow(M_PI, 0.25)).epsilon(1e-10));
}

TEST_CASE("derivative of a Gaussian matches the analytic derivative") {
    Grid g(1, 256, 4.0 * M_PI);
    Field f = sample(g, [](const std::array<double, 3>& x) {
        return cplx(std::exp(-0.5 * x[0] * x[0]), 0.0);
    });
    Field df = to_physical(derivative(f, 0));
    double m = 0.0;
    for (int j = 0; j < g.points(); ++j) {
        double x = g.x(j);
        m = std::max(m, std::abs(df[static_cast<std::size_t>(j)] -
                                 cplx(-x * std::exp(-0.5 * x * x), 0.0)));
    }
    CHECK(m < 1e-8);
}

TEST_CASE("derivative of a pure mode is exact") {
    Grid g(1, 64, 2.0);
    const int m = 3;
    const double xi = g.dxi() * m;
    Field f = sample(g, [&](const std::array<double, 3>& x) {
        return std::exp(cplx(0.0, xi * x[0]));
    });
    Field d2 = to_physical(derivative(f, 0, 2));
    Field expect = cplx(-xi * xi, 0.0) * f;
    CHECK(max_diff(d2, expect) < 1e-10);
}

TEST_CASE("fractional derivative reduces to |xi|^s on a mode") {
    Grid g(1, 64, 2.0);
    const int m = -5;
    const double xi = std::abs(g.dxi() * m);
    Field f = sample(g, [&](const std::array<double, 3>& x) {
        return std::exp(cplx(0.0, g.dxi() * m * x[0]));
    });
    Field half = to_physical(fractional_derivative(f, 0, 0.5));
    Field expect = cplx(std::pow(xi, 0.5), 0.0) * f;
    CHECK(max_diff(half, expect) < 1e-10);
}

TEST_CASE("mixed norm of a constant is the product of measure powers") {
    Grid g(2, 16, 1.0);
    Trajectory traj;
    for (int j = 0; j < 3; ++j) {
        traj.times.push_back(0.5 * j);
        traj.snapshots.push_back(sample(g, [](const std::array<double, 3>&) {
            return cplx(2.0, 0.0);
        }));
    }
    // L_t^inf L_{x_0}^2 L_{x_1}^inf of the constant 2: 2 * (2L)^{1/2}.
    double v = mixed_norm(traj, {{1, p_inf}, {0, 2.0}, {time_dim, p_inf}});
    CHECK(v == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-12));
    // All-2 exponents recover the space-time L2 norm with the dt weight.
    double v2 = mixed_norm(traj, {{1, 2.0}, {0, 2.0}, {time_dim, 2.0}});
    CHECK(v2 == doctest::Approx(2.0 * std::sqrt(4.0 * 1.5)).epsilon(1e-12));
}

TEST_CASE("mixed norm rejects missing or repeated dimensions") {
    Grid g(1, 16, 1.0);
    Trajectory traj;
    traj.times = {0.0};
    traj.snapshots = {Field(g, Rep::physical)};
    CHECK_THROWS_AS(mixed_norm(traj, {{0, 2.0}}), std::invalid_argument);
    CHECK_THROWS_AS(mixed_norm(traj, {{0, 2.0}, {0, 2.0}}), std::invalid_argument);
}

TEST_CASE("random band-limited fields are reproducible and normalized") {
    Grid g(1, 64, 4.0);
    Field a = random_band_limited(g, 42, 8, 0.5);
    Field b = random_band_limited(g, 42, 8, 0.5);
    CHECK(max_diff(a, b) == 0.0);
    CHECK(lp_norm(a, 2.0) == doctest::Approx(0.5).epsilon(1e-12));
    Field c = random_band_limited(g, 43, 8, 0.5);
    CHECK(max_diff(a, c) > 1e-6);
    // Band limit respected.
    for (int i = 0; i < g.points(); ++i)
        if (std::abs(g.freq_index(i)) > 8)
            CHECK(std::abs(a[static_cast<std::size_t>(i)]) == 0.0);
}

TEST_CASE("transforms are deterministic across repeated evaluation") {
    Grid g(2, 32, 2.0);
    Field f = random_physical(g, 3);
    Field a = to_fourier(f);
    Field b = to_fourier(f);
    CHECK(max_diff(a, b) == 0.0);
}
