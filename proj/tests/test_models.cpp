#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mpde/model.hpp"
#include "mpde/norms.hpp"
#include "mpde/random_field.hpp"

using namespace mpde;

TEST_CASE("dealias zeroes the top third of modes and nothing else") {
    Grid g(1, 96, 4.0 * M_PI);
    std::vector<cplx> v(g.size(), cplx(1.0, 0.0));
    Field f = dealias(Field(g, Rep::fourier, std::move(v)));
    for (int i = 0; i < g.points(); ++i) {
        bool kept = std::abs(g.freq_index(i)) < g.points() / 3;
        CHECK(f[static_cast<std::size_t>(i)] == (kept ? cplx(1.0, 0.0) : cplx(0.0, 0.0)));
    }
}

TEST_CASE("quadratic nonlinearity on a pure mode is exact") {
    // u = e^{i xi x}: lambda . grad(u^2) = 2 i xi lambda e^{2 i xi x}.
    Grid g(1, 128, 4.0 * M_PI);
    const int m = 6;
    const double xi = g.dxi() * m;
    Field u = sample(g, [&](const std::array<double, 3>& x) {
        return std::exp(cplx(0.0, xi * x[0]));
    });
    ModelParams p;
    p.kind = ModelKind::quadratic;
    p.lambda = {cplx(0.3, 0.1), 0.0, 0.0};
    Field n = to_physical(nonlinearity(u, p));
    double worst = 0.0;
    for (int j = 0; j < g.points(); ++j) {
        double x = g.x(j);
        cplx expect = 2.0 * cplx(0.0, xi) * p.lambda[0] * std::exp(cplx(0.0, 2.0 * xi * x));
        worst = std::max(worst, std::abs(n[static_cast<std::size_t>(j)] - expect));
    }
    CHECK(worst < 1e-11);
}

TEST_CASE("power term on a constant state is algebraic") {
    // u = c: nonlinearity reduces to alpha |c|^{2 delta} c.
    Grid g(1, 64, 4.0 * M_PI);
    const cplx c(0.4, -0.3);
    Field u = sample(g, [&](const std::array<double, 3>&) { return c; });
    ModelParams p;
    p.kind = ModelKind::cgl_power;
    p.alpha = cplx(0.0, 1.0);
    p.delta = 2;
    Field n = to_physical(nonlinearity(u, p));
    const cplx expect = p.alpha * std::pow(std::norm(c), p.delta) * c;
    for (const auto& val : n.values())
        CHECK(std::abs(val - expect) < 1e-12);
}

TEST_CASE("direct and expanded cubic forms agree on band-limited fields") {
    for (int dim : {1, 2, 3}) {
        const int N = dim == 3 ? 16 : 48;
        Grid g(dim, N, 4.0 * M_PI);
        ModelParams p;
        p.kind = ModelKind::dcgl_cubic;
        for (int d = 0; d < dim; ++d) {
            p.lambda1[static_cast<std::size_t>(d)] = cplx(0.2, -0.1 * d);
            p.lambda2[static_cast<std::size_t>(d)] = cplx(-0.05, 0.15);
        }
        p.alpha = cplx(0.3, 0.2);
        p.delta = 1;
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            Field u = random_band_limited(g, seed, N / 8, 1.0);
            Field a = nonlinearity(u, p);
            Field b = nonlinearity_expanded(u, p);
            double rel = lp_norm(a - b, 2.0) / lp_norm(a, 2.0);
            CHECK(rel <= 1e-11);
        }
    }
}

TEST_CASE("dnls kind forbids nu > 0") {
    ModelParams p;
    p.kind = ModelKind::dnls_cubic;
    p.nu = 0.1;
    p.lambda1 = {cplx(0.1, 0.0), 0.0, 0.0};
    CHECK_THROWS_AS(p.validate(1), std::invalid_argument);
    p.nu = 0.0;
    CHECK_NOTHROW(p.validate(1));
}

TEST_CASE("nu outside [0, 1] is rejected") {
    ModelParams p;
    p.kind = ModelKind::quadratic;
    p.lambda = {cplx(0.1, 0.0), 0.0, 0.0};
    p.nu = 1.5;
    CHECK_THROWS_AS(p.validate(1), std::invalid_argument);
    p.nu = -0.1;
    CHECK_THROWS_AS(p.validate(1), std::invalid_argument);
}

TEST_CASE("any_nonlinear distinguishes pure linear parameter sets") {
    ModelParams p;
    p.kind = ModelKind::dcgl_cubic;
    CHECK_FALSE(p.any_nonlinear(2));
    p.alpha = cplx(0.1, 0.0);
    CHECK(p.any_nonlinear(2));
}

TEST_CASE("nonlinearity output is dealiased") {
    Grid g(1, 96, 4.0 * M_PI);
    ModelParams p;
    p.kind = ModelKind::quadratic;
    p.lambda = {cplx(1.0, 0.0), 0.0, 0.0};
    Field u = random_band_limited(g, 9, 40, 1.0);
    Field n = to_fourier(nonlinearity(u, p));
    for (int i = 0; i < g.points(); ++i)
        if (std::abs(g.freq_index(i)) >= g.points() / 3)
            CHECK(std::abs(n[static_cast<std::size_t>(i)]) == 0.0);
}
