#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mpde/norms.hpp"
#include "mpde/propagator.hpp"
#include "mpde/random_field.hpp"
#include "mpde/solver.hpp"

using namespace mpde;

namespace {

Field gaussian_data(const Grid& g, double amplitude) {
    return sample(g, [&](const std::array<double, 3>& x) {
        double r2 = 0.0;
        for (int d = 0; d < g.dim(); ++d)
            r2 += x[static_cast<std::size_t>(d)] * x[static_cast<std::size_t>(d)];
        return cplx(amplitude * std::exp(-0.5 * r2), 0.0);
    });
}

double sup_l2_gap(const Trajectory& a, const Trajectory& b) {
    double m = 0.0;
    for (std::size_t j = 0; j < std::min(a.size(), b.size()); ++j)
        m = std::max(m, lp_norm(to_fourier(a.snapshots[j]) - to_fourier(b.snapshots[j]), 2.0));
    return m;
}

ModelParams model_of_kind(ModelKind kind) {
    ModelParams p;
    p.kind = kind;
    switch (kind) {
        case ModelKind::dcgl_cubic:
            p.nu = 0.1;
            p.lambda1 = {cplx(0.1, 0.05), 0.0, 0.0};
            p.lambda2 = {cplx(-0.05, 0.1), 0.0, 0.0};
            p.alpha = cplx(0.1, 0.1);
            break;
        case ModelKind::dnls_cubic:
            p.nu = 0.0;
            p.lambda1 = {cplx(0.1, 0.05), 0.0, 0.0};
            break;
        case ModelKind::cgl_power:
            p.nu = 0.1;
            p.alpha = cplx(0.0, 0.2);
            p.delta = 1;
            break;
        case ModelKind::quadratic:
            p.nu = 0.1;
            p.lambda = {cplx(0.2, 0.0), 0.0, 0.0};
            break;
    }
    return p;
}

}  // namespace

TEST_CASE("pure linear model: Strang stepping equals the exact flow") {
    Grid g(1, 128, 4.0 * M_PI);
    Field u0 = to_fourier(random_band_limited(g, 1, 20, 1.0));
    ModelParams p;
    p.kind = ModelKind::dcgl_cubic;
    p.nu = 0.2;
    SolverConfig c;
    c.dt = 0.05;
    c.horizon = 1.0;
    Trajectory traj = solve(u0, p, c);
    REQUIRE(traj.status == RunStatus::completed);
    REQUIRE(traj.size() == 21);
    double worst = 0.0;
    for (std::size_t j = 0; j < traj.size(); ++j) {
        Field exact = apply_flow(u0, traj.times[j], p.nu);
        worst = std::max(worst, lp_norm(to_fourier(traj.snapshots[j]) - exact, 2.0));
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("pure Schrodinger run conserves L2 over a long horizon") {
    Grid g(1, 64, 4.0 * M_PI);
    Field u0 = to_fourier(random_band_limited(g, 2, 10, 1.0));
    ModelParams p;
    p.kind = ModelKind::dnls_cubic;  // all coefficients zero
    p.nu = 0.0;
    SolverConfig c;
    c.dt = 0.05;
    c.horizon = 10.0;
    c.snapshot_stride = 20;
    Trajectory traj = solve(u0, p, c);
    REQUIRE(traj.status == RunStatus::completed);
    const double n0 = lp_norm(u0, 2.0);
    for (const auto& snap : traj.snapshots)
        CHECK(std::abs(lp_norm(to_fourier(snap), 2.0) - n0) <= 1e-12);
}

TEST_CASE("Strang self-convergence order is at least 1.9") {
    Grid g(1, 128, 4.0 * M_PI);
    Field u0 = to_fourier(gaussian_data(g, 0.3));
    ModelParams p = model_of_kind(ModelKind::quadratic);
    const double T = 0.4;
    auto endpoint = [&](double dt) {
        SolverConfig c;
        c.dt = dt;
        c.horizon = T;
        c.snapshot_stride = static_cast<int>(std::llround(T / dt));  // endpoint only
        return to_fourier(solve(u0, p, c).back());
    };
    Field ref = endpoint(0.005);
    double e1 = lp_norm(endpoint(0.04) - ref, 2.0);
    double e2 = lp_norm(endpoint(0.02) - ref, 2.0);
    double order = std::log2(e1 / e2);
    CHECK(order >= 1.9);
}

TEST_CASE("Picard on the linear problem converges immediately") {
    Grid g(1, 64, 4.0 * M_PI);
    Field u0 = to_fourier(random_band_limited(g, 3, 10, 0.5));
    ModelParams p;
    p.kind = ModelKind::dnls_cubic;
    SolverConfig c;
    c.dt = 0.05;
    c.horizon = 0.5;
    PicardInfo info;
    Trajectory traj = solve_picard(u0, p, c, &info);
    REQUIRE(traj.status == RunStatus::completed);
    CHECK(info.iterations <= 2);
    double worst = 0.0;
    for (std::size_t j = 0; j < traj.size(); ++j)
        worst = std::max(worst, lp_norm(to_fourier(traj.snapshots[j]) -
                                            apply_flow(u0, traj.times[j], 0.0),
                                        2.0));
    CHECK(worst <= 1e-12);
}

TEST_CASE("Picard and Strang agree for every model kind on small data") {
    Grid g(1, 128, 4.0 * M_PI);
    Field u0 = to_fourier(gaussian_data(g, 0.05));
    for (ModelKind kind : {ModelKind::dcgl_cubic, ModelKind::dnls_cubic, ModelKind::cgl_power,
                           ModelKind::quadratic}) {
        ModelParams p = model_of_kind(kind);
        SolverConfig c;
        c.dt = 0.005;
        c.horizon = 0.5;
        Trajectory a = solve(u0, p, c);
        Trajectory b = solve_picard(u0, p, c);
        REQUIRE(a.status == RunStatus::completed);
        REQUIRE(b.status == RunStatus::completed);
        CHECK(sup_l2_gap(a, b) <= 1e-6);
    }
}

TEST_CASE("Picard iterate gaps decay geometrically on small data") {
    Grid g(1, 64, 4.0 * M_PI);
    Field u0 = to_fourier(gaussian_data(g, 0.05));
    ModelParams p = model_of_kind(ModelKind::quadratic);
    SolverConfig c;
    c.dt = 0.01;
    c.horizon = 0.5;
    PicardInfo info;
    Trajectory traj = solve_picard(u0, p, c, &info);
    REQUIRE(traj.status == RunStatus::completed);
    REQUIRE(info.iterate_diffs.size() >= 2);
    for (std::size_t i = 1; i < info.iterate_diffs.size(); ++i)
        if (info.iterate_diffs[i - 1] > 1e-14)
            CHECK(info.iterate_diffs[i] / info.iterate_diffs[i - 1] <= 0.5);
}

TEST_CASE("Picard reports divergence above the contraction regime") {
    Grid g(1, 64, 4.0 * M_PI);
    Field u0 = to_fourier(gaussian_data(g, 10.0));
    ModelParams p = model_of_kind(ModelKind::quadratic);
    p.lambda = {cplx(1.0, 0.0), 0.0, 0.0};
    SolverConfig c;
    c.dt = 0.02;
    c.horizon = 1.0;
    Trajectory traj = solve_picard(u0, p, c);
    CHECK(traj.status == RunStatus::diverged_picard);
}

TEST_CASE("blowup detection terminates the march and keeps finite snapshots") {
    Grid g(1, 64, 4.0 * M_PI);
    Field u0 = to_fourier(gaussian_data(g, 50.0));
    ModelParams p = model_of_kind(ModelKind::quadratic);
    p.lambda = {cplx(2.0, 0.0), 0.0, 0.0};
    SolverConfig c;
    c.dt = 0.05;
    c.horizon = 5.0;
    Trajectory traj = solve(u0, p, c);
    CHECK(traj.status == RunStatus::blowup);
    CHECK(traj.size() >= 1);
    for (const auto& v : traj.back().values())
        CHECK(std::isfinite(std::abs(v)));
}

TEST_CASE("identical runs are bit-identical") {
    Grid g(1, 128, 4.0 * M_PI);
    Field u0 = to_fourier(random_band_limited(g, 5, 15, 0.05));
    ModelParams p = model_of_kind(ModelKind::dcgl_cubic);
    SolverConfig c;
    c.dt = 0.01;
    c.horizon = 0.5;
    Trajectory a = solve(u0, p, c);
    Trajectory b = solve(u0, p, c);
    REQUIRE(a.size() == b.size());
    for (std::size_t j = 0; j < a.size(); ++j)
        for (std::size_t i = 0; i < g.size(); ++i)
            CHECK(a.snapshots[j][i] == b.snapshots[j][i]);
}

TEST_CASE("solver config validation") {
    SolverConfig c;
    c.dt = 0.0;
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c.dt = 0.3;
    c.horizon = 1.0;  // not an integer multiple of dt
    CHECK_THROWS_AS(c.validate(), std::invalid_argument);
    c.dt = 0.25;
    CHECK_NOTHROW(c.validate());
}
