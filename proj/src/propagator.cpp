#include "mpde/propagator.hpp"

#include <cmath>

#include "mpde/norms.hpp"

namespace mpde {

Field apply_flow(const Field& f, double t, double nu) {
    if (nu < 0.0 || nu > 1.0)
        throw std::invalid_argument("apply_flow: nu must be in [0, 1]");
    if (t < 0.0 && nu > 0.0)
        throw std::invalid_argument("apply_flow: t < 0 with nu > 0 is ill-posed");
    const Grid& g = f.grid();
    Field fh = to_fourier(f);
    std::vector<cplx> v = fh.values();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == cplx(0.0, 0.0))
            continue;
        auto idx = g.unflatten(i);
        double xi2 = 0.0;
        for (int d = 0; d < g.dim(); ++d) {
            double xi = g.xi(idx[d]);
            xi2 += xi * xi;
        }
        v[i] *= std::exp(cplx(-nu * t * xi2, -t * xi2));
    }
    Field out(g, Rep::fourier, std::move(v));
    return f.rep() == Rep::physical ? to_physical(out) : out;
}

Field duhamel(const Trajectory& forcing, double nu, double t) {
    if (forcing.size() < 2)
        throw std::invalid_argument("duhamel: need >= 2 forcing samples");
    const double dt = forcing.dt();
    for (std::size_t j = 1; j < forcing.size(); ++j)
        if (std::abs(forcing.times[j] - forcing.times[j - 1] - dt) > 1e-12 * std::max(1.0, dt))
            throw std::invalid_argument("duhamel: forcing samples not uniform");
    if (std::abs(forcing.times.front()) > 1e-12 ||
        forcing.times.back() < t - 1e-12)
        throw std::invalid_argument("duhamel: samples do not cover [0, t]");
    const std::size_t m = static_cast<std::size_t>(std::llround(t / dt));
    if (std::abs(m * dt - t) > 1e-10 * std::max(1.0, t) || m >= forcing.size())
        throw std::invalid_argument("duhamel: t is not a sample node");

    const Grid& g = forcing.snapshots.front().grid();
    Field acc(g, Rep::fourier);
    for (std::size_t j = 0; j <= m; ++j) {
        double wgt = (j == 0 || j == m) ? 0.5 : 1.0;
        Field term = apply_flow(to_fourier(forcing.snapshots[j]), t - forcing.times[j], nu);
        acc = acc + cplx(wgt * dt, 0.0) * term;
    }
    return acc;
}

MultiplierProbeReport flow_multiplier_probe(const Field& u0, const std::array<int, 3>& k,
                                            const std::vector<double>& t_grid,
                                            const std::vector<double>& nu_grid, double p,
                                            const WindowFamily& w) {
    if (!(p >= 1.0))
        throw std::invalid_argument("flow_multiplier_probe: p must be >= 1");
    MultiplierProbeReport rep{};
    rep.max_normalized = 0.0;
    const Field piece = box(u0, k, w);
    const double denom = lp_norm(piece, p);
    const double n_half = 0.5 * u0.grid().dim();
    for (double nu : nu_grid) {
        for (double t : t_grid) {
            double num = lp_norm(apply_flow(piece, t, nu), p);
            double ratio = denom > 0.0 ? num / denom : 0.0;
            double normalized = ratio / (1.0 + std::pow(t, n_half));
            rep.rows.push_back({t, nu, ratio, normalized});
            rep.max_normalized = std::max(rep.max_normalized, normalized);
        }
    }
    return rep;
}

}  // namespace mpde
