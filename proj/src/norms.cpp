#include "mpde/norms.hpp"

#include <algorithm>
#include <cmath>

namespace mpde {

double lp_norm(const Field& f, double p) {
    if (!(p >= 1.0))
        throw std::invalid_argument("lp_norm: p must be in [1, inf]");
    const Grid& g = f.grid();
    if (f.rep() == Rep::fourier && p == 2.0) {
        double s = 0.0;
        for (const auto& c : f.values())
            s += std::norm(c);
        return std::sqrt(s / g.volume());
    }
    const Field ph = to_physical(f);
    if (p == p_inf) {
        double m = 0.0;
        for (const auto& c : ph.values())
            m = std::max(m, std::abs(c));
        return m;
    }
    double s = 0.0;
    for (const auto& c : ph.values())
        s += std::pow(std::abs(c), p);
    return std::pow(s * g.cell_volume(), 1.0 / p);
}

namespace {

// Reduce an nd array along one dimension with an l^p norm and weight w.
std::vector<double> reduce(const std::vector<double>& data, std::vector<std::size_t>& shape,
                           std::size_t dim, double p, double w) {
    std::size_t n = shape[dim];
    std::size_t inner = 1;
    for (std::size_t d = dim + 1; d < shape.size(); ++d)
        inner *= shape[d];
    std::size_t outer = data.size() / (n * inner);
    std::vector<double> out(outer * inner, 0.0);
    for (std::size_t o = 0; o < outer; ++o) {
        for (std::size_t k = 0; k < n; ++k) {
            const double* src = data.data() + (o * n + k) * inner;
            double* dst = out.data() + o * inner;
            if (p == p_inf) {
                for (std::size_t i = 0; i < inner; ++i)
                    dst[i] = std::max(dst[i], src[i]);
            } else {
                for (std::size_t i = 0; i < inner; ++i)
                    dst[i] += std::pow(src[i], p) * w;
            }
        }
    }
    if (p != p_inf)
        for (auto& v : out)
            v = std::pow(v, 1.0 / p);
    shape.erase(shape.begin() + static_cast<std::ptrdiff_t>(dim));
    return out;
}

}  // namespace

double mixed_norm(const Trajectory& traj, const std::vector<NormLevel>& ordering) {
    if (traj.size() == 0)
        throw std::invalid_argument("mixed_norm: empty trajectory");
    const Grid& g = traj.snapshots.front().grid();
    if (ordering.size() != static_cast<std::size_t>(g.dim()) + 1)
        throw std::invalid_argument("mixed_norm: ordering must cover t and every axis");
    std::vector<bool> seen(static_cast<std::size_t>(g.dim()) + 1, false);
    for (const auto& lv : ordering) {
        int slot = lv.dim == time_dim ? 0 : lv.dim + 1;
        if (slot < 0 || slot > g.dim() || seen[static_cast<std::size_t>(slot)])
            throw std::invalid_argument("mixed_norm: bad or repeated dimension");
        if (!(lv.p >= 1.0))
            throw std::invalid_argument("mixed_norm: p must be in [1, inf]");
        seen[static_cast<std::size_t>(slot)] = true;
    }

    const double dt = traj.size() > 1 ? traj.dt() : 1.0;

    // Data cube |u| with shape (t, x_0, ..., x_{n-1}).
    std::vector<std::size_t> shape;
    shape.push_back(traj.size());
    for (int d = 0; d < g.dim(); ++d)
        shape.push_back(static_cast<std::size_t>(g.points()));
    std::vector<double> data;
    data.reserve(traj.size() * g.size());
    for (const auto& snap : traj.snapshots) {
        Field ph = to_physical(snap);
        for (const auto& c : ph.values())
            data.push_back(std::abs(c));
    }

    // Track which original dimension each remaining array axis holds.
    std::vector<int> dims_left;
    dims_left.push_back(time_dim);
    for (int d = 0; d < g.dim(); ++d)
        dims_left.push_back(d);

    for (const auto& lv : ordering) {
        auto it = std::find(dims_left.begin(), dims_left.end(), lv.dim);
        std::size_t pos = static_cast<std::size_t>(it - dims_left.begin());
        double w = lv.dim == time_dim ? dt : g.dx();
        data = reduce(data, shape, pos, lv.p, w);
        dims_left.erase(dims_left.begin() + static_cast<std::ptrdiff_t>(pos));
    }
    return data.front();
}

}  // namespace mpde
