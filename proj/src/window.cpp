#include "mpde/window.hpp"

#include <algorithm>
#include <cmath>

#include "mpde/norms.hpp"

namespace mpde {

double WindowFamily::eta_raw(double t) {
    if (std::abs(t) >= 1.0)
        return 0.0;
    return std::exp(-1.0 / (1.0 - t * t));
}

namespace {

double eta_normalized(int j, double xi) {
    double num = WindowFamily::eta_raw(xi - j);
    if (num == 0.0)
        return 0.0;
    double den = 0.0;
    int base = static_cast<int>(std::floor(xi));
    for (int l = base - 1; l <= base + 2; ++l)
        den += WindowFamily::eta_raw(xi - l);
    return num / den;
}

}  // namespace

WindowFamily::WindowFamily(const Grid& grid) : grid_(grid) {
    // Unit cubes Q_k must hold >= 4 lattice points per axis.
    if (grid.dxi() > 0.25 + 1e-15)
        throw std::invalid_argument(
            "WindowFamily: frequency spacing pi/L must be <= 1/4 (torus too small)");
    kmax_ = static_cast<int>(std::ceil(grid.xi_max())) + 1;

    axis_.resize(static_cast<std::size_t>(grid.points()));
    for (int i = 0; i < grid.points(); ++i) {
        double xi = grid.xi(i);
        int base = static_cast<int>(std::floor(xi));
        for (int j = base - 1; j <= base + 2; ++j) {
            double v = eta_normalized(j, xi);
            if (v != 0.0)
                axis_[static_cast<std::size_t>(i)].emplace_back(j, v);
        }
    }

    std::array<int, 3> k{0, 0, 0};
    if (grid.dim() == 1) {
        for (k[0] = -kmax_; k[0] <= kmax_; ++k[0])
            active_.push_back(k);
    } else if (grid.dim() == 2) {
        for (k[0] = -kmax_; k[0] <= kmax_; ++k[0])
            for (k[1] = -kmax_; k[1] <= kmax_; ++k[1])
                active_.push_back(k);
    } else {
        for (k[0] = -kmax_; k[0] <= kmax_; ++k[0])
            for (k[1] = -kmax_; k[1] <= kmax_; ++k[1])
                for (k[2] = -kmax_; k[2] <= kmax_; ++k[2])
                    active_.push_back(k);
    }
}

bool WindowFamily::in_active_set(const std::array<int, 3>& k) const {
    for (int d = 0; d < grid_.dim(); ++d)
        if (std::abs(k[d]) > kmax_)
            return false;
    return true;
}

double WindowFamily::sigma(const std::array<int, 3>& k, const std::array<double, 3>& xi) const {
    double v = 1.0;
    for (int d = 0; d < grid_.dim(); ++d) {
        v *= eta_normalized(k[d], xi[d]);
        if (v == 0.0)
            return 0.0;
    }
    return v;
}

double WindowFamily::sigma_at(const std::array<int, 3>& k, std::size_t flat) const {
    auto idx = grid_.unflatten(flat);
    double v = 1.0;
    for (int d = 0; d < grid_.dim(); ++d) {
        const auto& entries = axis_[static_cast<std::size_t>(idx[d])];
        double e = 0.0;
        for (const auto& [j, val] : entries)
            if (j == k[d]) {
                e = val;
                break;
            }
        v *= e;
        if (v == 0.0)
            return 0.0;
    }
    return v;
}

double WindowFamily::partition_deviation() const {
    double worst = 0.0;
    // Tensor structure: it suffices to check each axis sample.
    for (const auto& entries : axis_) {
        double s = 0.0;
        for (const auto& [j, v] : entries)
            s += v;
        worst = std::max(worst, std::abs(s - 1.0));
    }
    return worst;
}

int WindowFamily::max_overlap() const {
    std::size_t per_axis = 0;
    for (const auto& entries : axis_)
        per_axis = std::max(per_axis, entries.size());
    int r = 1;
    for (int d = 0; d < grid_.dim(); ++d)
        r *= static_cast<int>(per_axis);
    return r;
}

double WindowFamily::min_on_cube() const {
    // min over Q_0 of eta_0, raised to the dimension (windows are translates).
    double c = 1.0;
    const int samples = 101;
    for (int i = 0; i < samples; ++i) {
        double xi = -0.5 + i / static_cast<double>(samples - 1);
        c = std::min(c, eta_normalized(0, xi));
    }
    return std::pow(c, grid_.dim());
}

Field box(const Field& f, const std::array<int, 3>& k, const WindowFamily& w) {
    const Grid& g = f.grid();
    Field fh = to_fourier(f);
    std::vector<cplx> v = fh.values();
    if (!w.in_active_set(k)) {
        std::fill(v.begin(), v.end(), cplx(0.0, 0.0));
    } else {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] == cplx(0.0, 0.0))
                continue;
            v[i] *= w.sigma_at(k, i);
        }
    }
    Field out(g, Rep::fourier, std::move(v));
    return f.rep() == Rep::physical ? to_physical(out) : out;
}

namespace {

double bracket(const std::array<int, 3>& k, int dim) {
    double s = 0.0;
    for (int d = 0; d < dim; ++d)
        s += static_cast<double>(k[d]) * k[d];
    return 1.0 + std::sqrt(s);
}

// Nearest-integer cube assignment with the half-open rule -1/2 <= xi - k < 1/2.
int cube_of(double xi) { return static_cast<int>(std::floor(xi + 0.5)); }

}  // namespace

double modulation_norm(const Field& f, const NormSpec& spec, const WindowFamily& w) {
    if (spec.kind != SpaceKind::m21 && spec.kind != SpaceKind::m11)
        throw std::invalid_argument("modulation_norm: spec is not a modulation space");
    const Grid& g = f.grid();
    const double lp = spec.kind == SpaceKind::m21 ? 2.0 : 1.0;
    Field fh = to_fourier(f);

    double total = 0.0;
    if (spec.variant == ModVariant::sharp_cube && spec.kind == SpaceKind::m21) {
        // Fourier-side: group lattice points by cube, L^2 per cube.
        std::vector<std::pair<std::array<int, 3>, double>> mass;
        for (std::size_t i = 0; i < fh.values().size(); ++i) {
            double m2 = std::norm(fh[i]);
            if (m2 == 0.0)
                continue;
            auto idx = g.unflatten(i);
            std::array<int, 3> k{0, 0, 0};
            for (int d = 0; d < g.dim(); ++d)
                k[d] = cube_of(g.xi(idx[d]));
            mass.emplace_back(k, m2);
        }
        std::sort(mass.begin(), mass.end());
        for (std::size_t i = 0; i < mass.size();) {
            std::size_t j = i;
            double m2 = 0.0;
            while (j < mass.size() && mass[j].first == mass[i].first)
                m2 += mass[j++].second;
            total += std::pow(bracket(mass[i].first, g.dim()), spec.s) *
                     std::sqrt(m2 / g.volume());
            i = j;
        }
        return total;
    }

    for (const auto& k : w.active_set()) {
        double piece;
        if (spec.variant == ModVariant::sharp_cube) {
            // Sharp indicator of Q_k on the Fourier side, then L^1 physically.
            std::vector<cplx> v = fh.values();
            bool any = false;
            for (std::size_t i = 0; i < v.size(); ++i) {
                auto idx = g.unflatten(i);
                bool inside = true;
                for (int d = 0; d < g.dim(); ++d)
                    if (cube_of(g.xi(idx[d])) != k[d])
                        inside = false;
                if (!inside)
                    v[i] = 0.0;
                else if (v[i] != cplx(0.0, 0.0))
                    any = true;
            }
            if (!any)
                continue;
            piece = lp_norm(Field(g, Rep::fourier, std::move(v)), lp);
        } else if (spec.kind == SpaceKind::m21) {
            // Plancherel: no inverse transform needed.
            double m2 = 0.0;
            for (std::size_t i = 0; i < fh.values().size(); ++i) {
                if (fh[i] == cplx(0.0, 0.0))
                    continue;
                double sg = w.sigma_at(k, i);
                if (sg != 0.0)
                    m2 += sg * sg * std::norm(fh[i]);
            }
            if (m2 == 0.0)
                continue;
            piece = std::sqrt(m2 / g.volume());
        } else {
            bool any = false;
            std::vector<cplx> v = fh.values();
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (v[i] == cplx(0.0, 0.0))
                    continue;
                double sg = w.sigma_at(k, i);
                v[i] *= sg;
                if (sg != 0.0)
                    any = true;
            }
            if (!any)
                continue;
            piece = lp_norm(Field(g, Rep::fourier, std::move(v)), lp);
        }
        total += std::pow(bracket(k, g.dim()), spec.s) * piece;
    }
    return total;
}

double sobolev_norm(const Field& f, const NormSpec& spec) {
    if (spec.kind != SpaceKind::sobolev && spec.kind != SpaceKind::sobolev_hom)
        throw std::invalid_argument("sobolev_norm: spec is not a Sobolev space");
    const Grid& g = f.grid();
    Field fh = to_fourier(f);
    double s2 = 0.0;
    for (std::size_t i = 0; i < fh.values().size(); ++i) {
        double m2 = std::norm(fh[i]);
        if (m2 == 0.0)
            continue;
        auto idx = g.unflatten(i);
        double xi2 = 0.0;
        for (int d = 0; d < g.dim(); ++d) {
            double xi = g.xi(idx[d]);
            xi2 += xi * xi;
        }
        if (spec.kind == SpaceKind::sobolev) {
            s2 += std::pow(1.0 + xi2, spec.s) * m2;
        } else {
            if (xi2 == 0.0) {
                if (spec.s <= -0.5 * g.dim())
                    throw std::domain_error(
                        "sobolev_norm: homogeneous norm degenerate on nonzero DC mode");
                if (spec.s > 0.0)
                    continue;  // |xi|^s -> 0
                if (spec.s < 0.0)
                    throw std::domain_error("sobolev_norm: |xi|^s singular at DC");
                s2 += m2;
                continue;
            }
            s2 += std::pow(xi2, spec.s) * m2;
        }
    }
    return std::sqrt(s2 / g.volume());
}

EmbeddingReport embedding_monitor(const std::vector<Field>& samples, double s, double eps,
                                  const WindowFamily& w) {
    if (!(eps > 0.0))
        throw std::invalid_argument("embedding_monitor: eps must be positive");
    EmbeddingReport rep{};
    rep.right_ratio_max = 0.0;
    rep.left_ratio_max = 0.0;
    rep.left_ratio_min = p_inf;
    const double n_half = 0.5 * w.grid().dim();
    for (const auto& f : samples) {
        EmbeddingSample e{};
        e.h_upper = sobolev_norm(f, {SpaceKind::sobolev, s + eps + n_half});
        e.m21 = modulation_norm(f, {SpaceKind::m21, s, 2.0, ModVariant::sharp_cube}, w);
        e.h_s = sobolev_norm(f, {SpaceKind::sobolev, s});
        e.degenerate = e.m21 == 0.0 || e.h_upper == 0.0;
        if (!e.degenerate) {
            double rr = e.h_s / e.m21;
            rep.right_ratio_max = std::max(rep.right_ratio_max, rr);
            if (rr > 1.0 + 1e-12)
                ++rep.right_violations;
            double lr = e.m21 / e.h_upper;
            rep.left_ratio_max = std::max(rep.left_ratio_max, lr);
            rep.left_ratio_min = std::min(rep.left_ratio_min, lr);
        }
        rep.samples.push_back(e);
    }
    return rep;
}

}  // namespace mpde
