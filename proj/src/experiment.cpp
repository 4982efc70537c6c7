#include "mpde/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "mpde/norms.hpp"
#include "mpde/random_field.hpp"

namespace mpde {

Field InitialData::build(const Grid& grid) const {
    if (profile == InitialProfile::gaussian) {
        double a = amplitude;
        double w2 = width * width;
        return sample(grid, [a, w2](const std::array<double, 3>& x) {
            double r2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
            return cplx(a * std::exp(-0.5 * r2 / w2), 0.0);
        });
    }
    return random_band_limited(grid, seed, band, amplitude);
}

void SweepSpec::validate() const {
    if (nu_list.size() < 2)
        throw std::invalid_argument("SweepSpec: need at least 2 nu values");
    for (std::size_t i = 0; i < nu_list.size(); ++i) {
        if (!(nu_list[i] > 0.0) || nu_list[i] > 1.0)
            throw std::invalid_argument("SweepSpec: nu values must be in (0, 1]");
        if (i > 0 && nu_list[i] >= nu_list[i - 1])
            throw std::invalid_argument("SweepSpec: nu list must be strictly descending");
    }
    if (workers < 1)
        throw std::invalid_argument("SweepSpec: workers must be >= 1");
}

namespace {

struct ErrAccum {
    double l2 = 0.0, m21 = 0.0, m11 = 0.0, l1 = 0.0;
};

ErrAccum sup_errors(const Trajectory& a, const Trajectory& b, const SweepSpec& spec,
                    const WindowFamily* w) {
    ErrAccum e;
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t j = 0; j < n; ++j) {
        Field d = to_fourier(a.snapshots[j]) - to_fourier(b.snapshots[j]);
        if (spec.norm_l2)
            e.l2 = std::max(e.l2, lp_norm(d, 2.0));
        if (spec.norm_l1)
            e.l1 = std::max(e.l1, lp_norm(d, 1.0));
        if (spec.norm_m21)
            e.m21 = std::max(e.m21, modulation_norm(d, {SpaceKind::m21, 0.0}, *w));
        if (spec.norm_m11)
            e.m11 = std::max(e.m11, modulation_norm(d, {SpaceKind::m11, 0.0}, *w));
    }
    return e;
}

}  // namespace

RateFit fit_rate(const std::vector<std::pair<double, double>>& rows) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& [nu, err] : rows)
        if (nu > 0.0 && err > 0.0)
            pts.emplace_back(std::log(nu), std::log(err));
    if (pts.size() < 4)
        throw std::invalid_argument("fit_rate: need >= 4 positive (nu, err) pairs");
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const auto& [x, y] : pts) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = static_cast<double>(pts.size());
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const double intercept = (sy - slope * sx) / n;
    double ss = 0.0;
    for (const auto& [x, y] : pts) {
        double r = y - (slope * x + intercept);
        ss += r * r;
    }
    return {slope, intercept, std::sqrt(ss / n)};
}

SweepResult run_sweep(const SweepSpec& spec, const Grid& grid) {
    spec.validate();
    std::optional<WindowFamily> w;
    if (spec.norm_m21 || spec.norm_m11)
        w.emplace(grid);

    const Field u0 = spec.initial.build(grid);
    ModelParams ref_model = spec.model;
    ref_model.nu = 0.0;
    if (ref_model.kind == ModelKind::dcgl_cubic)
        ref_model.kind = ModelKind::dnls_cubic;
    const Trajectory ref = solve(u0, ref_model, spec.solver);

    SweepResult result;
    if (ref.status != RunStatus::completed) {
        result.aborted = true;
        result.abort_reason = "reference (nu = 0) run did not complete";
        return result;
    }

    // Per-nu runs are independent; results are merged in list order.
    std::vector<Trajectory> runs(spec.nu_list.size(), Trajectory{});
    const int workers =
        std::min<int>(spec.workers, static_cast<int>(spec.nu_list.size()));
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= spec.nu_list.size())
                return;
            ModelParams m = spec.model;
            m.nu = spec.nu_list[i];
            runs[i] = solve(u0, m, spec.solver);
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t)
            pool.emplace_back(work);
        for (auto& t : pool)
            t.join();
    }

    for (std::size_t i = 0; i < spec.nu_list.size(); ++i) {
        if (runs[i].status != RunStatus::completed) {
            result.aborted = true;
            result.abort_reason = "run nu = " + std::to_string(spec.nu_list[i]) +
                                  " terminated early";
            break;
        }
        ErrAccum e = sup_errors(runs[i], ref, spec, w ? &*w : nullptr);
        result.rows.push_back({spec.nu_list[i], e.l2, e.m21, e.m11, e.l1});
    }

    auto try_fit = [&](auto get) -> std::optional<RateFit> {
        std::vector<std::pair<double, double>> pts;
        for (const auto& r : result.rows)
            pts.emplace_back(r.nu, get(r));
        try {
            return fit_rate(pts);
        } catch (const std::invalid_argument&) {
            return std::nullopt;
        }
    };
    if (spec.norm_l2)
        result.fit_l2 = try_fit([](const SweepRow& r) { return r.err_l2; });
    if (spec.norm_m21)
        result.fit_m21 = try_fit([](const SweepRow& r) { return r.err_m21; });
    if (spec.norm_m11)
        result.fit_m11 = try_fit([](const SweepRow& r) { return r.err_m11; });
    if (spec.norm_l1)
        result.fit_l1 = try_fit([](const SweepRow& r) { return r.err_l1; });
    return result;
}

WorkingNormReport track_working_norms(const Trajectory& traj, double s, const WindowFamily& w) {
    if (traj.size() == 0)
        throw std::invalid_argument("track_working_norms: empty trajectory");
    const Grid& g = traj.snapshots.front().grid();
    const int dim = g.dim();
    WorkingNormReport rep{};
    rep.times = traj.times;

    const std::size_t nk = w.active_set().size();
    const std::size_t nt = traj.size();

    // Per (t, k): the L_x^2, L_x^6 and per-axis mixed norms of box_k u.
    std::vector<double> l2(nt * nk), l6(nt * nk);
    std::vector<std::vector<double>> mix1(static_cast<std::size_t>(dim)),
        mix2(static_cast<std::size_t>(dim));
    for (int d = 0; d < dim; ++d) {
        mix1[static_cast<std::size_t>(d)].assign(nt * nk, 0.0);
        mix2[static_cast<std::size_t>(d)].assign(nt * nk, 0.0);
    }

    for (std::size_t j = 0; j < nt; ++j) {
        Field fh = to_fourier(traj.snapshots[j]);
        for (std::size_t ki = 0; ki < nk; ++ki) {
            const auto& k = w.active_set()[ki];
            Field piece = box(fh, k, w);
            // Skip empty pieces cheaply.
            double mass = 0.0;
            for (const auto& c : piece.values())
                mass += std::norm(c);
            if (mass == 0.0)
                continue;
            l2[j * nk + ki] = std::sqrt(mass / g.volume());
            Field ph = to_physical(piece);
            l6[j * nk + ki] = lp_norm(ph, 6.0);
            // Single-snapshot nested norms via a one-sample trajectory.
            Trajectory one;
            one.times = {0.0};
            one.snapshots = {ph};
            for (int d = 0; d < dim; ++d) {
                std::vector<NormLevel> lv1{{time_dim, p_inf}};
                std::vector<NormLevel> lv2{{time_dim, p_inf}};
                for (int o = 0; o < dim; ++o)
                    if (o != d) {
                        lv1.push_back({o, 2.0});
                        lv2.push_back({o, p_inf});
                    }
                lv1.push_back({d, p_inf});  // outermost L_{x_d}^inf
                lv2.push_back({d, 2.0});    // outermost L_{x_d}^2
                mix1[static_cast<std::size_t>(d)][j * nk + ki] = mixed_norm(one, lv1);
                mix2[static_cast<std::size_t>(d)][j * nk + ki] = mixed_norm(one, lv2);
            }
        }
    }

    auto bracket = [](double v) { return 1.0 + std::abs(v); };
    const double dt = nt > 1 ? traj.dt() : 1.0;

    rep.rho1_series.assign(nt, 0.0);
    rep.rho2_series.assign(nt, 0.0);
    rep.rho3_series.assign(nt, 0.0);
    rep.rho1_window = rep.rho2_window = rep.rho3_window = 0.0;

    for (std::size_t ki = 0; ki < nk; ++ki) {
        const auto& k = w.active_set()[ki];
        double k2 = 0.0;
        for (int d = 0; d < dim; ++d)
            k2 += static_cast<double>(k[d]) * k[d];
        const double wk3 = std::pow(1.0 + std::sqrt(k2), s - 1.5);

        double linf_l2 = 0.0, lt3_l6 = 0.0;
        for (std::size_t j = 0; j < nt; ++j) {
            linf_l2 = std::max(linf_l2, l2[j * nk + ki]);
            double wt = (j == 0 || j == nt - 1) ? 0.5 : 1.0;
            lt3_l6 += wt * dt * std::pow(l6[j * nk + ki], 3.0);
            rep.rho3_series[j] += wk3 * l2[j * nk + ki];
        }
        rep.rho3_window += wk3 * (linf_l2 + std::pow(lt3_l6, 1.0 / 3.0));

        for (int d = 0; d < dim; ++d) {
            const auto& m1 = mix1[static_cast<std::size_t>(d)];
            const auto& m2 = mix2[static_cast<std::size_t>(d)];
            double lt_inf = 0.0, lt2 = 0.0;
            for (std::size_t j = 0; j < nt; ++j) {
                lt_inf = std::max(lt_inf, m2[j * nk + ki]);
                double wt = (j == 0 || j == nt - 1) ? 0.5 : 1.0;
                lt2 += wt * dt * m1[j * nk + ki] * m1[j * nk + ki];
                rep.rho2_series[j] += m2[j * nk + ki];
            }
            rep.rho2_window += lt_inf;
            if (std::abs(k[d]) > 4) {
                const double wk1 = std::pow(bracket(k[d]), s - 0.5);
                rep.rho1_window += wk1 * std::sqrt(lt2);
                for (std::size_t j = 0; j < nt; ++j)
                    rep.rho1_series[j] += wk1 * m1[j * nk + ki];
            }
        }
    }

    auto growth = [](const std::vector<double>& series) {
        if (series.empty() || series.front() == 0.0)
            return 0.0;
        double m = 0.0;
        for (double v : series)
            m = std::max(m, v);
        return m / series.front();
    };
    rep.growth1 = growth(rep.rho1_series);
    rep.growth2 = growth(rep.rho2_series);
    rep.growth3 = growth(rep.rho3_series);
    return rep;
}

}  // namespace mpde
