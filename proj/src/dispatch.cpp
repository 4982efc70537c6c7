#include "mpde/dispatch.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "mpde/norms.hpp"
#include "mpde/random_field.hpp"
#include "mpde/snapshot.hpp"
#include "mpde/solver.hpp"
#include "mpde/verifier.hpp"

namespace mpde {

namespace {

namespace fs = std::filesystem;

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream os(path);
    if (!os)
        throw std::runtime_error("cannot write " + path.string());
    os << text;
}

std::string csv_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

int cmd_simulate(const RunConfig& cfg, const fs::path& out) {
    Grid grid = cfg.grid();
    Field u0 = cfg.initial.build(grid);
    Trajectory traj = cfg.solver.scheme == Scheme::picard
                          ? solve_picard(u0, cfg.model, cfg.solver)
                          : solve(u0, cfg.model, cfg.solver);
    WindowFamily w(grid);
    write_trajectory(out / "trajectory", traj, w);
    write_text(out / "resolved.cfg", dump_config(cfg));

    nlohmann::json meta;
    meta["status"] = traj.status == RunStatus::completed  ? "completed"
                     : traj.status == RunStatus::blowup   ? "blowup"
                                                          : "diverged_picard";
    meta["stamps"] = traj.size();
    meta["seed"] = cfg.initial.seed;
    write_text(out / "summary.json", meta.dump(2) + "\n");

    if (traj.status != RunStatus::completed) {
        std::cerr << "simulate: run ended with status " << meta["status"] << "\n";
        return exit_numerical_failure;
    }
    std::cout << "simulate: " << traj.size() << " stamps written\n";
    return exit_ok;
}

int cmd_sweep(const RunConfig& cfg, const fs::path& out) {
    Grid grid = cfg.grid();
    SweepSpec spec = cfg.sweep_spec();
    SweepResult result = run_sweep(spec, grid);

    std::ostringstream csv;
    csv << "nu,T,err_l2,err_m21,err_m11,err_l1\n";
    for (const auto& r : result.rows)
        csv << csv_double(r.nu) << "," << csv_double(cfg.solver.horizon) << ","
            << csv_double(r.err_l2) << "," << csv_double(r.err_m21) << ","
            << csv_double(r.err_m11) << "," << csv_double(r.err_l1) << "\n";
    write_text(out / "sweep.csv", csv.str());
    write_text(out / "resolved.cfg", dump_config(cfg));

    nlohmann::json summary;
    summary["aborted"] = result.aborted;
    summary["abort_reason"] = result.abort_reason;
    summary["seed"] = cfg.initial.seed;
    summary["rows"] = result.rows.size();
    auto put_fit = [&](const char* name, const std::optional<RateFit>& fit) {
        if (!fit)
            return;
        summary["fits"][name]["slope"] = fit->slope;
        summary["fits"][name]["intercept"] = fit->intercept;
        summary["fits"][name]["residual"] = fit->residual;
    };
    put_fit("l2", result.fit_l2);
    put_fit("m21", result.fit_m21);
    put_fit("m11", result.fit_m11);
    put_fit("l1", result.fit_l1);
    summary["config"] = dump_config(cfg);
    write_text(out / "summary.json", summary.dump(2) + "\n");

    if (result.aborted) {
        std::cerr << "sweep: aborted (" << result.abort_reason << "), partial CSV written\n";
        return exit_numerical_failure;
    }
    std::cout << "sweep: " << result.rows.size() << " rows";
    if (result.fit_l2)
        std::cout << ", L2 slope " << result.fit_l2->slope;
    std::cout << "\n";
    return exit_ok;
}

int cmd_verify(const RunConfig& cfg, const fs::path& out) {
    bool pass = true;
    std::ostringstream report;
    auto wants = [&](const char* probe) {
        for (const auto& p : cfg.verify.probes)
            if (p == probe)
                return true;
        return false;
    };

    Grid grid = cfg.grid();
    WindowFamily w(grid);

    if (wants("partition")) {
        double dev = w.partition_deviation();
        bool ok = dev <= 1e-12;
        pass = pass && ok;
        report << "partition: max |sum sigma_k - 1| = " << dev << (ok ? " PASS" : " FAIL")
               << "\n";
    }

    if (wants("interpolation")) {
        InterpolationConstants consts = interpolation_constants(w);
        std::ostringstream csv;
        csv << "sample,variant,lhs,rhs,slack,pass\n";
        int violations = 0;
        for (int variant = 0; variant < 2; ++variant) {
            InterpolationCase c;
            c.s = cfg.verify.interp_s;
            c.eps = cfg.verify.interp_eps;
            c.variant = variant == 0 ? InterpVariant::m21 : InterpVariant::m11;
            for (int i = 0; i < cfg.verify.interp_samples; ++i) {
                Field f = random_band_limited(grid, 1000 + static_cast<std::uint64_t>(i),
                                              std::min(grid.points() / 3, 12), 1.0);
                auto verdict = check_interpolation(to_fourier(f), c, w, consts);
                if (!verdict.degenerate && !verdict.pass)
                    ++violations;
                csv << i << "," << (variant == 0 ? "m21" : "m11") << ","
                    << csv_double(verdict.lhs) << "," << csv_double(verdict.rhs) << ","
                    << csv_double(verdict.slack) << "," << (verdict.pass ? 1 : 0) << "\n";
            }
        }
        write_text(out / "interpolation.csv", csv.str());
        bool ok = violations == 0;
        pass = pass && ok;
        report << "interpolation: " << violations << " violations over "
               << 2 * cfg.verify.interp_samples << " samples" << (ok ? " PASS" : " FAIL")
               << "\n";
    }

    if (wants("smoothing")) {
        // Dedicated 1D grid wide enough in frequency for the whole k list.
        Grid g1(1, 512, 4.0 * M_PI);
        WindowFamily w1(g1);
        SmoothingSpec sspec;
        SmoothingReport rep = smoothing_probe(sspec, g1, w1);
        SmoothingSpec fine = sspec;
        fine.dt /= 2.0;
        SmoothingReport rep_fine = smoothing_probe(fine, g1, w1);
        bool ok = true;
        for (std::size_t i = 0; i < rep.per_k_max_normalized.size(); ++i)
            if (rep_fine.per_k_max_normalized[i] > 1.2 * rep.per_k_max_normalized[i])
                ok = false;
        std::ostringstream csv;
        csv << "k,nu,ratio,normalized\n";
        for (const auto& r : rep.rows)
            csv << r.k << "," << csv_double(r.nu) << "," << csv_double(r.ratio) << ","
                << csv_double(r.normalized) << "\n";
        write_text(out / "smoothing.csv", csv.str());
        // Halving check on the nu-uniform envelope: consecutive k double, and
        // max_nu R(2k, nu) / max_nu R(k, nu) should sit near 2^{-1/2}.
        auto max_ratio = [&](int k) {
            double m = 0.0;
            for (const auto& r : rep.rows)
                if (r.k == k)
                    m = std::max(m, r.ratio);
            return m;
        };
        for (std::size_t i = 0; i + 1 < sspec.k_list.size(); ++i)
            if (sspec.k_list[i + 1] == 2 * sspec.k_list[i]) {
                double ratio = max_ratio(sspec.k_list[i + 1]) / max_ratio(sspec.k_list[i]);
                if (ratio < 0.6 || ratio > 0.85)
                    ok = false;
            }
        pass = pass && ok;
        report << "smoothing: max normalized ratio " << rep.max_normalized
               << (ok ? " PASS" : " FAIL") << "\n";
    }

    if (wants("kernel")) {
        KernelProbeSpec kspec;
        KernelProbeReport rep = kernel_probe(kspec);
        bool ok = rep.stable && std::isfinite(rep.max_abs);
        pass = pass && ok;
        report << "kernel: max |K| = " << rep.max_abs << ", nodes x2 " << rep.max_abs_nodes_x2
               << ", cutoff x2 " << rep.max_abs_cutoff_x2 << (ok ? " PASS" : " FAIL") << "\n";
    }

    write_text(out / "verify_report.txt", report.str());
    write_text(out / "resolved.cfg", dump_config(cfg));
    std::cout << report.str();
    return pass ? exit_ok : exit_scientific_failure;
}

int cmd_norms(const RunConfig& cfg, const fs::path& out) {
    Grid grid = cfg.grid();
    WindowFamily w(grid);
    std::ostringstream csv;
    csv << "field_id,space,s,value\n";
    for (int i = 0; i < cfg.norms.samples; ++i) {
        Field f = random_band_limited(grid, cfg.initial.seed + static_cast<std::uint64_t>(i),
                                      std::min(grid.points() / 3, 12), 1.0);
        Field fh = to_fourier(f);
        for (const auto& space : cfg.norms.spaces) {
            double value;
            double s = cfg.norms.s;
            if (space == "l2") {
                value = lp_norm(fh, 2.0);
                s = 0.0;
            } else if (space == "m21") {
                value = modulation_norm(fh, {SpaceKind::m21, cfg.norms.s}, w);
            } else if (space == "m11") {
                value = modulation_norm(fh, {SpaceKind::m11, cfg.norms.s}, w);
            } else {
                value = sobolev_norm(fh, {SpaceKind::sobolev, cfg.norms.s});
            }
            csv << i << "," << space << "," << csv_double(s) << "," << csv_double(value)
                << "\n";
        }
    }
    write_text(out / "norms.csv", csv.str());
    write_text(out / "resolved.cfg", dump_config(cfg));
    std::cout << "norms: " << cfg.norms.samples << " fields x " << cfg.norms.spaces.size()
              << " spaces written\n";
    return exit_ok;
}

}  // namespace

int dispatch(const std::string& command, const RunConfig& cfg, const fs::path& out_dir) {
    fs::path parent = out_dir.has_parent_path() ? out_dir.parent_path() : fs::path(".");
    if (!fs::exists(parent)) {
        std::cerr << "output directory parent does not exist: " << parent.string() << "\n";
        return exit_config_error;
    }
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) {
        std::cerr << "cannot create output directory: " << out_dir.string() << "\n";
        return exit_config_error;
    }

    try {
        if (command == "simulate")
            return cmd_simulate(cfg, out_dir);
        if (command == "sweep")
            return cmd_sweep(cfg, out_dir);
        if (command == "verify")
            return cmd_verify(cfg, out_dir);
        if (command == "norms")
            return cmd_norms(cfg, out_dir);
    } catch (const std::invalid_argument& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return exit_config_error;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return exit_numerical_failure;
    }
    std::cerr << "unknown command: " << command << "\n";
    return exit_config_error;
}

}  // namespace mpde
