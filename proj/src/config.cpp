#include "mpde/config.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace mpde {

ConfigError::ConfigError(std::vector<ConfigIssue> issues)
    : std::runtime_error(format(issues)), issues_(std::move(issues)) {}

std::string ConfigError::format(const std::vector<ConfigIssue>& issues) {
    std::ostringstream os;
    os << "configuration error (" << issues.size() << " problem"
       << (issues.size() == 1 ? "" : "s") << "):";
    for (const auto& i : issues) {
        os << "\n  ";
        if (i.line > 0)
            os << "line " << i.line << ": ";
        os << i.message;
    }
    return os.str();
}

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos)
        return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok)
        out.push_back(tok);
    return out;
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt_cplx(const cplx& c) {
    return fmt_double(c.real()) + ":" + fmt_double(c.imag());
}

std::string join(const std::vector<std::string>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += " ";
        out += v[i];
    }
    return out;
}

/// Accumulates parse state: the target config plus the issue list.
struct Parser {
    RunConfig& cfg;
    std::vector<ConfigIssue> issues;
    int line = 0;

    void fail(const std::string& msg) { issues.push_back({line, msg}); }

    bool to_double(const std::string& v, double& out) {
        char* end = nullptr;
        out = std::strtod(v.c_str(), &end);
        if (end == v.c_str() || *end != '\0') {
            fail("expected a number, got '" + v + "'");
            return false;
        }
        return true;
    }

    bool to_int(const std::string& v, int& out) {
        char* end = nullptr;
        long r = std::strtol(v.c_str(), &end, 10);
        if (end == v.c_str() || *end != '\0') {
            fail("expected an integer, got '" + v + "'");
            return false;
        }
        out = static_cast<int>(r);
        return true;
    }

    bool to_u64(const std::string& v, std::uint64_t& out) {
        char* end = nullptr;
        out = std::strtoull(v.c_str(), &end, 10);
        if (end == v.c_str() || *end != '\0') {
            fail("expected an unsigned integer, got '" + v + "'");
            return false;
        }
        return true;
    }

    bool to_cplx(const std::string& v, cplx& out) {
        std::size_t colon = v.find(':');
        if (colon == std::string::npos) {
            fail("expected a complex value re:im, got '" + v + "'");
            return false;
        }
        Parser sub{cfg, {}, line};
        double re, im;
        bool ok = sub.to_double(v.substr(0, colon), re) && sub.to_double(v.substr(colon + 1), im);
        if (!ok) {
            fail("expected a complex value re:im, got '" + v + "'");
            return false;
        }
        out = cplx(re, im);
        return true;
    }

    bool to_cplx3(const std::string& v, std::array<cplx, 3>& out) {
        auto toks = split_ws(v);
        if (toks.size() > 3) {
            fail("expected at most 3 complex components, got " + std::to_string(toks.size()));
            return false;
        }
        std::array<cplx, 3> r{};
        for (std::size_t i = 0; i < toks.size(); ++i)
            if (!to_cplx(toks[i], r[i]))
                return false;
        out = r;
        return true;
    }

    void apply(const std::string& section, const std::string& key, const std::string& value);
};

void Parser::apply(const std::string& section, const std::string& key, const std::string& value) {
    const std::string full = section + "." + key;
    double d;
    int i;

    if (full == "grid.dim") {
        if (to_int(value, i)) {
            if (i < 1 || i > 3)
                fail("grid.dim must be 1, 2, or 3");
            else
                cfg.grid_dim = i;
        }
    } else if (full == "grid.points") {
        if (to_int(value, i)) {
            if (i < 8 || i % 2 != 0)
                fail("grid.points must be even and >= 8");
            else
                cfg.grid_points = i;
        }
    } else if (full == "grid.half_width") {
        if (to_double(value, d)) {
            if (!(d > 0.0))
                fail("grid.half_width must be positive");
            else
                cfg.grid_half_width = d;
        }
    } else if (full == "model.kind") {
        if (value == "dcgl_cubic")
            cfg.model.kind = ModelKind::dcgl_cubic;
        else if (value == "dnls_cubic")
            cfg.model.kind = ModelKind::dnls_cubic;
        else if (value == "cgl_power")
            cfg.model.kind = ModelKind::cgl_power;
        else if (value == "quadratic")
            cfg.model.kind = ModelKind::quadratic;
        else
            fail("model.kind must be one of dcgl_cubic, dnls_cubic, cgl_power, quadratic");
    } else if (full == "model.nu") {
        if (to_double(value, d)) {
            if (d < 0.0 || d > 1.0)
                fail("model.nu must be in [0, 1]");
            else
                cfg.model.nu = d;
        }
    } else if (full == "model.lambda1") {
        to_cplx3(value, cfg.model.lambda1);
    } else if (full == "model.lambda2") {
        to_cplx3(value, cfg.model.lambda2);
    } else if (full == "model.lambda") {
        to_cplx3(value, cfg.model.lambda);
    } else if (full == "model.alpha") {
        to_cplx(value, cfg.model.alpha);
    } else if (full == "model.delta") {
        if (to_int(value, i)) {
            if (i < 1)
                fail("model.delta must be >= 1");
            else
                cfg.model.delta = i;
        }
    } else if (full == "solver.dt") {
        if (to_double(value, d)) {
            if (!(d > 0.0))
                fail("solver.dt must be positive");
            else
                cfg.solver.dt = d;
        }
    } else if (full == "solver.horizon") {
        if (to_double(value, d)) {
            if (!(d > 0.0))
                fail("solver.horizon must be positive");
            else
                cfg.solver.horizon = d;
        }
    } else if (full == "solver.scheme") {
        if (value == "strang")
            cfg.solver.scheme = Scheme::strang_etd;
        else if (value == "picard")
            cfg.solver.scheme = Scheme::picard;
        else
            fail("solver.scheme must be strang or picard");
    } else if (full == "solver.picard_max_iters") {
        if (to_int(value, i)) {
            if (i < 1)
                fail("solver.picard_max_iters must be >= 1");
            else
                cfg.solver.picard_max_iters = i;
        }
    } else if (full == "solver.picard_tol") {
        if (to_double(value, d)) {
            if (!(d > 0.0))
                fail("solver.picard_tol must be positive");
            else
                cfg.solver.picard_tol = d;
        }
    } else if (full == "solver.blowup_threshold") {
        if (to_double(value, d)) {
            if (d < 0.0)
                fail("solver.blowup_threshold must be >= 0");
            else
                cfg.solver.blowup_threshold = d;
        }
    } else if (full == "solver.snapshot_stride") {
        if (to_int(value, i)) {
            if (i < 1)
                fail("solver.snapshot_stride must be >= 1");
            else
                cfg.solver.snapshot_stride = i;
        }
    } else if (full == "initial.profile") {
        if (value == "gaussian")
            cfg.initial.profile = InitialProfile::gaussian;
        else if (value == "random_band")
            cfg.initial.profile = InitialProfile::random_band;
        else
            fail("initial.profile must be gaussian or random_band");
    } else if (full == "initial.amplitude") {
        if (to_double(value, d)) {
            if (!(d > 0.0))
                fail("initial.amplitude must be positive");
            else
                cfg.initial.amplitude = d;
        }
    } else if (full == "initial.width") {
        if (to_double(value, d)) {
            if (!(d > 0.0))
                fail("initial.width must be positive");
            else
                cfg.initial.width = d;
        }
    } else if (full == "initial.seed") {
        to_u64(value, cfg.initial.seed);
    } else if (full == "initial.band") {
        if (to_int(value, i)) {
            if (i < 0)
                fail("initial.band must be >= 0");
            else
                cfg.initial.band = i;
        }
    } else if (full == "sweep.nu_list") {
        auto toks = split_ws(value);
        std::vector<double> nus;
        bool ok = true;
        for (const auto& t : toks) {
            if (!to_double(t, d)) {
                ok = false;
                break;
            }
            if (!(d > 0.0) || d > 1.0) {
                fail("sweep.nu_list entries must be in (0, 1]");
                ok = false;
                break;
            }
            if (!nus.empty() && d >= nus.back()) {
                fail("sweep.nu_list must be strictly descending");
                ok = false;
                break;
            }
            nus.push_back(d);
        }
        if (ok && nus.size() < 2)
            fail("sweep.nu_list needs at least 2 entries");
        else if (ok)
            cfg.nu_list = nus;
    } else if (full == "sweep.norms") {
        auto toks = split_ws(value);
        bool ok = !toks.empty();
        if (!ok)
            fail("sweep.norms must list at least one of l2, m21, m11, l1");
        for (const auto& t : toks)
            if (t != "l2" && t != "m21" && t != "m11" && t != "l1") {
                fail("sweep.norms entry '" + t + "' is not one of l2, m21, m11, l1");
                ok = false;
            }
        if (ok)
            cfg.sweep_norms = toks;
    } else if (full == "sweep.workers") {
        if (to_int(value, i)) {
            if (i < 1)
                fail("sweep.workers must be >= 1");
            else
                cfg.workers = i;
        }
    } else if (full == "verify.probes") {
        auto toks = split_ws(value);
        bool ok = !toks.empty();
        if (!ok)
            fail("verify.probes must list at least one probe");
        for (const auto& t : toks)
            if (t != "partition" && t != "interpolation" && t != "smoothing" && t != "kernel") {
                fail("verify.probes entry '" + t +
                     "' is not one of partition, interpolation, smoothing, kernel");
                ok = false;
            }
        if (ok)
            cfg.verify.probes = toks;
    } else if (full == "verify.interp_samples") {
        if (to_int(value, i)) {
            if (i < 1)
                fail("verify.interp_samples must be >= 1");
            else
                cfg.verify.interp_samples = i;
        }
    } else if (full == "verify.interp_s") {
        if (to_double(value, d))
            cfg.verify.interp_s = d;
    } else if (full == "verify.interp_eps") {
        if (to_double(value, d)) {
            if (!(d > 0.0))
                fail("verify.interp_eps must be positive");
            else
                cfg.verify.interp_eps = d;
        }
    } else if (full == "norms.spaces") {
        auto toks = split_ws(value);
        bool ok = !toks.empty();
        if (!ok)
            fail("norms.spaces must list at least one space");
        for (const auto& t : toks)
            if (t != "l2" && t != "m21" && t != "m11" && t != "h") {
                fail("norms.spaces entry '" + t + "' is not one of l2, m21, m11, h");
                ok = false;
            }
        if (ok)
            cfg.norms.spaces = toks;
    } else if (full == "norms.s") {
        if (to_double(value, d))
            cfg.norms.s = d;
    } else if (full == "norms.samples") {
        if (to_int(value, i)) {
            if (i < 1)
                fail("norms.samples must be >= 1");
            else
                cfg.norms.samples = i;
        }
    } else {
        fail("unknown key '" + full + "'");
    }
}

}  // namespace

RunConfig parse_config(const std::string& text, const std::vector<std::string>& overrides) {
    RunConfig cfg;
    Parser p{cfg, {}, 0};
    static const std::vector<std::string> sections{"grid",    "model", "solver", "initial",
                                                   "sweep",   "verify", "norms"};
    std::string section;
    std::istringstream is(text);
    std::string raw;
    int line = 0;
    while (std::getline(is, raw)) {
        ++line;
        p.line = line;
        std::size_t hash = raw.find('#');
        std::string s = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (s.empty())
            continue;
        if (s.front() == '[') {
            if (s.back() != ']') {
                p.fail("malformed section header '" + s + "'");
                continue;
            }
            std::string name = trim(s.substr(1, s.size() - 2));
            bool known = false;
            for (const auto& k : sections)
                known = known || k == name;
            if (!known) {
                p.fail("unknown section '[" + name + "]'");
                section = "";
            } else {
                section = name;
            }
            continue;
        }
        std::size_t eq = s.find('=');
        if (eq == std::string::npos) {
            p.fail("expected 'key = value', got '" + s + "'");
            continue;
        }
        std::string key = trim(s.substr(0, eq));
        std::string value = trim(s.substr(eq + 1));
        if (key.empty()) {
            p.fail("missing key before '='");
            continue;
        }
        if (section.empty()) {
            p.fail("key '" + key + "' outside any [section]");
            continue;
        }
        p.apply(section, key, value);
    }

    p.line = 0;
    for (const auto& ov : overrides) {
        std::size_t eq = ov.find('=');
        std::size_t dot = ov.find('.');
        if (eq == std::string::npos || dot == std::string::npos || dot > eq) {
            p.fail("override '" + ov + "' must look like section.key=value");
            continue;
        }
        std::string section_name = trim(ov.substr(0, dot));
        std::string key = trim(ov.substr(dot + 1, eq - dot - 1));
        std::string value = trim(ov.substr(eq + 1));
        p.apply(section_name, key, value);
    }

    if (p.issues.empty()) {
        try {
            cfg.model.validate(cfg.grid_dim);
        } catch (const std::exception& e) {
            p.fail(e.what());
        }
        try {
            cfg.solver.validate();
        } catch (const std::exception& e) {
            p.fail(e.what());
        }
        if (cfg.initial.band >= cfg.grid_points / 2)
            p.fail("initial.band must be below grid.points / 2");
    }
    if (!p.issues.empty())
        throw ConfigError(std::move(p.issues));
    return cfg;
}

std::string dump_config(const RunConfig& cfg) {
    std::ostringstream os;
    auto kind_name = [&]() {
        switch (cfg.model.kind) {
            case ModelKind::dcgl_cubic: return "dcgl_cubic";
            case ModelKind::dnls_cubic: return "dnls_cubic";
            case ModelKind::cgl_power: return "cgl_power";
            case ModelKind::quadratic: return "quadratic";
        }
        return "dcgl_cubic";
    };
    auto cplx3 = [&](const std::array<cplx, 3>& a) {
        return fmt_cplx(a[0]) + " " + fmt_cplx(a[1]) + " " + fmt_cplx(a[2]);
    };
    os << "[grid]\n";
    os << "dim = " << cfg.grid_dim << "\n";
    os << "points = " << cfg.grid_points << "\n";
    os << "half_width = " << fmt_double(cfg.grid_half_width) << "\n";
    os << "\n[model]\n";
    os << "kind = " << kind_name() << "\n";
    os << "nu = " << fmt_double(cfg.model.nu) << "\n";
    os << "lambda1 = " << cplx3(cfg.model.lambda1) << "\n";
    os << "lambda2 = " << cplx3(cfg.model.lambda2) << "\n";
    os << "lambda = " << cplx3(cfg.model.lambda) << "\n";
    os << "alpha = " << fmt_cplx(cfg.model.alpha) << "\n";
    os << "delta = " << cfg.model.delta << "\n";
    os << "\n[solver]\n";
    os << "dt = " << fmt_double(cfg.solver.dt) << "\n";
    os << "horizon = " << fmt_double(cfg.solver.horizon) << "\n";
    os << "scheme = " << (cfg.solver.scheme == Scheme::picard ? "picard" : "strang") << "\n";
    os << "picard_max_iters = " << cfg.solver.picard_max_iters << "\n";
    os << "picard_tol = " << fmt_double(cfg.solver.picard_tol) << "\n";
    os << "blowup_threshold = " << fmt_double(cfg.solver.blowup_threshold) << "\n";
    os << "snapshot_stride = " << cfg.solver.snapshot_stride << "\n";
    os << "\n[initial]\n";
    os << "profile = "
       << (cfg.initial.profile == InitialProfile::gaussian ? "gaussian" : "random_band") << "\n";
    os << "amplitude = " << fmt_double(cfg.initial.amplitude) << "\n";
    os << "width = " << fmt_double(cfg.initial.width) << "\n";
    os << "seed = " << cfg.initial.seed << "\n";
    os << "band = " << cfg.initial.band << "\n";
    os << "\n[sweep]\n";
    os << "nu_list =";
    for (double nu : cfg.nu_list)
        os << " " << fmt_double(nu);
    os << "\n";
    os << "norms = " << join(cfg.sweep_norms) << "\n";
    os << "workers = " << cfg.workers << "\n";
    os << "\n[verify]\n";
    os << "probes = " << join(cfg.verify.probes) << "\n";
    os << "interp_samples = " << cfg.verify.interp_samples << "\n";
    os << "interp_s = " << fmt_double(cfg.verify.interp_s) << "\n";
    os << "interp_eps = " << fmt_double(cfg.verify.interp_eps) << "\n";
    os << "\n[norms]\n";
    os << "spaces = " << join(cfg.norms.spaces) << "\n";
    os << "s = " << fmt_double(cfg.norms.s) << "\n";
    os << "samples = " << cfg.norms.samples << "\n";
    return os.str();
}

SweepSpec RunConfig::sweep_spec() const {
    SweepSpec spec;
    spec.model = model;
    spec.nu_list = nu_list;
    spec.initial = initial;
    spec.solver = solver;
    spec.norm_l2 = spec.norm_m21 = spec.norm_m11 = spec.norm_l1 = false;
    for (const auto& n : sweep_norms) {
        if (n == "l2")
            spec.norm_l2 = true;
        else if (n == "m21")
            spec.norm_m21 = true;
        else if (n == "m11")
            spec.norm_m11 = true;
        else if (n == "l1")
            spec.norm_l1 = true;
    }
    spec.workers = workers;
    return spec;
}

}  // namespace mpde
