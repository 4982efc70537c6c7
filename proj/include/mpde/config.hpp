#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "mpde/experiment.hpp"
#include "mpde/verifier.hpp"

namespace mpde {

/// Line-oriented configuration:
///   # comment
///   [section]
///   key = value
/// Complex values are written re:im, vectors and lists space-separated.
/// Unknown sections or keys are rejected; all problems are reported together
/// with their line numbers.

struct ConfigIssue {
    int line;  // 0 for issues raised by overrides
    std::string message;
};

class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(std::vector<ConfigIssue> issues);
    const std::vector<ConfigIssue>& issues() const { return issues_; }

  private:
    static std::string format(const std::vector<ConfigIssue>& issues);
    std::vector<ConfigIssue> issues_;
};

struct VerifySection {
    std::vector<std::string> probes{"partition", "interpolation", "smoothing", "kernel"};
    int interp_samples = 100;
    double interp_s = 1.0;
    double interp_eps = 0.5;
};

struct NormsSection {
    std::vector<std::string> spaces{"l2", "m21", "m11", "h"};
    double s = 1.0;
    int samples = 5;
};

struct RunConfig {
    int grid_dim = 1;
    int grid_points = 256;
    double grid_half_width = 4.0 * M_PI;

    ModelParams model;
    SolverConfig solver;
    InitialData initial;

    std::vector<double> nu_list{1e-1, 3.1623e-2, 1e-2, 3.1623e-3, 1e-3};
    std::vector<std::string> sweep_norms{"l2"};
    int workers = 1;

    VerifySection verify;
    NormsSection norms;

    Grid grid() const { return Grid(grid_dim, grid_points, grid_half_width); }
    SweepSpec sweep_spec() const;
};

/// Parse `text` and apply `overrides` ("section.key=value") on top; every
/// constraint violation, unknown key, and type mismatch is aggregated into a
/// single ConfigError.
RunConfig parse_config(const std::string& text, const std::vector<std::string>& overrides = {});

/// Canonical dump listing every key explicitly; parsing the dump and dumping
/// again reproduces it byte for byte.
std::string dump_config(const RunConfig& cfg);

}  // namespace mpde
