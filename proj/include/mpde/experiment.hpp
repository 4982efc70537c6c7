#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mpde/model.hpp"
#include "mpde/solver.hpp"
#include "mpde/window.hpp"

namespace mpde {

enum class InitialProfile { gaussian, random_band };

struct InitialData {
    InitialProfile profile = InitialProfile::gaussian;
    double amplitude = 0.05;  // Gaussian prefactor, or target L2 norm for random
    double width = 1.0;       // Gaussian length scale
    std::uint64_t seed = 1;
    int band = 8;  // random profile band limit

    Field build(const Grid& grid) const;
};

struct SweepSpec {
    ModelParams model;               // nu field is overridden per run
    std::vector<double> nu_list;     // descending, in (0, 1]
    InitialData initial;
    SolverConfig solver;
    bool norm_l2 = true;
    bool norm_m21 = false;
    bool norm_m11 = false;
    bool norm_l1 = false;
    int workers = 1;

    void validate() const;
};

struct SweepRow {
    double nu;
    double err_l2;
    double err_m21;
    double err_m11;
    double err_l1;
};

struct RateFit {
    double slope;
    double intercept;
    double residual;  // RMS of log-log residuals
};

struct SweepResult {
    std::vector<SweepRow> rows;
    std::optional<RateFit> fit_l2, fit_m21, fit_m11, fit_l1;
    bool aborted = false;          // a run blew up; rows are partial
    std::string abort_reason;
};

/// Solve the reference nu = 0 problem once, then each u_nu with bit-identical
/// initial data; errors are sup over snapshot stamps of the requested norms
/// of u_nu - v, and slopes are least-squares in log-log coordinates.
SweepResult run_sweep(const SweepSpec& spec, const Grid& grid);

/// OLS fit of log err against log nu; nonpositive errors are excluded and
/// at least 4 points must remain.
RateFit fit_rate(const std::vector<std::pair<double, double>>& rows);

struct WorkingNormReport {
    std::vector<double> times;
    std::vector<double> rho1_series;  // per-snapshot surrogate (no time norm)
    std::vector<double> rho2_series;
    std::vector<double> rho3_series;
    double rho1_window;  // with the L_t^2 aggregation over the window
    double rho2_window;  // with L_t^inf
    double rho3_window;  // with the L_t^3 L_x^6 piece added
    double growth1;      // max / initial of each series
    double growth2;
    double growth3;
};

/// Discrete surrogates of the working norms rho_1, rho_2, rho_3:
///   rho_1 ~ sum_i sum_{|k_i|>4} <k_i>^{s-1/2} ||box_k u||_{L_{x_i}^inf L_{x_j}^2 (L_t^2)}
///   rho_2 ~ sum_i sum_k ||box_k u||_{L_{x_i}^2 L_{x_j}^inf (L_t^inf)}
///   rho_3 ~ sum_k <k>^{s-3/2} ||box_k u||_{L_t^inf L_x^2 (+ L_t^3 L_x^6)}
/// evaluated on the sampled window; the per-snapshot series drop the time
/// norm so boundedness can be compared against the initial value.
WorkingNormReport track_working_norms(const Trajectory& traj, double s, const WindowFamily& w);

}  // namespace mpde
