#pragma once

#include <array>
#include <utility>
#include <vector>

#include "mpde/field.hpp"

namespace mpde {

/// Frequency-uniform partition of unity {sigma_k} on the grid's frequency
/// lattice, built from tensor products of a 1D compactly supported bump
/// normalized so the partition is exact: sigma_k(xi) = prod_i eta_{k_i}(xi_i),
/// eta_j(xi) = eta(xi - j) / sum_l eta(xi - l), supp eta = (-1, 1).
class WindowFamily {
  public:
    explicit WindowFamily(const Grid& grid);

    const Grid& grid() const { return grid_; }
    int kmax() const { return kmax_; }

    /// Active lattice indices |k|_inf <= kmax, lexicographic.
    const std::vector<std::array<int, 3>>& active_set() const { return active_; }
    bool in_active_set(const std::array<int, 3>& k) const;

    /// Normalized window value at an arbitrary frequency point.
    double sigma(const std::array<int, 3>& k, const std::array<double, 3>& xi) const;
    /// Same, at a lattice storage index.
    double sigma_at(const std::array<int, 3>& k, std::size_t flat) const;

    /// Unnormalized 1D bump profile exp(-1/(1-t^2)) on (-1, 1).
    static double eta_raw(double t);

    // Diagnostics for the window-family invariants.
    double partition_deviation() const;  // max |sum_k sigma_k - 1| on the lattice
    int max_overlap() const;             // max #k with sigma_k(xi) != 0
    double min_on_cube() const;          // recorded c with sigma_k >= c on Q_k

  private:
    Grid grid_;
    int kmax_;
    std::vector<std::array<int, 3>> active_;
    // Per storage index along one axis: the (j, eta_j) pairs that are nonzero.
    std::vector<std::vector<std::pair<int, double>>> axis_;
};

enum class SpaceKind { m21, m11, sobolev, sobolev_hom, lebesgue };
enum class ModVariant { window, sharp_cube };

struct NormSpec {
    SpaceKind kind;
    double s = 0.0;
    double p = 2.0;
    ModVariant variant = ModVariant::window;
};

/// Box operator: Fourier coefficients multiplied pointwise by sigma_k.
/// k outside the active set yields an (empty-support) zero field.
Field box(const Field& f, const std::array<int, 3>& k, const WindowFamily& w);

/// sum_k <k>^s ||piece_k|| with <k> = 1 + |k|, lexicographic summation order.
double modulation_norm(const Field& f, const NormSpec& spec, const WindowFamily& w);

/// H^s via the <xi> = (1+|xi|^2)^{1/2} multiplier, or the homogeneous variant.
double sobolev_norm(const Field& f, const NormSpec& spec);

struct EmbeddingSample {
    double h_upper;  // ||f||_{H^{s+eps+n/2}}
    double m21;      // ||f||_{M_{2,1}^s} (sharp cube)
    double h_s;      // ||f||_{H^s}
    bool degenerate;
};

struct EmbeddingReport {
    std::vector<EmbeddingSample> samples;
    int right_violations;   // count of ||f||_{H^s} > ||f||_{M21^s}
    double right_ratio_max; // max ||f||_{H^s} / ||f||_{M21^s}
    double left_ratio_max;  // max ||f||_{M21^s} / ||f||_{H^{s+eps+n/2}} (reported only)
    double left_ratio_min;
};

EmbeddingReport embedding_monitor(const std::vector<Field>& samples, double s, double eps,
                                  const WindowFamily& w);

}  // namespace mpde
