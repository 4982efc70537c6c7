#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace mpde {

/// Periodic torus [-L, L)^n with N points per axis and its discrete
/// frequency lattice xi = (pi/L) * m, m in {-N/2, ..., N/2-1}.
class Grid {
  public:
    Grid(int dim, int points, double half_width)
        : dim_(dim), points_(points), half_width_(half_width) {
        if (dim < 1 || dim > 3)
            throw std::invalid_argument("Grid: dim must be 1, 2, or 3");
        if (points < 8 || points % 2 != 0)
            throw std::invalid_argument("Grid: N must be even and >= 8");
        if (!(half_width > 0.0))
            throw std::invalid_argument("Grid: L must be positive");
        size_ = 1;
        for (int d = 0; d < dim; ++d)
            size_ *= static_cast<std::size_t>(points);
    }

    int dim() const { return dim_; }
    int points() const { return points_; }
    double half_width() const { return half_width_; }
    std::size_t size() const { return size_; }

    double dx() const { return 2.0 * half_width_ / points_; }
    double dxi() const { return M_PI / half_width_; }
    double xi_max() const { return dxi() * (points_ / 2); }
    double cell_volume() const { return std::pow(dx(), dim_); }
    double volume() const { return std::pow(2.0 * half_width_, dim_); }

    // Signed frequency integer for storage index i (FFT ordering).
    int freq_index(int i) const { return i < points_ / 2 ? i : i - points_; }
    double xi(int i) const { return dxi() * freq_index(i); }
    double x(int j) const { return -half_width_ + j * dx(); }

    // Row-major, axis 0 slowest.
    std::size_t flatten(const std::array<int, 3>& idx) const {
        std::size_t r = 0;
        for (int d = 0; d < dim_; ++d)
            r = r * points_ + idx[d];
        return r;
    }
    std::array<int, 3> unflatten(std::size_t i) const {
        std::array<int, 3> idx{0, 0, 0};
        for (int d = dim_ - 1; d >= 0; --d) {
            idx[d] = static_cast<int>(i % points_);
            i /= points_;
        }
        return idx;
    }

    bool operator==(const Grid& o) const {
        return dim_ == o.dim_ && points_ == o.points_ && half_width_ == o.half_width_;
    }
    bool operator!=(const Grid& o) const { return !(*this == o); }

  private:
    int dim_;
    int points_;
    double half_width_;
    std::size_t size_;
};

}  // namespace mpde
