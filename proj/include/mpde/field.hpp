#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "mpde/grid.hpp"

namespace mpde {

using cplx = std::complex<double>;

enum class Rep { physical, fourier };

/// Complex state on a Grid, in either physical or Fourier representation.
/// Fields are immutable values: every operation returns a new Field.
///
/// Transform convention: the forward transform carries the dx^n quadrature
/// weight and the inverse carries (2L)^{-n}, so discrete norms approximate
/// continuum integrals directly and the round trip is the identity.
class Field {
  public:
    Field(const Grid& grid, Rep rep)
        : grid_(grid), rep_(rep), v_(grid.size(), cplx(0.0, 0.0)) {}
    Field(const Grid& grid, Rep rep, std::vector<cplx> values)
        : grid_(grid), rep_(rep), v_(std::move(values)) {
        if (v_.size() != grid_.size())
            throw std::invalid_argument("Field: value count does not match grid");
    }

    const Grid& grid() const { return grid_; }
    Rep rep() const { return rep_; }
    const std::vector<cplx>& values() const { return v_; }
    std::vector<cplx>& values() { return v_; }
    cplx operator[](std::size_t i) const { return v_[i]; }

  private:
    Grid grid_;
    Rep rep_;
    std::vector<cplx> v_;
};

Field to_fourier(const Field& f);
Field to_physical(const Field& f);
Field in_rep(const Field& f, Rep rep);

/// Pointwise multiplier m(xi) applied on the Fourier side; result is in the
/// input's representation.
Field apply_multiplier(const Field& f, const std::function<cplx(const std::array<double, 3>&)>& m);

/// (i xi_axis)^order; Nyquist mode zeroed for odd order.
Field derivative(const Field& f, int axis, int order = 1);

/// Partial Riesz potential |xi_axis|^s (the D_{x_i}^s multiplier); the
/// Nyquist mode uses its canonical representative -N/2.
Field fractional_derivative(const Field& f, int axis, double s);

Field sample(const Grid& grid, const std::function<cplx(const std::array<double, 3>&)>& fn);

Field operator+(const Field& a, const Field& b);
Field operator-(const Field& a, const Field& b);
Field operator*(const cplx& c, const Field& a);
Field conj(const Field& a);
/// Pointwise product in physical space.
Field pointwise(const Field& a, const Field& b);

}  // namespace mpde
