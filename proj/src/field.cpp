#include "mpde/field.hpp"

#include <cmath>

#include "mpde/fft.hpp"

namespace mpde {

namespace {

// Parity of the summed storage indices. Since x_0 = -L, the continuum-phase
// transform differs from the raw DFT by (-1)^{m_1+...+m_n}; N even makes the
// parity of the signed frequency integer equal that of the storage index.
inline int index_parity(const Grid& g, std::size_t i) {
    int s = 0;
    for (int d = 0; d < g.dim(); ++d) {
        s += static_cast<int>(i % g.points());
        i /= g.points();
    }
    return s & 1;
}

}  // namespace

Field to_fourier(const Field& f) {
    if (f.rep() == Rep::fourier)
        return f;
    const Grid& g = f.grid();
    std::vector<cplx> v = f.values();
    detail::dft_inplace(g, v.data(), -1);
    const double w = g.cell_volume();
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] *= index_parity(g, i) ? -w : w;
    return Field(g, Rep::fourier, std::move(v));
}

Field to_physical(const Field& f) {
    if (f.rep() == Rep::physical)
        return f;
    const Grid& g = f.grid();
    std::vector<cplx> v = f.values();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (index_parity(g, i))
            v[i] = -v[i];
    detail::dft_inplace(g, v.data(), +1);
    const double w = 1.0 / g.volume();
    for (auto& c : v)
        c *= w;
    return Field(g, Rep::physical, std::move(v));
}

Field in_rep(const Field& f, Rep rep) {
    return rep == Rep::fourier ? to_fourier(f) : to_physical(f);
}

Field apply_multiplier(const Field& f,
                       const std::function<cplx(const std::array<double, 3>&)>& m) {
    const Grid& g = f.grid();
    Field fh = to_fourier(f);
    std::vector<cplx> v = fh.values();
    std::array<double, 3> xi{0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < v.size(); ++i) {
        auto idx = g.unflatten(i);
        for (int d = 0; d < g.dim(); ++d)
            xi[d] = g.xi(idx[d]);
        v[i] *= m(xi);
    }
    Field out(g, Rep::fourier, std::move(v));
    return f.rep() == Rep::physical ? to_physical(out) : out;
}

Field derivative(const Field& f, int axis, int order) {
    const Grid& g = f.grid();
    if (axis < 0 || axis >= g.dim())
        throw std::out_of_range("derivative: axis out of range");
    Field fh = to_fourier(f);
    std::vector<cplx> v = fh.values();
    const int nyq = g.points() / 2;
    for (std::size_t i = 0; i < v.size(); ++i) {
        auto idx = g.unflatten(i);
        int m = g.freq_index(idx[axis]);
        if (order % 2 != 0 && m == -nyq) {
            v[i] = 0.0;  // Nyquist has no well-defined odd derivative
            continue;
        }
        v[i] *= std::pow(cplx(0.0, g.dxi() * m), order);
    }
    Field out(g, Rep::fourier, std::move(v));
    return f.rep() == Rep::physical ? to_physical(out) : out;
}

Field fractional_derivative(const Field& f, int axis, double s) {
    const Grid& g = f.grid();
    if (axis < 0 || axis >= g.dim())
        throw std::out_of_range("fractional_derivative: axis out of range");
    Field fh = to_fourier(f);
    std::vector<cplx> v = fh.values();
    for (std::size_t i = 0; i < v.size(); ++i) {
        auto idx = g.unflatten(i);
        double a = std::abs(g.xi(idx[axis]));
        if (a == 0.0 && s < 0.0)
            throw std::domain_error("fractional_derivative: negative order on DC mode");
        v[i] *= (a == 0.0 && s == 0.0) ? 1.0 : std::pow(a, s);
    }
    Field out(g, Rep::fourier, std::move(v));
    return f.rep() == Rep::physical ? to_physical(out) : out;
}

Field sample(const Grid& grid, const std::function<cplx(const std::array<double, 3>&)>& fn) {
    std::vector<cplx> v(grid.size());
    std::array<double, 3> x{0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < v.size(); ++i) {
        auto idx = grid.unflatten(i);
        for (int d = 0; d < grid.dim(); ++d)
            x[d] = grid.x(idx[d]);
        v[i] = fn(x);
    }
    return Field(grid, Rep::physical, std::move(v));
}

Field operator+(const Field& a, const Field& b) {
    if (a.grid() != b.grid() || a.rep() != b.rep())
        throw std::invalid_argument("Field +: mismatched grids or representations");
    std::vector<cplx> v = a.values();
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] += b[i];
    return Field(a.grid(), a.rep(), std::move(v));
}

Field operator-(const Field& a, const Field& b) {
    if (a.grid() != b.grid() || a.rep() != b.rep())
        throw std::invalid_argument("Field -: mismatched grids or representations");
    std::vector<cplx> v = a.values();
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] -= b[i];
    return Field(a.grid(), a.rep(), std::move(v));
}

Field operator*(const cplx& c, const Field& a) {
    std::vector<cplx> v = a.values();
    for (auto& e : v)
        e *= c;
    return Field(a.grid(), a.rep(), std::move(v));
}

Field conj(const Field& a) {
    Field p = to_physical(a);
    std::vector<cplx> v = p.values();
    for (auto& e : v)
        e = std::conj(e);
    Field out(a.grid(), Rep::physical, std::move(v));
    return a.rep() == Rep::fourier ? to_fourier(out) : out;
}

Field pointwise(const Field& a, const Field& b) {
    if (a.grid() != b.grid())
        throw std::invalid_argument("pointwise: mismatched grids");
    Field pa = to_physical(a);
    Field pb = to_physical(b);
    std::vector<cplx> v = pa.values();
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] *= pb[i];
    return Field(a.grid(), Rep::physical, std::move(v));
}

}  // namespace mpde
