#include "mpde/model.hpp"

#include <cmath>

namespace mpde {

void ModelParams::validate(int dim) const {
    if (nu < 0.0 || nu > 1.0)
        throw std::invalid_argument("ModelParams: nu must be in [0, 1]");
    if (kind == ModelKind::dnls_cubic && nu != 0.0)
        throw std::invalid_argument("ModelParams: dnls kind requires nu = 0");
    if (kind != ModelKind::quadratic && alpha != cplx(0.0, 0.0) && delta < 1)
        throw std::invalid_argument("ModelParams: delta must be a positive integer");
    (void)dim;
}

bool ModelParams::any_nonlinear(int dim) const {
    if (kind == ModelKind::quadratic) {
        for (int d = 0; d < dim; ++d)
            if (lambda[d] != cplx(0.0, 0.0))
                return true;
        return false;
    }
    if (alpha != cplx(0.0, 0.0))
        return true;
    for (int d = 0; d < dim; ++d)
        if (lambda1[d] != cplx(0.0, 0.0) || lambda2[d] != cplx(0.0, 0.0))
            return true;
    return false;
}

Field dealias(const Field& f) {
    const Grid& g = f.grid();
    const int cut = g.points() / 3;  // keep |m| < N/3
    Field fh = to_fourier(f);
    std::vector<cplx> v = fh.values();
    for (std::size_t i = 0; i < v.size(); ++i) {
        auto idx = g.unflatten(i);
        for (int d = 0; d < g.dim(); ++d) {
            if (std::abs(g.freq_index(idx[d])) >= cut) {
                v[i] = 0.0;
                break;
            }
        }
    }
    Field out(g, Rep::fourier, std::move(v));
    return f.rep() == Rep::physical ? to_physical(out) : out;
}

namespace {

Field dealiased_product(const Field& a, const Field& b) {
    return dealias(pointwise(a, b));
}

// (u conj u)^delta by repeated dealiased multiplication.
Field power_modulus(const Field& u, const Field& uc, int delta) {
    Field uu = dealiased_product(u, uc);
    Field acc = uu;
    for (int j = 1; j < delta; ++j)
        acc = dealiased_product(acc, uu);
    return acc;
}

}  // namespace

Field nonlinearity(const Field& u, const ModelParams& p) {
    const Grid& g = u.grid();
    p.validate(g.dim());
    Field up = to_physical(u);

    if (p.kind == ModelKind::quadratic) {
        Field u2 = dealiased_product(up, up);
        Field acc(g, Rep::fourier);
        for (int d = 0; d < g.dim(); ++d)
            if (p.lambda[d] != cplx(0.0, 0.0))
                acc = acc + p.lambda[d] * derivative(to_fourier(u2), d, 1);
        return dealias(acc);
    }

    Field uc = conj(up);
    Field mod2 = dealiased_product(up, uc);     // |u|^2
    Field cubic = dealiased_product(mod2, up);  // |u|^2 u

    Field acc(g, Rep::fourier);
    Field cubic_h = to_fourier(cubic);
    for (int d = 0; d < g.dim(); ++d)
        if (p.lambda1[d] != cplx(0.0, 0.0))
            acc = acc + p.lambda1[d] * derivative(cubic_h, d, 1);

    bool l2_active = false;
    for (int d = 0; d < g.dim(); ++d)
        if (p.lambda2[d] != cplx(0.0, 0.0))
            l2_active = true;
    if (l2_active) {
        Field grad(g, Rep::fourier);
        Field uh = to_fourier(up);
        for (int d = 0; d < g.dim(); ++d)
            if (p.lambda2[d] != cplx(0.0, 0.0))
                grad = grad + p.lambda2[d] * derivative(uh, d, 1);
        acc = acc + to_fourier(dealiased_product(to_physical(grad), mod2));
    }

    if (p.alpha != cplx(0.0, 0.0)) {
        Field pw = power_modulus(up, uc, p.delta);
        acc = acc + p.alpha * to_fourier(dealiased_product(pw, up));
    }
    return dealias(acc);
}

Field nonlinearity_expanded(const Field& u, const ModelParams& p) {
    const Grid& g = u.grid();
    p.validate(g.dim());
    if (p.kind == ModelKind::quadratic)
        throw std::invalid_argument("nonlinearity_expanded: cubic kinds only");
    Field up = to_physical(u);
    Field uc = conj(up);
    Field u2 = dealiased_product(up, up);     // u^2
    Field mod2 = dealiased_product(up, uc);   // u conj u

    Field acc(g, Rep::fourier);
    for (int d = 0; d < g.dim(); ++d) {
        cplx c1 = p.lambda1[d];
        cplx c2 = 2.0 * p.lambda1[d] + p.lambda2[d];
        if (c1 != cplx(0.0, 0.0)) {
            Field duc = to_physical(derivative(to_fourier(uc), d, 1));
            acc = acc + c1 * to_fourier(dealiased_product(duc, u2));
        }
        if (c2 != cplx(0.0, 0.0)) {
            Field du = to_physical(derivative(to_fourier(up), d, 1));
            acc = acc + c2 * to_fourier(dealiased_product(du, mod2));
        }
    }
    if (p.alpha != cplx(0.0, 0.0)) {
        Field pw = power_modulus(up, uc, p.delta);
        acc = acc + p.alpha * to_fourier(dealiased_product(pw, up));
    }
    return dealias(acc);
}

}  // namespace mpde
