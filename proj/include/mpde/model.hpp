#pragma once

#include <array>

#include "mpde/field.hpp"

namespace mpde {

enum class ModelKind { dcgl_cubic, dnls_cubic, cgl_power, quadratic };

/// Coefficients of the full model family:
///   u_t = (nu + i) lap u + lambda1 . grad(|u|^2 u) + (lambda2 . grad u)|u|^2
///         + alpha |u|^{2 delta} u             (cubic kinds; dnls has nu = 0)
///   u_t = (nu + i) lap u + lambda . grad(u^2) (quadratic kind)
struct ModelParams {
    ModelKind kind = ModelKind::dcgl_cubic;
    double nu = 0.0;
    std::array<cplx, 3> lambda1{};
    std::array<cplx, 3> lambda2{};
    std::array<cplx, 3> lambda{};
    cplx alpha{};
    int delta = 1;

    void validate(int dim) const;
    bool any_nonlinear(int dim) const;
};

/// 2/3-rule truncation: zero all modes with |m| >= N/3 on any axis.
Field dealias(const Field& f);

/// Right-hand-side nonlinearity. Products are formed in physical space with
/// 2/3-rule truncation after each product; derivatives act on the Fourier side.
Field nonlinearity(const Field& u, const ModelParams& p);

/// The expanded form sum_i [lambda1_i (d_i conj u) u^2
/// + (2 lambda1_i + lambda2_i)(d_i u) u conj(u)] + alpha |u|^{2 delta} u,
/// used as an independent cross-check of the cubic kinds.
Field nonlinearity_expanded(const Field& u, const ModelParams& p);

}  // namespace mpde
