#pragma once

#include <Eigen/Core>

#include "fstefan/wright.hpp"

namespace fstefan {

// Exact similarity solution of the one-phase fractional melting
// problem with unit data: temperature
//   u(x,t) = 1 - [1 - W(-x t^(-alpha/2); -alpha/2; 1)] / denom,
// free boundary s(t) = 2 xi t^(alpha/2), where
//   denom = 1 - W(-2 xi; -alpha/2; 1)
// and xi is the positive root produced by solve_xi.
struct SimilaritySolution {
    double alpha;
    double xi;
    double denom;
};

// Residual F(x) = H(2x) - G(2x) of the free-boundary equation, with
//   H(y) = y [1 - W(-y; -alpha/2; 1)],
//   G(y) = y W(-y; -alpha/2; 1) + W(-y; -alpha/2; 1 + alpha/2).
// F(0) < 0 and F is strictly increasing, so the root is unique.
double xi_residual(double x, double alpha);

// Solve F(xi) = 0 for alpha in (0,1): bracket by doubling from x = 1,
// bisect to width 1e-6, then polish with Newton using
// F'(x) = 2 - 2 W(-2x;-a/2;1) + 8x M_{a/2}(2x); falls back to pure
// bisection if Newton stalls. |F(xi)| <= tol on return.
SimilaritySolution solve_xi(double alpha, double tol = 1e-12);

// Classical limit root: xi solving sqrt(pi) xi exp(xi^2) erf(xi) = 1,
// by bisection on the reference error function. Approximately 0.620063.
double classical_xi(double tol = 1e-12);

// Temperature u(x, t), t > 0. x past the free boundary is permitted and
// evaluates the same analytic expression (extrapolation region).
double temperature(const SimilaritySolution& sol, double x, double t);

// Free boundary s(t) = 2 xi t^(alpha/2), t >= 0.
double free_boundary(const SimilaritySolution& sol, double t);

// The fractional flux D^(1-alpha) u_x(x, t) in closed form:
//   -(alpha/2)/denom [ (x/t) W(-x t^(-a/2);-a/2;1)
//                      + t^(a/2-1) W(-x t^(-a/2);-a/2;1+a/2) ].
// The leading minus sign is fixed by differentiating the auxiliary
// function v below in t; at x = s(t) the value equals -s'(t).
double fractional_flux(const SimilaritySolution& sol, double x, double t);

// Auxiliary potential v with v_x = -u and v_t = fractional flux sign
// partner: v(x,t) = -(1 - 1/denom) x
//                   + t^(a/2)/denom W(-x t^(-a/2);-a/2;1+a/2).
double auxiliary_v(const SimilaritySolution& sol, double x, double t);

// Elementwise helpers for grids.
template <typename Derived>
Eigen::ArrayXd temperature(const SimilaritySolution& sol,
                           const Eigen::ArrayBase<Derived>& x, double t) {
    Eigen::ArrayXd out(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i)
        out[i] = temperature(sol, static_cast<double>(x[i]), t);
    return out;
}

template <typename Derived>
Eigen::ArrayXd fractional_flux(const SimilaritySolution& sol,
                               const Eigen::ArrayBase<Derived>& x, double t) {
    Eigen::ArrayXd out(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i)
        out[i] = fractional_flux(sol, static_cast<double>(x[i]), t);
    return out;
}

} // namespace fstefan
