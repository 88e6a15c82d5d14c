#pragma once

#include <Eigen/Core>

#include "fstefan/errors.hpp"

namespace fstefan {

// Parameter pair (rho, beta) of the Wright series
//   W(z; rho; beta) = sum_{k>=0} z^k / (k! Gamma(rho k + beta)),
// an entire function of z for rho > -1.
struct WrightParams {
    double rho;
    double beta;
};

// Evaluation policy. z_max bounds the argument magnitude accepted by
// the public evaluator, tol is the absolute truncation tolerance of
// the series, max_terms its iteration budget.
struct EvalDomain {
    double z_max = 50.0;
    double tol = 1e-14;
    int max_terms = 10'000;
};

// W(z; p.rho; p.beta).
//
// Two evaluation routes share this entry point. Small and positive
// arguments go through the direct series with compensated summation.
// Strongly cancelling arguments (z < 0, rho in (-1,0), where the
// largest term exceeds the sum by many orders) are integrated over a
// parabolic Hankel-type contour instead; the two routes agree on the
// overlap and are cross-checked in the tests.
//
// Throws DomainError when p.rho <= -1 or |z| > d.z_max, and
// NonConvergenceError when the series needs more than d.max_terms.
double wright(double z, WrightParams p, const EvalDomain& d = {});

// Mainardi function M_rho(z) = W(-z; -rho; 1-rho), rho < 1.
double mainardi(double z, double rho, const EvalDomain& d = {});

// dW/dz(z; rho; beta) = W(z; rho; rho + beta).
double wright_dz(double z, WrightParams p, const EvalDomain& d = {});

// Elementwise evaluation over an Eigen array expression.
template <typename Derived>
Eigen::ArrayXd wright(const Eigen::ArrayBase<Derived>& z, WrightParams p,
                      const EvalDomain& d = {}) {
    Eigen::ArrayXd out(z.size());
    for (Eigen::Index i = 0; i < z.size(); ++i)
        out[i] = wright(static_cast<double>(z[i]), p, d);
    return out;
}

template <typename Derived>
Eigen::ArrayXd mainardi(const Eigen::ArrayBase<Derived>& z, double rho,
                        const EvalDomain& d = {}) {
    Eigen::ArrayXd out(z.size());
    for (Eigen::Index i = 0; i < z.size(); ++i)
        out[i] = mainardi(static_cast<double>(z[i]), rho, d);
    return out;
}

} // namespace fstefan
