#pragma once

#include <Eigen/Core>

#include "fstefan/mesh.hpp"

namespace fstefan {

// Convolution kernel chi_alpha(t) = t^(alpha-1)/Gamma(alpha) for t > 0,
// 0 for t <= 0.
double chi_kernel(FractionalOrder alpha, double t);

// Riemann-Liouville integral I^alpha f at node i, by product-trapezoid
// quadrature: f is linear on each subinterval and the weakly singular
// kernel moments are integrated in closed form, so the rule is exact
// for piecewise-linear signals. If f.values[0] is not finite the first
// subinterval uses the constant value f(t_1) instead of a chord.
double rl_integral(const SampledSignal& f, FractionalOrder alpha,
                   Eigen::Index i);

// I^alpha f at every node (index 0 holds the exact value 0). Shares
// work across nodes; O(N^2) total.
Eigen::ArrayXd rl_integral_all(const SampledSignal& f, FractionalOrder alpha);

struct RlDerivResult {
    double value;
    // Set when the value was taken at the first node of a signal whose
    // RL derivative is expected to blow up like t^(mu'-1) at t = 0
    // (nonzero or singular start).
    bool singularity_warning = false;
};

// Riemann-Liouville derivative D^mu f at node i, mu in [0, 1]:
// a three-point derivative of the discrete I^(1-mu) f profile
// (backward at the last node). mu = 0 returns the sample itself,
// mu = 1 the classical three-point derivative of f.
RlDerivResult rl_derivative(const SampledSignal& f, double mu, Eigen::Index i);

// Caputo derivative of order mu in [0, 1] at node i: L1 scheme, i.e.
// kernel moments against the piecewise-constant slopes of f.
double caputo_derivative(const SampledSignal& f, double mu, Eigen::Index i);

// Closed-form fractional power rule
//   Gamma(p+1)/Gamma(p-mu+1) * t^(p-mu),
// the RL derivative of t^p for mu > 0 and the RL integral of order -mu
// for mu < 0. Returns 0 where 1/Gamma(p-mu+1) vanishes.
double rl_power_rule(double p, double mu, double t);

} // namespace fstefan
