#include "fstefan/fracops.hpp"

#include <cmath>

#include "fstefan/detail/neumaier.hpp"
#include "fstefan/errors.hpp"
#include "fstefan/gamma.hpp"

namespace fstefan {
namespace {

// A^e - B^e for A > B >= 0 without subtractive cancellation when the
// two powers are close.
double pow_diff(double A, double B, double e) {
    if (B <= 0.0) return std::pow(A, e);
    return std::pow(B, e) * std::expm1(e * std::log(A / B));
}

void check_signal(const SampledSignal& f) {
    if (f.values.size() != f.mesh.nodes.size())
        throw DomainError("signal and mesh sizes differ");
    if (f.mesh.nodes.size() < 3)
        throw DomainError("signal needs at least 3 nodes");
}

void check_node(const SampledSignal& f, Eigen::Index i) {
    if (i < 0 || i >= f.mesh.nodes.size())
        throw IndexError("node index outside the mesh");
}

// Derivative at `at` of the parabola through (t0,g0),(t1,g1),(t2,g2).
double lagrange3_deriv(double t0, double t1, double t2, double g0, double g1,
                       double g2, double at) {
    return g0 * (2.0 * at - t1 - t2) / ((t0 - t1) * (t0 - t2)) +
           g1 * (2.0 * at - t0 - t2) / ((t1 - t0) * (t1 - t2)) +
           g2 * (2.0 * at - t0 - t1) / ((t2 - t0) * (t2 - t1));
}

// Three-point derivative of the sampled values at node i: central
// inside, one-sided at the ends. skip0 replaces a non-finite first
// sample by a forward stencil.
double three_point(const SampledSignal& f, Eigen::Index i) {
    const auto& t = f.mesh.nodes;
    const auto& v = f.values;
    const Eigen::Index n = t.size() - 1;
    Eigen::Index a = i - 1;
    if (i == 0 || (i == 1 && !std::isfinite(v[0]))) a = i;
    if (i == n) a = n - 2;
    return lagrange3_deriv(t[a], t[a + 1], t[a + 2], v[a], v[a + 1], v[a + 2],
                           t[i]);
}

} // namespace

double chi_kernel(FractionalOrder alpha, double t) {
    if (t <= 0.0) return 0.0;
    return std::pow(t, alpha.alpha - 1.0) * reciprocal_gamma(alpha.alpha);
}

double rl_integral(const SampledSignal& f, FractionalOrder alpha,
                   Eigen::Index i) {
    check_signal(f);
    check_node(f, i);
    if (i == 0) return 0.0;

    const double a = alpha.alpha;
    const double rga1 = reciprocal_gamma(a + 1.0);
    const double rga2 = a * reciprocal_gamma(a + 2.0);
    const auto& t = f.mesh.nodes;
    const auto& v = f.values;
    const double ti = t[i];

    detail::Neumaier acc;
    for (Eigen::Index j = 1; j <= i; ++j) {
        const double A = ti - t[j - 1];
        const double B = ti - t[j];
        const double k0 = pow_diff(A, B, a) * rga1;
        if (j == 1 && !std::isfinite(v[0])) {
            // integrable singularity at t = 0: hold the panel at f(t_1)
            acc.add(v[1] * k0);
            continue;
        }
        const double k1 = A * k0 - pow_diff(A, B, a + 1.0) * rga2;
        const double slope = (v[j] - v[j - 1]) / (t[j] - t[j - 1]);
        acc.add(v[j - 1] * k0 + slope * k1);
    }
    return acc.sum();
}

Eigen::ArrayXd rl_integral_all(const SampledSignal& f, FractionalOrder alpha) {
    check_signal(f);
    Eigen::ArrayXd out(f.mesh.nodes.size());
    out[0] = 0.0;
    for (Eigen::Index i = 1; i < out.size(); ++i)
        out[i] = rl_integral(f, alpha, i);
    return out;
}

RlDerivResult rl_derivative(const SampledSignal& f, double mu,
                            Eigen::Index i) {
    check_signal(f);
    check_node(f, i);
    if (!(mu >= 0.0) || mu > 1.0)
        throw DomainError("rl derivative order must lie in [0, 1]");

    RlDerivResult r;
    if (mu == 0.0) {
        r.value = f.values[i];
        return r;
    }
    if (mu == 1.0) {
        r.value = three_point(f, i);
        r.singularity_warning = (i == 1 && !std::isfinite(f.values[0]));
        return r;
    }
    if (i == 0)
        throw IndexError("rl derivative is not formed at the first node");
    // The derivative behaves like t^(-mu) near 0 whenever the signal
    // does not vanish there, so the first node carries a flag.
    r.singularity_warning = (i == 1 && f.values[0] != 0.0);

    const FractionalOrder order(1.0 - mu);
    const auto& t = f.mesh.nodes;
    const Eigen::Index n = t.size() - 1;
    const Eigen::Index a = (i == n) ? n - 2 : i - 1;
    const double g0 = rl_integral(f, order, a);
    const double g1 = rl_integral(f, order, a + 1);
    const double g2 = rl_integral(f, order, a + 2);
    r.value = lagrange3_deriv(t[a], t[a + 1], t[a + 2], g0, g1, g2, t[i]);
    return r;
}

double caputo_derivative(const SampledSignal& f, double mu, Eigen::Index i) {
    check_signal(f);
    check_node(f, i);
    if (!(mu >= 0.0) || mu > 1.0)
        throw DomainError("caputo order must lie in [0, 1]");
    if (!std::isfinite(f.values[0]))
        throw DomainError("caputo derivative needs a finite start value");

    if (mu == 0.0) return f.values[i] - f.values[0];
    if (mu == 1.0) return three_point(f, i);
    if (i == 0) return 0.0;

    const double e = 1.0 - mu;
    const double rg2m = reciprocal_gamma(2.0 - mu);
    const auto& t = f.mesh.nodes;
    const auto& v = f.values;
    const double ti = t[i];

    detail::Neumaier acc;
    for (Eigen::Index j = 1; j <= i; ++j) {
        const double A = ti - t[j - 1];
        const double B = ti - t[j];
        const double slope = (v[j] - v[j - 1]) / (t[j] - t[j - 1]);
        acc.add(slope * pow_diff(A, B, e) * rg2m);
    }
    return acc.sum();
}

double rl_power_rule(double p, double mu, double t) {
    if (!(p > -1.0))
        throw DomainError("power rule needs exponent > -1");
    if (t < 0.0) throw DomainError("power rule needs t >= 0");
    const double num = reciprocal_gamma(p - mu + 1.0);
    if (num == 0.0) return 0.0;
    return num / reciprocal_gamma(p + 1.0) * std::pow(t, p - mu);
}

} // namespace fstefan
