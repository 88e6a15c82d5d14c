#include "fstefan/wright.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "fstefan/detail/neumaier.hpp"
#include "fstefan/errors.hpp"
#include "fstefan/gamma.hpp"

namespace fstefan {
namespace {

// Largest tolerable log-magnitude of the peak series term when the sum
// cancels. e^12 * eps leaves ~11 correct digits; past that the contour
// route takes over.
constexpr double series_peak_cap = 12.0;

double series(double z, double rho, double beta, const EvalDomain& d) {
    detail::Neumaier acc;
    double zk = 1.0; // z^k / k!
    double peak = 0.0;
    int quiet = 0;
    for (int k = 0; k < d.max_terms; ++k) {
        const double term = zk * reciprocal_gamma(rho * k + beta);
        if (!std::isfinite(term)) return term;
        acc.add(term);
        const double mag = std::fabs(term);
        if (mag > peak) peak = mag;
        if (mag < d.tol * std::max(1.0, std::fabs(acc.sum()))) {
            if (k > 8 && ++quiet >= 3) return acc.sum();
        } else {
            quiet = 0;
        }
        zk *= z / (k + 1);
    }
    throw NonConvergenceError("wright series: term budget exhausted");
}

// W(-x; -nu; beta) for x > 0, nu in (0,1), via the Hankel integral
//   W = 1/pi Int_0^inf Im[ s'(u) s(u)^(-beta) exp(s(u) - x s(u)^nu) ] du
// on the parabola s(u) = mu (1+iu)^2. The exponent is shifted by
//   Y = (1-nu) (x nu^nu)^(1/(1-nu))
// so its real part is ~0 at the apex; e^(-Y) is restored outside the
// integral. Equispaced trapezoid in u converges geometrically (the
// integrand is analytic in a strip), so a few halvings of the step
// reach full precision.
double contour(double x, double nu, double beta, const EvalDomain& d) {
    const double kstar = std::pow(x * std::pow(nu, nu), 1.0 / (1.0 - nu));
    const double Y = (1.0 - nu) * kstar;
    if (Y > 745.0) return 0.0; // result below the double underflow line
    const double mu = std::max(nu * kstar, 1.0);

    // Real part of the shifted exponent along the contour.
    const auto decay = [&](double u) {
        return mu * (1.0 - u * u)
             - x * std::pow(mu * (1.0 + u * u), nu)
                 * std::cos(2.0 * nu * std::atan(u))
             + Y;
    };
    double U = 1.0;
    while (decay(U) > -50.0) {
        U *= 1.25;
        if (U > 1e6) throw NonConvergenceError("wright contour: no decay");
    }

    const auto f = [&](double u) {
        const std::complex<double> w(1.0, u);
        const std::complex<double> s = mu * w * w;
        const std::complex<double> val = std::complex<double>(0.0, 2.0 * mu) *
                                         w * std::pow(s, -beta) *
                                         std::exp(s - x * std::pow(s, nu) + Y);
        return val.imag();
    };

    // f is even, so the half-line integral is half the full-line
    // trapezoid sum.
    const auto trap = [&](double h) {
        detail::Neumaier s;
        s.add(f(0.0));
        const long n = static_cast<long>(std::ceil(U / h));
        for (long j = 1; j <= n; ++j) s.add(2.0 * f(h * j));
        return h * s.sum();
    };

    // The exponent is a cancelling difference of numbers of size
    // ~(mu + Y), so each integrand value carries that much relative
    // roundoff; the step refinement cannot settle tighter than this.
    const double floor_tol =
        4.0 * std::numeric_limits<double>::epsilon() * (mu + Y + 1.0);
    const double tol = std::max(d.tol, floor_tol);
    double h = 0.5;
    double prev = trap(h);
    for (int round = 0; round < 9; ++round) {
        h *= 0.5;
        const double cur = trap(h);
        if (std::fabs(cur - prev) <= tol * std::max(std::fabs(cur), 1e-30)) {
            return std::exp(-Y) / (2.0 * std::numbers::pi) * cur;
        }
        prev = cur;
    }
    throw NonConvergenceError("wright contour: quadrature stalled");
}

} // namespace

double wright(double z, WrightParams p, const EvalDomain& d) {
    if (std::isnan(z) || std::isnan(p.rho) || std::isnan(p.beta))
        return std::numeric_limits<double>::quiet_NaN();
    if (!(p.rho > -1.0))
        throw DomainError("wright: rho must exceed -1");
    if (std::fabs(z) > d.z_max)
        throw DomainError("wright: |z| exceeds the configured z_max");

    if (p.rho == 0.0) return std::exp(z) * reciprocal_gamma(p.beta);
    if (z >= 0.0) return series(z, p.rho, p.beta, d);

    const double x = -z;
    if (p.rho < 0.0) {
        const double nu = -p.rho;
        const double peak_log =
            (1.0 - nu) * std::pow(x * std::pow(nu, nu), 1.0 / (1.0 - nu));
        if (peak_log <= series_peak_cap) return series(z, p.rho, p.beta, d);
        return contour(x, nu, p.beta, d);
    }

    // rho > 0, z < 0: terms alternate under a slowly growing Gamma, so
    // the series is only trusted while the peak term stays moderate.
    const double peak_log =
        (1.0 + p.rho) *
        std::pow(x * std::pow(p.rho, -p.rho), 1.0 / (1.0 + p.rho));
    if (peak_log <= series_peak_cap) return series(z, p.rho, p.beta, d);
    throw NonConvergenceError(
        "wright: oscillatory regime (rho > 0, z << 0) is out of scope");
}

double mainardi(double z, double rho, const EvalDomain& d) {
    if (!(rho > 0.0) || !(rho < 1.0))
        throw DomainError("mainardi: order must lie in (0, 1)");
    return wright(-z, {-rho, 1.0 - rho}, d);
}

double wright_dz(double z, WrightParams p, const EvalDomain& d) {
    return wright(z, {p.rho, p.beta + p.rho}, d);
}

} // namespace fstefan
