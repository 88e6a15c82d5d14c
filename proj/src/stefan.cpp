#include "fstefan/stefan.hpp"

#include <cmath>
#include <numbers>

#include "fstefan/erf.hpp"
#include "fstefan/errors.hpp"

namespace fstefan {
namespace {

// Interior evaluations form z = -x t^(-alpha/2), which exceeds the
// public default bound for small times; the contour route has no such
// limit, so the solution code runs with the gate effectively off.
const EvalDomain wide{1e300, 1e-14, 10'000};

double w1(double y, double nu) { return wright(-y, {-nu, 1.0}, wide); }

double wnu(double y, double nu) { return wright(-y, {-nu, 1.0 + nu}, wide); }

void check_alpha(double alpha) {
    if (!(alpha > 0.0) || alpha > 1.0) throw DomainError("alpha out of (0,1]");
}

void check_time(double t) {
    if (!(t > 0.0)) throw DomainError("time must be positive");
}

} // namespace

double xi_residual(double x, double alpha) {
    check_alpha(alpha);
    const double nu = alpha / 2.0;
    const double y = 2.0 * x;
    return y - 2.0 * y * w1(y, nu) - wnu(y, nu);
}

SimilaritySolution solve_xi(double alpha, double tol) {
    check_alpha(alpha);
    const double nu = alpha / 2.0;

    double lo = 0.0, hi = 1.0;
    double flo = xi_residual(lo, alpha);
    while (xi_residual(hi, alpha) < 0.0) {
        lo = hi;
        hi *= 2.0;
        if (hi > 64.0)
            throw NonConvergenceError("xi solve: root bracket not found");
    }

    // Bisection narrows the bracket, Newton finishes. Steps that leave
    // the bracket fall back to its midpoint.
    while (hi - lo > 1e-6) {
        const double mid = 0.5 * (lo + hi);
        const double fm = xi_residual(mid, alpha);
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }

    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 60; ++it) {
        const double fx = xi_residual(x, alpha);
        if (std::fabs(fx) <= tol) return {alpha, x, 1.0 - w1(2.0 * x, nu)};
        if ((fx < 0.0) == (flo < 0.0)) lo = x;
        else hi = x;
        const double dfx = 2.0 - 2.0 * w1(2.0 * x, nu) +
                           8.0 * x * mainardi(2.0 * x, nu, wide);
        double next = x - fx / dfx;
        if (!(next > lo) || !(next < hi)) next = 0.5 * (lo + hi);
        x = next;
    }
    throw NonConvergenceError("xi solve: Newton budget exhausted");
}

double classical_xi(double tol) {
    const auto g = [](double x) {
        return std::sqrt(std::numbers::pi) * x * std::exp(x * x) * erf_ref(x) -
               1.0;
    };
    double lo = 0.1, hi = 1.0;
    for (int it = 0; it < 200 && hi - lo > 4e-17; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (g(mid) < 0.0) lo = mid;
        else hi = mid;
    }
    const double x = 0.5 * (lo + hi);
    if (std::fabs(g(x)) > std::max(tol, 1e-16) * 10.0)
        throw NonConvergenceError("classical xi: bisection stalled");
    return x;
}

double temperature(const SimilaritySolution& sol, double x, double t) {
    check_time(t);
    const double nu = sol.alpha / 2.0;
    const double z = -x * std::pow(t, -nu);
    return 1.0 - (1.0 - wright(z, {-nu, 1.0}, wide)) / sol.denom;
}

double free_boundary(const SimilaritySolution& sol, double t) {
    if (t < 0.0) throw DomainError("time must be nonnegative");
    return 2.0 * sol.xi * std::pow(t, sol.alpha / 2.0);
}

double fractional_flux(const SimilaritySolution& sol, double x, double t) {
    check_time(t);
    const double nu = sol.alpha / 2.0;
    const double z = -x * std::pow(t, -nu);
    return -(nu / sol.denom) * ((x / t) * wright(z, {-nu, 1.0}, wide) +
                                std::pow(t, nu - 1.0) *
                                    wright(z, {-nu, 1.0 + nu}, wide));
}

double auxiliary_v(const SimilaritySolution& sol, double x, double t) {
    check_time(t);
    const double nu = sol.alpha / 2.0;
    const double z = -x * std::pow(t, -nu);
    return -(1.0 - 1.0 / sol.denom) * x +
           std::pow(t, nu) / sol.denom * wright(z, {-nu, 1.0 + nu}, wide);
}

} // namespace fstefan
