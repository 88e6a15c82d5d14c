#pragma once

#include <limits>
#include <string>
#include <vector>

#include "fstefan/fracops.hpp"
#include "fstefan/stefan.hpp"

namespace fstefan::verify {

enum class Method { closed_form, quadrature, finite_difference };

struct Entry {
    std::string name;
    double alpha = 0.0;
    // Single evaluation time, or NaN with t_desc describing a grid.
    double t = std::numeric_limits<double>::quiet_NaN();
    std::string t_desc;
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    Method method = Method::closed_form;
};

struct SuiteConfig {
    std::vector<double> alphas{0.25, 0.5, 0.75, 1.0};
    std::vector<double> ts{0.5, 1.0, 2.0};
    int n_quad = 512;
    int nx = 512;
    int n_fde = 1024;
    int n_caputo = 1024;
    // 0 means per-alpha default 2/alpha.
    double grading = 0.0;
};

struct VerificationReport {
    SuiteConfig config;
    std::vector<Entry> entries;

    bool all_passed() const {
        for (const auto& e : entries)
            if (!e.passed) return false;
        return true;
    }
};

// Root/denominator bundle for any alpha in (0, 1]; alpha = 1 routes to
// the classical root and denominator erf(xi).
SimilaritySolution solution_for(double alpha, double tol = 1e-12);

// |s^2(t) - RHS| / s^2(t) with every term of the free-boundary
// integral identity evaluated from its Wright closed form. Zero in
// exact arithmetic for the similarity solution.
double integral_relationship_closed_form(const SimilaritySolution& sol,
                                         double t);

// Same identity with every integral computed numerically: fracops
// derivative of the constant boundary datum, trapezoid in time of the
// sampled interface derivative, composite trapezoid in space of z u.
// mesh.horizon() must equal t. alpha = 1 uses the classical reduction
// with the reference error function.
double integral_relationship_quadrature(const SimilaritySolution& sol,
                                        double t, const TemporalMesh& mesh,
                                        int nx);

// Max relative residual of u_t = d/dx[ D^(1-alpha) u_x ] over probe
// abscissae x_grid and the upper half of the mesh, all derivatives by
// finite differences plus the discrete RL operator. Couples all three
// numerical layers with no shared closed form.
double fde_residual(const SimilaritySolution& sol,
                    const std::vector<double>& x_grid,
                    const TemporalMesh& mesh);

// Residual of the companion formulation: Caputo D^alpha u(x,.) vs
// u_xx(x,.) at upper-half nodes.
double caputo_cross_check(const SimilaritySolution& sol, double x,
                          const TemporalMesh& mesh);

// Run every check on the config grid; failures are recorded, never
// thrown. Entry order is a pure function of the config.
VerificationReport run_suite(const SuiteConfig& cfg = {});

std::string to_json(const VerificationReport& report);
VerificationReport report_from_json(const std::string& text);
std::string to_csv(const VerificationReport& report);

} // namespace fstefan::verify
