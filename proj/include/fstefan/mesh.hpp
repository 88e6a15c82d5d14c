#pragma once

#include <Eigen/Core>

#include <cmath>
#include <functional>

#include "fstefan/errors.hpp"

namespace fstefan {

// Graded partition 0 = t_0 < t_1 < ... < t_N = T with node law
// t_i = T (i/N)^grading. grading = 1 is uniform; grading > 1 clusters
// nodes at t = 0 where fractional kernels and the exact solution are
// least regular.
struct TemporalMesh {
    Eigen::ArrayXd nodes;
    double grading = 1.0;

    static TemporalMesh graded(double T, int N, double grading = 1.0) {
        if (!(T > 0.0)) throw DomainError("mesh horizon must be positive");
        if (N < 2) throw DomainError("mesh needs at least 2 intervals");
        if (!(grading >= 1.0)) throw DomainError("mesh grading must be >= 1");
        TemporalMesh m;
        m.grading = grading;
        m.nodes.resize(N + 1);
        for (int i = 0; i <= N; ++i)
            m.nodes[i] = T * std::pow(static_cast<double>(i) / N, grading);
        m.nodes[N] = T;
        return m;
    }

    Eigen::Index intervals() const { return nodes.size() - 1; }
    double horizon() const { return nodes[nodes.size() - 1]; }
};

// Samples of a scalar signal aligned with mesh nodes. values[0] may be
// non-finite for signals with an integrable singularity at t = 0; the
// quadrature rules then never touch that sample.
struct SampledSignal {
    TemporalMesh mesh;
    Eigen::ArrayXd values;

    static SampledSignal sample(const TemporalMesh& m,
                                const std::function<double(double)>& f) {
        SampledSignal s;
        s.mesh = m;
        s.values.resize(m.nodes.size());
        for (Eigen::Index i = 0; i < m.nodes.size(); ++i)
            s.values[i] = f(m.nodes[i]);
        return s;
    }
};

// Order parameter of the fractional setting, alpha in (0, 1]. alpha = 1
// is the classical degenerate case.
struct FractionalOrder {
    double alpha;

    explicit FractionalOrder(double a) : alpha(a) {
        if (!(a > 0.0) || a > 1.0)
            throw DomainError("fractional order must lie in (0, 1]");
    }
};

} // namespace fstefan
