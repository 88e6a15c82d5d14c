#pragma once

#include <cmath>

namespace fstefan::detail {

// Neumaier compensated accumulator.
struct Neumaier {
    double s = 0.0;
    double c = 0.0;

    void add(double x) {
        const double t = s + x;
        if (std::fabs(s) >= std::fabs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }

    double sum() const { return s + c; }
};

} // namespace fstefan::detail
