#pragma once

#include <cmath>

namespace fstefan {

// Reference error functions, deliberately routed through the libm
// rational implementations so identity tests against the series code
// are not circular.

inline double erf_ref(double x) { return std::erf(x); }

inline double erfc_ref(double x) { return std::erfc(x); }

} // namespace fstefan
