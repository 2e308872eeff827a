#pragma once

#include <functional>
#include <vector>

#include "logpole/errors.hpp"

namespace logpole {

using Integrand = std::function<double(double)>;

/// One 15-point Gauss-Legendre panel (exact through degree 29).
double gauss15(const Integrand& f, double a, double b);

/// Adaptive composite GL15: a panel is accepted when it agrees with its
/// two halves to rel_tol (with a small absolute floor); otherwise bisect.
/// Throws NumericError past max_depth refinement levels.
double integrate(const Integrand& f, double a, double b, double rel_tol = 1e-9,
                 double abs_floor = 0.0, int max_depth = 24);

/// Same, but seeded with interior breakpoints (peaks, support edges).
double integrate_split(const Integrand& f, const std::vector<double>& breakpoints,
                       double rel_tol = 1e-9, double abs_floor = 0.0, int max_depth = 24);

}  // namespace logpole
