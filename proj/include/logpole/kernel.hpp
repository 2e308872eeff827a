#pragma once

#include "logpole/errors.hpp"
#include "logpole/jet.hpp"
#include "logpole/scalar.hpp"

namespace logpole {

/// Default cap on jet orders requested through the public entry points.
/// Internal machinery may go up to Jet::kCapacity when it needs headroom
/// (e.g. two extra orders for second derivatives of products).
inline constexpr int kDefaultMaxJetOrder = 8;

/// The fixed smooth bump: 1 on [-1/2,1/2], 0 outside (-1,1), even, with
/// ramp rho(t) = theta(t)/(theta(t)+theta(1-t)), theta(t) = exp(-1/t).
struct BumpSpec {
  double plateau_half_width = 0.5;
  double support_half_width = 1.0;
  static const char* transition() { return "exp(-1/t) ratio ramp"; }
};

// ---- jet-argument evaluators (chain rule comes for free) ----

/// y(s) = exp(-sqrt(s^2+1)) on a jet argument.
Jet y_of(const Jet& s);

/// b(s) = -(s^2+1)^{-3/2} + s^2/(s^2+1) on a jet argument.
Jet b_of(const Jet& s);

/// The bump on a jet argument; branches on the sign and region of s.value().
Jet chi_of(const Jet& s);

// ---- point evaluations ----

Jet eval_y(double s, int order, int max_order = kDefaultMaxJetOrder);
Jet eval_b(double s, int order, int max_order = kDefaultMaxJetOrder);
Jet eval_chi(double s, int order, int max_order = kDefaultMaxJetOrder);

/// -y''(s) + b(s) y(s); identically zero in exact arithmetic.
double ode_residual(double s);

/// y_{omega,a}(r) = y(omega (r-a)); requires omega > 0.
Jet eval_scaled_y(double omega, double a, double r, int order,
                  int max_order = kDefaultMaxJetOrder);

/// b_{omega,a}(r) = omega^2 b(omega (r-a)); requires omega > 0.
Jet eval_scaled_b(double omega, double a, double r, int order,
                  int max_order = kDefaultMaxJetOrder);

// ---- value-level evaluators, usable at extended precision ----

template <class Real>
Real value_y(Real s) {
  return num<Real>::exp(-num<Real>::sqrt(s * s + Real(1)));
}

template <class Real>
Real value_b(Real s) {
  const Real u = s * s + Real(1);
  return -Real(1) / (u * num<Real>::sqrt(u)) + s * s / u;
}

template <class Real>
Real value_chi(Real s) {
  s = num<Real>::abs(s);
  if (s <= Real(0.5)) return Real(1);
  if (s >= Real(1)) return Real(0);
  const Real t = 2 * (Real(1) - s);
  const Real a = num<Real>::exp(Real(-1) / t);
  const Real b = num<Real>::exp(Real(-1) / (Real(1) - t));
  return a / (a + b);
}

namespace detail {
inline int checked_order(int order, int max_order) {
  if (order > max_order || order > Jet::kCapacity)
    throw ConfigError("requested jet order " + std::to_string(order) +
                      " exceeds configured maximum " + std::to_string(max_order));
  if (order < 0) throw ConfigError("negative jet order");
  return order;
}
}  // namespace detail

}  // namespace logpole
