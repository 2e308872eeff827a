#include "logpole/kernel.hpp"

namespace logpole {

Jet y_of(const Jet& s) { return exp(-sqrt(s * s + 1.0)); }

Jet b_of(const Jet& s) {
  const Jet u = s * s + 1.0;
  // s^2/(s^2+1) written as 1 - 1/u to share the reciprocal
  const Jet inv_u = 1.0 / u;
  return -inv_u / sqrt(u) + (1.0 - inv_u);
}

namespace {

// Ramp: chi(s) = rho(2(1-s)) for s in (1/2, 1). theta(t) = exp(-1/t) pushed
// through jets; away from the joints both exponentials are well-scaled, and
// at the joints the plateau/support branches take over exactly.
Jet chi_ramp(const Jet& s) {
  const Jet t = 2.0 * (1.0 - s);
  const Jet a = exp(-(1.0 / t));
  const Jet b = exp(-(1.0 / (1.0 - t)));
  return a / (a + b);
}

}  // namespace

Jet chi_of(const Jet& s) {
  const double sv = s.value();
  if (sv < 0.0) return chi_of(-s);
  if (sv <= 0.5) return Jet::constant(1.0, s.base_point(), s.order());
  if (sv >= 1.0) return Jet(s.base_point(), s.order());
  return chi_ramp(s);
}

Jet eval_y(double s, int order, int max_order) {
  return y_of(Jet::variable(s, detail::checked_order(order, max_order)));
}

Jet eval_b(double s, int order, int max_order) {
  return b_of(Jet::variable(s, detail::checked_order(order, max_order)));
}

Jet eval_chi(double s, int order, int max_order) {
  return chi_of(Jet::variable(s, detail::checked_order(order, max_order)));
}

double ode_residual(double s) {
  const Jet y = eval_y(s, 2);
  return -y.deriv(2) + value_b(s) * y.value();
}

Jet eval_scaled_y(double omega, double a, double r, int order, int max_order) {
  if (!(omega > 0.0)) throw std::domain_error("eval_scaled_y: omega must be positive");
  const Jet rj = Jet::variable(r, detail::checked_order(order, max_order));
  return y_of(omega * (rj - a));
}

Jet eval_scaled_b(double omega, double a, double r, int order, int max_order) {
  if (!(omega > 0.0)) throw std::domain_error("eval_scaled_b: omega must be positive");
  const Jet rj = Jet::variable(r, detail::checked_order(order, max_order));
  return (omega * omega) * b_of(omega * (rj - a));
}

}  // namespace logpole
