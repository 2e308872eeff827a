#pragma once

#include <utility>
#include <vector>

#include "logpole/kernel.hpp"
#include "logpole/ladder.hpp"
#include "logpole/window.hpp"

namespace logpole {

/// One concentrating mode: v_n = alpha_n y_n chi_n in the reduced picture,
/// u_n = r^{-(d-1)/2} v_n in R^d. The residuals come in closed form,
///   g_n = -alpha_n (2 y_n' chi_n' + y_n chi_n''),   f_n = r^{-(d-1)/2} g_n,
/// supported in the two ramp bands of chi_n and identically zero on the
/// plateau, where -v_n'' + (b_n + lambda_n^2) v_n - lambda_n^2 v_n = 0 holds
/// exactly through the well equation.
struct QuasiMode {
  int n = 0;
  int d = 3;
  double lambda = 0.0;
  double alpha = 1.0;
  LevelWindow window;

  Interval support() const { return window.chi_support(); }
  double omega() const { return lambda / 2.0; }

  Jet y_level(double r, int order) const;
  Jet b_level(double r, int order) const;
  Jet v(double r, int order) const;
  Jet u(double r, int order) const;
  Jet g(double r, int order) const;
  Jet f(double r, int order) const;

  template <class Real>
  Real u_value(Real r) const;

  /// Interior breakpoints resolving the exponential peak at the center and
  /// the ramp bands; seeds quadrature panels.
  std::vector<double> peak_breakpoints() const;

  /// Ramp bands carrying g_n and f_n.
  std::pair<Interval, Interval> ramp_bands() const;
};

/// Normalization making ||u_n||_{L^1(R^d)} = 1; pure and idempotent.
double calibrate_alpha(const Ladder& ladder, int n, double rel_tol = 1e-10);

/// Build the mode for level n, calibrating (and caching) alpha on the
/// ladder entry under single-writer discipline.
QuasiMode make_quasimode(Ladder& ladder, int n, double rel_tol = 1e-10);

/// Read-only variant: uses the cached alpha, which must be present.
QuasiMode make_quasimode(const Ladder& ladder, int n);

/// Scanned sup over the ramp bands of |d^j f_n / dr^j|; grid spacing at
/// most 1/(20 lambda), three local refinement rounds.
double sup_derivative_norm(const QuasiMode& qm, int j);

/// Scanned sup of |u_n| over its support.
double sup_u(const QuasiMode& qm);

struct PotentialModel;

/// Graph norms (||f_n||, ||u_n||) under the square root of the operator:
/// ||g||^2 = int |grad g|^2 + (1 + V)|g|^2 over R^d.
std::pair<double, double> graph_norm_P(const PotentialModel& model, const QuasiMode& qm,
                                       double rel_tol = 1e-8);

// ---- template body ----

template <class Real>
Real QuasiMode::u_value(Real r) const {
  const Interval supp = window.chi_support();
  const double rd = static_cast<double>(r);
  if (!(rd > 0)) throw std::domain_error("u_value at r <= 0");
  if (rd < supp.lo || rd > supp.hi) return Real(0);
  const Real c = Real(window.center());
  const Real yv = value_y(Real(omega()) * (r - c));
  const Real cv = value_chi(Real(pow10i(n + 1)) * (r - c));
  Real out = Real(alpha) * yv * cv;
  if (d != 1)
    out *= num<Real>::pow(r, Real(-(d - 1)) / Real(2));
  return out;
}

}  // namespace logpole
