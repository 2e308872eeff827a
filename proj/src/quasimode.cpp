#include "logpole/quasimode.hpp"

#include <algorithm>
#include <cmath>

#include "logpole/norms.hpp"
#include "logpole/potential.hpp"
#include "logpole/quadrature.hpp"

namespace logpole {

namespace {

Jet radial_power(double r, int order, int d) {
  // r^{-(d-1)/2}; trivial for d = 1, reciprocal for d = 3
  const Jet rj = Jet::variable(r, order);
  if (d == 1) return Jet::constant(1.0, r, order);
  if (d == 3) return 1.0 / rj;
  return pow(rj, -0.5 * (d - 1));
}

}  // namespace

Jet QuasiMode::y_level(double r, int order) const {
  return eval_scaled_y(omega(), window.center(), r, order, Jet::kCapacity);
}

Jet QuasiMode::b_level(double r, int order) const {
  return eval_scaled_b(omega(), window.center(), r, order, Jet::kCapacity);
}

Jet QuasiMode::v(double r, int order) const {
  const Interval supp = window.chi_support();
  if (r < supp.lo || r > supp.hi) return Jet(r, order);
  const Jet rj = Jet::variable(r, order);
  const Jet chi_n = chi_of(pow10i(n + 1) * (rj - window.center()));
  return alpha * (y_level(r, order) * chi_n);
}

Jet QuasiMode::u(double r, int order) const {
  if (!(r > 0.0)) throw std::domain_error("u evaluated at r <= 0");
  if (d == 1) return v(r, order);
  return radial_power(r, order, d) * v(r, order);
}

Jet QuasiMode::g(double r, int order) const {
  const Interval supp = window.chi_support();
  if (r < supp.lo || r > supp.hi) return Jet(r, order);
  const Jet rj = Jet::variable(r, order + 2);
  const Jet chi_n = chi_of(pow10i(n + 1) * (rj - window.center()));
  const Jet y_n = y_level(r, order + 1);
  return -alpha * (2.0 * (y_n.derivative_jet() * chi_n.derivative_jet()) +
                   y_n.truncated(order) * chi_n.derivative_jet().derivative_jet());
}

Jet QuasiMode::f(double r, int order) const {
  if (!(r > 0.0)) throw std::domain_error("f evaluated at r <= 0");
  if (d == 1) return g(r, order);
  return radial_power(r, order, d) * g(r, order);
}

std::vector<double> QuasiMode::peak_breakpoints() const {
  const Interval supp = window.chi_support();
  const Interval plateau = window.chi_plateau();
  const double c = window.center();
  std::vector<double> pts{plateau.lo, plateau.hi};
  for (double k : {1.0, 3.0, 10.0, 30.0, 100.0, 300.0}) {
    pts.push_back(c - k / lambda);
    pts.push_back(c + k / lambda);
  }
  std::erase_if(pts, [&](double x) { return x <= supp.lo || x >= supp.hi; });
  std::sort(pts.begin(), pts.end());
  return pts;
}

std::pair<Interval, Interval> QuasiMode::ramp_bands() const {
  const Interval supp = window.chi_support();
  const Interval plateau = window.chi_plateau();
  return {Interval{supp.lo, plateau.lo}, Interval{plateau.hi, supp.hi}};
}

double calibrate_alpha(const Ladder& ladder, int n, double rel_tol) {
  QuasiMode qm;
  qm.n = n;
  qm.d = ladder.d;
  qm.lambda = ladder.at_level(n).lambda;
  qm.alpha = 1.0;
  qm.window = LevelWindow{n};
  const Interval supp = qm.support();
  std::vector<double> pts = qm.peak_breakpoints();
  pts.insert(pts.begin(), supp.lo);
  pts.push_back(supp.hi);
  const int d = qm.d;
  const double mass =
      sphere_factor(d) *
      integrate_split([&](double r) { return qm.u_value(r) * std::pow(r, d - 1); }, pts,
                      rel_tol);
  if (!(mass > 0.0)) throw NumericError("calibrate_alpha: vanishing L1 mass");
  return 1.0 / mass;
}

QuasiMode make_quasimode(Ladder& ladder, int n, double rel_tol) {
  LadderEntry& entry = ladder.at_level(n);
  if (!entry.alpha) entry.alpha = calibrate_alpha(ladder, n, rel_tol);
  return make_quasimode(static_cast<const Ladder&>(ladder), n);
}

QuasiMode make_quasimode(const Ladder& ladder, int n) {
  const LadderEntry& entry = ladder.at_level(n);
  if (!entry.alpha) throw ConfigError("quasimode level not calibrated");
  QuasiMode qm;
  qm.n = n;
  qm.d = ladder.d;
  qm.lambda = entry.lambda;
  qm.alpha = *entry.alpha;
  qm.window = LevelWindow{n};
  return qm;
}

double sup_derivative_norm(const QuasiMode& qm, int j) {
  if (j > kDefaultMaxJetOrder - 1)
    throw ConfigError("sup_derivative_norm: derivative order too high");
  const auto [left, right] = qm.ramp_bands();
  double best = 0.0;
  for (const Interval& band : {left, right}) {
    const int points = static_cast<int>(std::ceil(band.length() * 20.0 * qm.lambda));
    const double s = scan_sup([&](double r) { return qm.f(r, j).deriv(j); },
                              band.lo, band.hi, points);
    best = std::max(best, s);
  }
  return best;
}

std::pair<double, double> graph_norm_P(const PotentialModel& model, const QuasiMode& qm,
                                       double rel_tol) {
  const auto vfun = [&](double r) { return model.V_value(r); };
  const auto [band_l, band_r] = qm.ramp_bands();
  const double f_norm =
      std::sqrt(std::pow(graph_norm([&](double r) { return qm.f(r, 1); }, vfun, band_l,
                                    qm.d, rel_tol),
                         2) +
                std::pow(graph_norm([&](double r) { return qm.f(r, 1); }, vfun, band_r,
                                    qm.d, rel_tol),
                         2));
  const double u_norm = graph_norm([&](double r) { return qm.u(r, 1); }, vfun,
                                   qm.support(), qm.d, rel_tol, qm.peak_breakpoints());
  return {f_norm, u_norm};
}

double sup_u(const QuasiMode& qm) {
  const Interval supp = qm.support();
  // the maximum sits in the exponential peak; scan a window around the
  // center wide enough to also cover the r^{-(d-1)/2} drift
  const double c = qm.window.center();
  const double w = std::min(200.0 / qm.lambda, 0.49 * (supp.hi - supp.lo));
  const double inner = scan_sup([&](double r) { return qm.u(r, 0).value(); },
                                c - w, c + w, 4000);
  const double coarse = scan_sup([&](double r) { return qm.u(r, 0).value(); },
                                 supp.lo, supp.hi, 4000);
  return std::max(inner, coarse);
}

}  // namespace logpole
