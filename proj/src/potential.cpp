#include "logpole/potential.hpp"

#include <algorithm>
#include <cmath>

#include "logpole/quadrature.hpp"

namespace logpole {

Jet psi(int n, double r, int order) {
  const Jet rj = Jet::variable(r, order);
  return chi_of(pow10i(n) * rj) - chi_of(pow10i(n + 1) * rj);
}

Jet chi_window(int n, double r, int order) {
  const LevelWindow w{n};
  const Jet rj = Jet::variable(r, order);
  return chi_of(pow10i(n + 1) * (rj - w.center()));
}

std::vector<int> PotentialModel::active_levels(double r) const {
  std::vector<int> out;
  if (!(r > 0.0)) return out;
  // psi supports of consecutive levels overlap pairwise; candidates sit
  // within one step of -log10(r)
  const int guess = static_cast<int>(std::floor(-std::log10(r)));
  for (int n = guess - 2; n <= guess + 2; ++n) {
    if (!ladder.has_level(n)) continue;
    if (LevelWindow{n}.psi_support().contains(r)) out.push_back(n);
  }
  return out;
}

double PotentialModel::coverage_floor() const {
  return 5.0 * pow10i(-(ladder.last_level() + 2));
}

namespace {

void check_model_domain(const PotentialModel& m, double r) {
  if (r == 0.0) throw std::domain_error("potential evaluated at the pole r = 0");
  if (r < 0.0) throw std::domain_error("potential evaluated at negative radius");
  if (r < m.coverage_floor())
    throw ConfigError("radius below ladder coverage; extend the ladder span");
}

}  // namespace

Jet PotentialModel::W(double r, int order) const {
  check_model_domain(*this, r);
  Jet acc(r, order);
  for (int n : active_levels(r)) {
    const LevelWindow w{n};
    const double lam = ladder.at_level(n).lambda;
    const Jet b_n = eval_scaled_b(lam / 2.0, w.center(), r, order, Jet::kCapacity);
    acc += psi(n, r, order) * (b_n + lam * lam);
  }
  return acc;
}

Jet PotentialModel::V(double r, int order) const {
  Jet acc = W(r, order);
  if (centrifugal_coefficient != 0.0) {
    const Jet rj = Jet::variable(r, order);
    const Jet cut = chi_of(pow10i(n0) * rj);
    acc -= cut * (centrifugal_coefficient / (rj * rj));
  }
  return acc;
}

PotentialModel make_potential(const Ladder& ladder) {
  PotentialModel m;
  m.ladder = ladder;
  m.d = ladder.d;
  m.n0 = ladder.n0;
  m.centrifugal_coefficient = (ladder.d - 1) * (ladder.d - 3) / 4.0;
  return m;
}

bool potential_nonnegative_on_first_windows(const FrequencyProfile& profile,
                                            int d, int candidate_n0) {
  if ((d - 1) * (d - 3) <= 0) return true;  // V >= W >= 0
  const Ladder probe = make_ladder(profile, d, 0, candidate_n0, 6);
  const PotentialModel model = make_potential(probe);
  const double lo = 5.0 * pow10i(-(candidate_n0 + 3));
  const double hi = pow10i(-candidate_n0);
  const int samples = 512 * 3;
  const double step = std::log(hi / lo) / samples;
  for (int i = 0; i <= samples; ++i) {
    const double r = lo * std::exp(i * step);
    if (model.V_value(r) < 0.0) return false;
  }
  return true;
}

SandwichReport sandwich_report(const PotentialModel& model, int level_lo, int level_hi,
                               int samples_per_decade) {
  SandwichReport rep;
  rep.global_min = std::numeric_limits<double>::infinity();
  rep.global_max = 0.0;
  // restrict to radii where the partition of unity sums to 1
  const double r_cap = 0.5 * pow10i(-model.n0);
  for (int n = level_lo; n <= level_hi; ++n) {
    const Interval supp = LevelWindow{n}.psi_support();
    const double lo = supp.lo;
    const double hi = std::min(supp.hi, r_cap);
    SandwichLevelStats st;
    st.n = n;
    st.min = std::numeric_limits<double>::infinity();
    st.max = 0.0;
    const int samples =
        static_cast<int>(std::ceil(samples_per_decade * std::log10(hi / lo)));
    const double step = std::log(hi / lo) / samples;
    for (int i = 0; i <= samples; ++i) {
      const double r = lo * std::exp(i * step);
      const double logr = std::log(r);
      const double s = model.V_value(r) * r * r / (logr * logr);
      st.min = std::min(st.min, s);
      st.max = std::max(st.max, s);
    }
    rep.global_min = std::min(rep.global_min, st.min);
    rep.global_max = std::max(rep.global_max, st.max);
    rep.levels.push_back(st);
  }
  double ratio_min = std::numeric_limits<double>::infinity();
  double ratio_max = 0.0;
  for (const auto& st : rep.levels) {
    ratio_min = std::min(ratio_min, st.ratio());
    ratio_max = std::max(ratio_max, st.ratio());
  }
  rep.stability = ratio_max / ratio_min;
  rep.pass = rep.global_min > 0.0 && std::isfinite(rep.global_max) && rep.stability <= 4.0;
  return rep;
}

IntegrabilityReport integrability_report(const PotentialModel& model, double p, int decades) {
  IntegrabilityReport rep;
  rep.p = p;
  const int d = model.d;
  for (int k = 0; k < decades; ++k) {
    const int m = model.n0 + k;
    const double lo = pow10i(-(m + 1));
    const double hi = pow10i(-m);
    const double inc = integrate(
        [&](double r) {
          return std::pow(model.V_value(r), p) * std::pow(r, d - 1);
        },
        lo, hi, 1e-8);
    rep.increments.push_back(inc);
    rep.total += inc;
  }
  return rep;
}

}  // namespace logpole
