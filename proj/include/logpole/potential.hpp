#pragma once

#include <vector>

#include "logpole/jet.hpp"
#include "logpole/kernel.hpp"
#include "logpole/ladder.hpp"
#include "logpole/window.hpp"

namespace logpole {

Jet psi(int n, double r, int order);
Jet chi_window(int n, double r, int order);

/// The assembled radial potential. Immutable after construction; all
/// evaluators are pure.
///
/// W(r) = sum_n psi_n(r) (b_n(r) + lambda_n^2) over the stored levels, and
/// V(r) = W(r) - chi(10^{n0} r) (d-1)(d-3)/(4 r^2). The cutoff on the
/// centrifugal correction keeps V compactly supported and nonnegative for
/// every d while leaving the eigenvalue equation intact on each quasimode
/// support, where chi(10^{n0} r) = 1.
struct PotentialModel {
  Ladder ladder;
  int d = 3;
  int n0 = 0;
  double centrifugal_coefficient = 0.0;  // (d-1)(d-3)/4, divides r^2

  /// Levels whose psi support contains r (at most two).
  std::vector<int> active_levels(double r) const;

  Jet W(double r, int order) const;
  Jet V(double r, int order) const;

  /// Radius below which the stored ladder no longer covers the sum.
  double coverage_floor() const;
  /// V vanishes at and beyond this radius.
  double support_radius() const { return pow10i(-n0); }

  template <class Real>
  Real W_value(Real r) const;
  template <class Real>
  Real V_value(Real r) const;
};

PotentialModel make_potential(const Ladder& ladder);

/// Positivity probe used when choosing n0: samples V over the first three
/// windows of a candidate model. Trivially true when (d-1)(d-3) <= 0.
bool potential_nonnegative_on_first_windows(const FrequencyProfile& profile,
                                            int d, int candidate_n0);

struct SandwichLevelStats {
  int n = 0;
  double min = 0.0;
  double max = 0.0;
  double ratio() const { return max / min; }
};

/// Measured constants of the two-sided bound V ~ |log r|^2 / r^2: per-level
/// min and max of V r^2 / log^2 r over supp psi_n (the outermost level is
/// capped at the radius where the partition of unity is still complete).
struct SandwichReport {
  std::vector<SandwichLevelStats> levels;
  double global_min = 0.0;
  double global_max = 0.0;
  double stability = 0.0;  // max over levels of ratio / min over levels of ratio
  bool pass = false;       // positive, finite, stability within factor 4
};

SandwichReport sandwich_report(const PotentialModel& model, int level_lo, int level_hi,
                               int samples_per_decade = 512);

/// Per-decade increments of int V^p r^{d-1} dr, outermost decade first.
struct IntegrabilityReport {
  double p = 0.0;
  std::vector<double> increments;
  double total = 0.0;
};

IntegrabilityReport integrability_report(const PotentialModel& model, double p, int decades);

// ---- template bodies ----

template <class Real>
Real PotentialModel::W_value(Real r) const {
  Real acc = Real(0);
  for (int n : active_levels(static_cast<double>(r))) {
    const LevelWindow w{n};
    const Real lam = Real(ladder.at_level(n).lambda);
    const Real x = (lam / 2) * (r - Real(w.center()));
    const Real b_n = (lam * lam / 4) * value_b(x);
    const Real psi_n =
        value_chi(Real(pow10i(n)) * r) - value_chi(Real(pow10i(n + 1)) * r);
    acc += psi_n * (b_n + lam * lam);
  }
  return acc;
}

template <class Real>
Real PotentialModel::V_value(Real r) const {
  Real acc = W_value(r);
  if (centrifugal_coefficient != 0.0) {
    const Real cut = value_chi(Real(pow10i(n0)) * r);
    acc -= cut * Real(centrifugal_coefficient) / (r * r);
  }
  return acc;
}

}  // namespace logpole
