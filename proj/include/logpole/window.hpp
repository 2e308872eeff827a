#pragma once

#include <array>
#include <cmath>

namespace logpole {

/// Cached powers of ten. Every interval comparison and every cutoff
/// argument goes through this one table, so a radius classified as inside
/// a window is always evaluated with the same boundary values.
inline double pow10i(int k) {
  static const auto table = [] {
    std::array<double, 161> t{};
    for (int i = -80; i <= 80; ++i) t[static_cast<std::size_t>(i + 80)] = std::pow(10.0, i);
    return t;
  }();
  return table[static_cast<std::size_t>(k + 80)];
}

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double r) const { return r >= lo && r <= hi; }
  double length() const { return hi - lo; }
};

/// Per-level dyadic geometry: psi_n = chi(10^n r) - chi(10^{n+1} r) and
/// chi_n = chi(10^{n+1}(r - 3/10^{n+1})).
struct LevelWindow {
  int n = 0;

  Interval psi_support() const { return {5.0 * pow10i(-(n + 2)), pow10i(-n)}; }
  Interval psi_plateau() const { return {pow10i(-(n + 1)), 5.0 * pow10i(-(n + 1))}; }
  Interval chi_support() const { return {2.0 * pow10i(-(n + 1)), 4.0 * pow10i(-(n + 1))}; }
  Interval chi_plateau() const { return {25.0 * pow10i(-(n + 2)), 35.0 * pow10i(-(n + 2))}; }
  double center() const { return 3.0 * pow10i(-(n + 1)); }
};

}  // namespace logpole
