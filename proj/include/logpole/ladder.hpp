#pragma once

#include <optional>
#include <vector>

#include "logpole/errors.hpp"

namespace logpole {

enum class ProfileVariant { standard, epsilon };

/// The growth profile q tying dyadic spatial scales to frequencies:
///   standard:  q(lambda) = lambda / (M log lambda)
///   epsilon:   q(lambda) = lambda / (log lambda)^{1+eps}
struct FrequencyProfile {
  double M = 160.0;
  ProfileVariant variant = ProfileVariant::standard;
  double epsilon = 1.0;  // used by the epsilon variant only

  double domain_min() const;         // q is validated for lambda above this
  double q(double lambda) const;
  double dq(double lambda) const;
  /// q(lambda) log^{1+eps'} q(lambda) normalized by its limit; tends to 1.
  /// (eps' = 0 and the limit is lambda/M for the standard variant.)
  double equiv_ratio(double lambda) const;
};

double q_of_lambda(const FrequencyProfile& profile, double lambda);
double check_equiv_q(const FrequencyProfile& profile, double lambda);

/// Solve 10^n = q(lambda_n) by damped Newton with an analytic derivative;
/// falls back to bisection if an iterate leaves the bracket. Converges to
/// |q(lambda)-10^n| <= 1e-12 * 10^n.
double lambda_of_level(const FrequencyProfile& profile, int n);

/// Plain bisection on the same equation; kept separate so the two solvers
/// can be compared digit-for-digit.
double lambda_of_level_bisect(const FrequencyProfile& profile, int n,
                              double lo, double hi);

/// M = 20 (d + 2 + N) + 20: one unit of exponent margin beyond the
/// inequality d + 2 - M/20 <= -N.
double choose_M(int d, int N);

/// Smallest level at which (a) lambda_n > e^2, (b) the equiv-q ratio is
/// within [1/2, 2] of its limit, and (c) the assembled potential is
/// nonnegative on the level's window. Scans n = 1..60.
int choose_n0(const FrequencyProfile& profile, int d);

struct LadderEntry {
  int n = 0;
  double lambda = 0.0;
  std::optional<double> alpha;   // filled by quasimode calibration
  bool beyond_desk_scale = false;  // lambda past ~1e15; evaluated but flagged
};

/// Immutable after construction (alpha aside); safe for concurrent reads.
struct Ladder {
  FrequencyProfile profile;
  int d = 3;
  int N = 2;
  int n0 = 0;
  std::vector<LadderEntry> entries;

  const LadderEntry& at_level(int n) const;
  LadderEntry& at_level(int n);
  bool has_level(int n) const;
  int last_level() const { return n0 + static_cast<int>(entries.size()) - 1; }
};

inline constexpr int kDefaultLadderSpan = 13;  // n0 .. n0+12

Ladder make_ladder(const FrequencyProfile& profile, int d, int N,
                   std::optional<int> n0 = std::nullopt,
                   int span = kDefaultLadderSpan);

}  // namespace logpole
