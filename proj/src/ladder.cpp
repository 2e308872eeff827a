#include "logpole/ladder.hpp"

#include <cmath>
#include <sstream>

#include "logpole/potential.hpp"

namespace logpole {

double FrequencyProfile::domain_min() const {
  // strict monotonicity of q needs log lambda > 1 (standard) resp. > 1+eps
  return variant == ProfileVariant::standard ? std::exp(1.0) : 1.0;
}

double FrequencyProfile::q(double lambda) const {
  if (!(lambda > domain_min()))
    throw std::domain_error("q(lambda): lambda below validated domain");
  const double L = std::log(lambda);
  if (variant == ProfileVariant::standard) return lambda / (M * L);
  return lambda / std::pow(L, 1.0 + epsilon);
}

double FrequencyProfile::dq(double lambda) const {
  const double L = std::log(lambda);
  if (variant == ProfileVariant::standard) return (L - 1.0) / (M * L * L);
  return (L - (1.0 + epsilon)) / std::pow(L, 2.0 + epsilon);
}

double FrequencyProfile::equiv_ratio(double lambda) const {
  const double L = std::log(lambda);
  if (variant == ProfileVariant::standard) {
    // q log q / (lambda/M) = 1 - (log M + log log lambda)/log lambda, exactly
    return 1.0 - (std::log(M) + std::log(L)) / L;
  }
  // q (log q)^{1+eps} / lambda = ((L - (1+eps) log L)/L)^{1+eps}, exactly
  const double base = (L - (1.0 + epsilon) * std::log(L)) / L;
  return std::pow(base, 1.0 + epsilon);
}

double q_of_lambda(const FrequencyProfile& profile, double lambda) {
  return profile.q(lambda);
}

double check_equiv_q(const FrequencyProfile& profile, double lambda) {
  return profile.equiv_ratio(lambda);
}

namespace {

constexpr double kLadderRelTol = 1e-12;

double initial_guess(const FrequencyProfile& profile, int n) {
  const double ln10 = std::log(10.0);
  if (profile.variant == ProfileVariant::standard) {
    const double M = profile.M;
    return M * std::pow(10.0, n) * (n * ln10 + std::log(M * std::max(1, n) * ln10));
  }
  // lambda = 10^n L^{1+eps}; iterate L = n ln10 + (1+eps) ln L a few times
  double L = std::max(2.0, n * ln10);
  for (int i = 0; i < 8; ++i) L = n * ln10 + (1.0 + profile.epsilon) * std::log(L);
  return std::pow(10.0, n) * std::pow(L, 1.0 + profile.epsilon);
}

}  // namespace

double lambda_of_level(const FrequencyProfile& profile, int n) {
  if (n < 1) throw ConfigError("lambda_of_level: n must be >= 1");
  const double target = std::pow(10.0, n);
  // bracket: q(lo) < target by construction of the guess region
  double lo = std::max(profile.domain_min() * 2.0, target);
  double hi = initial_guess(profile, n) * 4.0;
  while (profile.q(hi) < target) hi *= 4.0;
  if (profile.q(lo) > target) lo = profile.domain_min() * 1.0000001;

  double x = initial_guess(profile, n);
  if (x <= lo || x >= hi) x = 0.5 * (lo + hi);
  for (int it = 0; it < 50; ++it) {
    const double fx = profile.q(x) - target;
    if (std::abs(fx) <= kLadderRelTol * target) return x;
    if (fx > 0.0) hi = std::min(hi, x);
    else lo = std::max(lo, x);
    const double dfx = profile.dq(x);
    double next = x - fx / dfx;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);  // damping by bracket
    x = next;
  }
  const double fx = profile.q(x) - target;
  if (std::abs(fx) <= kLadderRelTol * target) return x;
  std::ostringstream msg;
  msg << "lambda_of_level: no convergence at n=" << n << ", last lambda=" << x
      << ", residual=" << fx << " (target " << target << ")";
  throw NumericError(msg.str());
}

double lambda_of_level_bisect(const FrequencyProfile& profile, int n,
                              double lo, double hi) {
  const double target = std::pow(10.0, n);
  if (profile.q(lo) > target || profile.q(hi) < target)
    throw ConfigError("lambda_of_level_bisect: bracket does not straddle the root");
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (profile.q(mid) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double choose_M(int d, int N) {
  if (d < 1 || N < 0) throw ConfigError("choose_M: need d >= 1, N >= 0");
  return 20.0 * (d + 2 + N) + 20.0;
}

int choose_n0(const FrequencyProfile& profile, int d) {
  for (int n = 1; n <= 60; ++n) {
    const double lambda = lambda_of_level(profile, n);
    if (!(lambda > std::exp(2.0))) continue;                    // (a)
    const double ratio = profile.equiv_ratio(lambda);
    if (!(ratio >= 0.5 && ratio <= 2.0)) continue;              // (b)
    if (!potential_nonnegative_on_first_windows(profile, d, n)) continue;  // (c)
    return n;
  }
  throw ConfigError("choose_n0: no admissible level at n <= 60");
}

const LadderEntry& Ladder::at_level(int n) const {
  if (!has_level(n)) throw ConfigError("ladder has no entry for level " + std::to_string(n));
  return entries[static_cast<std::size_t>(n - n0)];
}

LadderEntry& Ladder::at_level(int n) {
  if (!has_level(n)) throw ConfigError("ladder has no entry for level " + std::to_string(n));
  return entries[static_cast<std::size_t>(n - n0)];
}

bool Ladder::has_level(int n) const {
  return n >= n0 && n - n0 < static_cast<int>(entries.size());
}

Ladder make_ladder(const FrequencyProfile& profile, int d, int N,
                   std::optional<int> n0, int span) {
  if (span < 1) throw ConfigError("make_ladder: span must be >= 1");
  Ladder ladder;
  ladder.profile = profile;
  ladder.d = d;
  ladder.N = N;
  ladder.n0 = n0 ? *n0 : choose_n0(profile, d);
  if (ladder.n0 < 1) throw ConfigError("make_ladder: n0 must be >= 1");
  ladder.entries.reserve(static_cast<std::size_t>(span));
  for (int n = ladder.n0; n < ladder.n0 + span; ++n) {
    LadderEntry e;
    e.n = n;
    e.lambda = lambda_of_level(profile, n);
    e.beyond_desk_scale = e.lambda > 1e15;
    ladder.entries.push_back(e);
  }
  return ladder;
}

}  // namespace logpole
