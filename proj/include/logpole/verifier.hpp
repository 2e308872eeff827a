#pragma once

#include <string>
#include <vector>

#include "logpole/potential.hpp"
#include "logpole/quasimode.hpp"

namespace logpole {

/// Outcome of one independent cross-check. The pass flag is a pure
/// function of the measured values and the tolerance, and every report
/// names the oracle that produced its numbers.
struct VerificationReport {
  std::string check;
  int level_lo = 0;
  int level_hi = 0;
  std::vector<double> values;
  double tolerance = 0.0;
  bool pass = false;
  std::string oracle;

  std::string to_json() const;
};

/// Evaluates -u'' - (d-1)/r u' + V u - lambda^2 u by 6th-order central
/// differences of u_n in 128-bit arithmetic (step 1e-3/lambda) at `points`
/// radii across the support, and compares with the closed-form f_n.
/// Passes when the worst deviation is at most
///   1e-5 * max(sup|f_n|, 1e-9 lambda^2 sup|u_n|).
VerificationReport fd_residual_check(const PotentialModel& model, const QuasiMode& qm,
                                     int points = 200, double step_factor = 1e-3);

/// Same oracle at a single radius and explicit step; exposed so the
/// 6th-order convergence of the stencil can be observed directly.
double fd_equation_deviation(const PotentialModel& model, const QuasiMode& qm, double r,
                             double h);

/// Measured constants of the two quasimode estimates: for j = 0..2,
///   R1(n,j) = sup|d^j f_n| / (alpha_n lambda^{1+j} 10^{n(d+1)/2} e^{-lambda/(20 10^n)}),
/// and R2(n) = ||u_n||_{L1} lambda 10^{n(d-1)/2} / alpha_n. Passes when
/// every series is positive and stable within a factor 4 across the range.
/// Exponentials are assembled in log space.
VerificationReport mode_constants_check(Ladder& ladder, int level_lo, int level_hi);

/// Decay of the residual family: for each j, the sequence
/// sup|d^j f_n| lambda^{N-j} must be positive, bounded, and non-increasing
/// from the second level on. Values are reported per level, j-major.
VerificationReport residual_decay_check(Ladder& ladder, int N, int j_lo, int j_hi,
                                       int level_lo, int level_hi);

}  // namespace logpole
