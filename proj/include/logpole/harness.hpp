#pragma once

#include <string>
#include <vector>

#include "logpole/ladder.hpp"
#include "logpole/quasimode.hpp"

namespace logpole {

enum class QuotientFamily { strichartz, smoothing, dispersion, loss_strichartz, resolvent };

const char* family_name(QuotientFamily f);

struct QuotientParams {
  double q = 0.0;
  double q0 = 0.0;
  double sigma = 0.0;
};

struct QuotientEntry {
  int n = 0;
  double lambda = 0.0;
  double quotient = 0.0;
};

struct Regression {
  double slope = 0.0;
  double intercept = 0.0;
  double max_residual = 0.0;
  bool valid = false;  // needs at least 4 entries
};

/// One failure-quotient family along the ladder with its log-log fit
/// against x = log(lambda_n / log lambda_n).
struct QuotientSeries {
  QuotientFamily family = QuotientFamily::strichartz;
  QuotientParams params;
  std::vector<QuotientEntry> entries;
  Regression regression;
};

// Per-level quotients. All L^p norms are genuine R^d norms (sphere factor
// included); every quotient is a pure function of the calibrated mode.
double strichartz_quotient(Ladder& ladder, int n, double q, double q0);
double dispersion_quotient(Ladder& ladder, int n, double q);
double loss_strichartz_quotient(Ladder& ladder, int n, double q, double sigma);
double resolvent_quotient(Ladder& ladder, int n);

/// ||u_n||_{H^sigma} / ||u_n||_{L^2} through the discrete Fourier transform
/// of the reduced radial profile r^{(d-1)/2} u_n, sampled on a uniform grid
/// over a zero-extended window around 0 and weighted by (1+xi^2)^sigma.
/// The window is [0, 2*10^{-max(n0, n-1)}]: the quantity represented does
/// not depend on the window once it contains the support, so deeper levels
/// shrink it to keep the transform size bounded.
double smoothing_quotient(Ladder& ladder, int n, double sigma);

/// Same quotient with quadrature and jets instead of the DFT (sigma = 1):
/// sqrt(||u||^2 + ||grad u||^2) / ||u||. Cross-checks the spectral path.
double smoothing_quotient_by_quadrature(Ladder& ladder, int n);

QuotientSeries build_series(Ladder& ladder, QuotientFamily family,
                            const QuotientParams& params, int level_lo, int level_hi);

Regression fit_loglog(const std::vector<QuotientEntry>& entries);

}  // namespace logpole
