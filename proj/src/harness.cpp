#include "logpole/harness.hpp"

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <memory>

#include "logpole/norms.hpp"

namespace logpole {

const char* family_name(QuotientFamily f) {
  switch (f) {
    case QuotientFamily::strichartz: return "strichartz";
    case QuotientFamily::smoothing: return "smoothing";
    case QuotientFamily::dispersion: return "dispersion";
    case QuotientFamily::loss_strichartz: return "loss_strichartz";
    case QuotientFamily::resolvent: return "resolvent";
  }
  return "?";
}

namespace {

double mode_lp(const QuasiMode& qm, double p) {
  NormRequest req;
  req.integrand = [&](double r) { return qm.u(r, 0).value(); };
  req.p = p;
  req.interval = qm.support();
  req.d = qm.d;
  req.rel_tol = 1e-9;
  req.breakpoints = qm.peak_breakpoints();
  return lp_norm(req);
}

double residual_l2(const QuasiMode& qm) {
  const auto [left, right] = qm.ramp_bands();
  NormRequest req;
  req.integrand = [&](double r) { return qm.f(r, 0).value(); };
  req.p = 2.0;
  req.d = qm.d;
  req.rel_tol = 1e-8;
  req.interval = left;
  const double a = lp_norm(req);
  req.interval = right;
  const double b = lp_norm(req);
  return std::sqrt(a * a + b * b);
}

}  // namespace

double strichartz_quotient(Ladder& ladder, int n, double q, double q0) {
  if (!(q >= q0 && q0 >= 1.0))
    throw std::domain_error("strichartz_quotient: need q >= q0 >= 1");
  const QuasiMode qm = make_quasimode(ladder, n, 1e-10);
  if (q == q0) return 1.0;
  return mode_lp(qm, q) / mode_lp(qm, q0);
}

double dispersion_quotient(Ladder& ladder, int n, double q) {
  if (!(q >= 2.0)) throw std::domain_error("dispersion_quotient: need q >= 2");
  const QuasiMode qm = make_quasimode(ladder, n, 1e-10);
  if (q == 2.0) return 1.0;
  const double qp = q / (q - 1.0);
  return mode_lp(qm, q) / mode_lp(qm, qp);
}

double loss_strichartz_quotient(Ladder& ladder, int n, double q, double sigma) {
  if (!(sigma >= 0.0 && sigma <= 1.0))
    throw std::domain_error("loss_strichartz_quotient: need 0 <= sigma <= 1");
  // 1/2 - 1/q > sigma/d, cleared of divisions so the boundary is exact
  if (!(2.0 * q * sigma < ladder.d * (q - 2.0)))
    throw std::domain_error("loss_strichartz_quotient: need 1/2 - 1/q > sigma/d");
  const QuasiMode qm = make_quasimode(ladder, n, 1e-10);
  return mode_lp(qm, q) / (std::pow(qm.lambda, sigma) * mode_lp(qm, 2.0));
}

double resolvent_quotient(Ladder& ladder, int n) {
  const QuasiMode qm = make_quasimode(ladder, n, 1e-10);
  return qm.lambda * mode_lp(qm, 2.0) / residual_l2(qm);
}

double smoothing_quotient(Ladder& ladder, int n, double sigma) {
  if (!(sigma >= 0.0 && sigma <= 2.0))
    throw std::domain_error("smoothing_quotient: need 0 <= sigma <= 2");
  const QuasiMode qm = make_quasimode(ladder, n, 1e-10);
  if (sigma == 0.0) return 1.0;

  const int window_exp = std::max(ladder.n0, n - 1);
  const double L = 2.0 * pow10i(-window_exp);
  const double wavelength = 2.0 * M_PI / qm.lambda;
  const int ppw = 24;
  std::size_t N = 1;
  while (static_cast<double>(N) < L / wavelength * ppw) N <<= 1;
  if (N > (1u << 26))
    throw ConfigError("smoothing_quotient: transform size beyond limit");
  const double h = L / static_cast<double>(N);
  if (wavelength / h < 20.0)
    throw ConfigError("smoothing_quotient: fewer than 20 points per wavelength");

  std::vector<std::complex<double>> buf(N, 0.0);
  const Interval supp = qm.support();
  const double half_exp = 0.5 * (qm.d - 1);
  for (std::size_t k = 0; k < N; ++k) {
    const double r = static_cast<double>(k) * h;
    if (r <= supp.lo || r >= supp.hi) continue;
    buf[k] = std::pow(r, half_exp) * qm.u(r, 0).value();  // reduced profile
  }
  fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(N),
                                    reinterpret_cast<fftw_complex*>(buf.data()),
                                    reinterpret_cast<fftw_complex*>(buf.data()),
                                    FFTW_FORWARD, FFTW_ESTIMATE);
  fftw_execute(plan);
  fftw_destroy_plan(plan);

  double weighted = 0.0, plain = 0.0;
  for (std::size_t k = 0; k < N; ++k) {
    const double idx = (k <= N / 2) ? static_cast<double>(k)
                                    : static_cast<double>(k) - static_cast<double>(N);
    const double xi = 2.0 * M_PI * idx / L;
    const double mag2 = std::norm(buf[k]);
    plain += mag2;
    weighted += std::pow(1.0 + xi * xi, sigma) * mag2;
  }
  return std::sqrt(weighted / plain);
}

double smoothing_quotient_by_quadrature(Ladder& ladder, int n) {
  const QuasiMode qm = make_quasimode(ladder, n, 1e-10);
  NormRequest l2;
  l2.integrand = [&](double r) { return qm.u(r, 0).value(); };
  l2.p = 2.0;
  l2.interval = qm.support();
  l2.d = qm.d;
  l2.breakpoints = qm.peak_breakpoints();
  const double u_l2 = lp_norm(l2);
  NormRequest grad = l2;
  grad.integrand = [&](double r) { return qm.u(r, 1).deriv(1); };
  const double du_l2 = lp_norm(grad);
  return std::sqrt(u_l2 * u_l2 + du_l2 * du_l2) / u_l2;
}

QuotientSeries build_series(Ladder& ladder, QuotientFamily family,
                            const QuotientParams& params, int level_lo, int level_hi) {
  QuotientSeries series;
  series.family = family;
  series.params = params;
  for (int n = level_lo; n <= level_hi; ++n) {
    QuotientEntry e;
    e.n = n;
    e.lambda = ladder.at_level(n).lambda;
    switch (family) {
      case QuotientFamily::strichartz:
        e.quotient = strichartz_quotient(ladder, n, params.q, params.q0);
        break;
      case QuotientFamily::smoothing:
        e.quotient = smoothing_quotient(ladder, n, params.sigma);
        break;
      case QuotientFamily::dispersion:
        e.quotient = dispersion_quotient(ladder, n, params.q);
        break;
      case QuotientFamily::loss_strichartz:
        e.quotient = loss_strichartz_quotient(ladder, n, params.q, params.sigma);
        break;
      case QuotientFamily::resolvent:
        e.quotient = resolvent_quotient(ladder, n);
        break;
    }
    series.entries.push_back(e);
  }
  series.regression = fit_loglog(series.entries);
  return series;
}

Regression fit_loglog(const std::vector<QuotientEntry>& entries) {
  Regression reg;
  if (entries.size() < 4) return reg;
  const auto x_of = [](const QuotientEntry& e) {
    return std::log(e.lambda / std::log(e.lambda));
  };
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (const auto& e : entries) {
    const double x = x_of(e), y = std::log(e.quotient);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double m = static_cast<double>(entries.size());
  reg.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  reg.intercept = (sy - reg.slope * sx) / m;
  for (const auto& e : entries) {
    const double resid = std::log(e.quotient) - (reg.slope * x_of(e) + reg.intercept);
    reg.max_residual = std::max(reg.max_residual, std::fabs(resid));
  }
  reg.valid = true;
  return reg;
}

}  // namespace logpole
