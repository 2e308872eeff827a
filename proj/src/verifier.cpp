#include "logpole/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "json.hpp"

namespace logpole {

std::string VerificationReport::to_json() const {
  nlohmann::json j;
  j["check"] = check;
  j["levels"] = {level_lo, level_hi};
  j["values"] = values;
  j["tolerance"] = tolerance;
  j["pass"] = pass;
  j["oracle"] = oracle;
  return j.dump(2);
}

#if LOGPOLE_HAVE_FLOAT128
using Wide = __float128;
#else
using Wide = long double;
#endif

namespace {

// 6th-order central stencils
Wide fd_second(const std::array<Wide, 7>& u, Wide h) {
  const Wide c3 = Wide(1) / 90, c2 = Wide(3) / 20, c1 = Wide(3) / 2, c0 = Wide(49) / 18;
  return (c3 * (u[0] + u[6]) - c2 * (u[1] + u[5]) + c1 * (u[2] + u[4]) - c0 * u[3]) / (h * h);
}

Wide fd_first(const std::array<Wide, 7>& u, Wide h) {
  const Wide c3 = Wide(1) / 60, c2 = Wide(3) / 20, c1 = Wide(3) / 4;
  return (c3 * (u[6] - u[0]) - c2 * (u[5] - u[1]) + c1 * (u[4] - u[2])) / h;
}

}  // namespace

double fd_equation_deviation(const PotentialModel& model, const QuasiMode& qm, double r,
                             double h) {
  std::array<Wide, 7> u{};
  for (int k = -3; k <= 3; ++k)
    u[static_cast<std::size_t>(k + 3)] = qm.u_value(Wide(r) + Wide(k) * Wide(h));
  const Wide upp = fd_second(u, Wide(h));
  const Wide up = fd_first(u, Wide(h));
  const Wide lam2 = Wide(qm.lambda) * Wide(qm.lambda);
  const Wide rhs = -upp - Wide(model.d - 1) / Wide(r) * up +
                   model.V_value(Wide(r)) * u[3] - lam2 * u[3];
  const Wide closed = Wide(qm.f(r, 0).value());
  return static_cast<double>(num<Wide>::abs(rhs - closed));
}

VerificationReport fd_residual_check(const PotentialModel& model, const QuasiMode& qm,
                                     int points, double step_factor) {
  VerificationReport rep;
  rep.check = "fd_residual";
  rep.level_lo = rep.level_hi = qm.n;
  rep.oracle = "order-6 central differences of u_n at 128-bit precision";

  const double h = step_factor / qm.lambda;
  const Interval supp = qm.support();
  double worst = 0.0;
  for (int i = 0; i < points; ++i) {
    const double r = supp.lo + supp.length() * (i + 0.5) / points;
    worst = std::max(worst, fd_equation_deviation(model, qm, r, h));
  }
  const double scale =
      std::max(sup_derivative_norm(qm, 0), 1e-9 * qm.lambda * qm.lambda * sup_u(qm));
  rep.values = {worst, scale};
  rep.tolerance = 1e-5 * scale;
  rep.pass = worst <= rep.tolerance;
  return rep;
}

VerificationReport mode_constants_check(Ladder& ladder, int level_lo, int level_hi) {
  VerificationReport rep;
  rep.check = "mode_constants";
  rep.level_lo = level_lo;
  rep.level_hi = level_hi;
  rep.oracle = "scanned sup norms and adaptive L1 quadrature against the ladder scaling";

  const int d = ladder.d;
  const double ln10 = std::log(10.0);
  std::vector<std::vector<double>> r1(3);
  std::vector<double> r2;
  for (int n = level_lo; n <= level_hi; ++n) {
    const QuasiMode qm = make_quasimode(ladder, n, 1e-10);
    const double lam = qm.lambda;
    const double decay_log = lam / (20.0 * pow10i(n));  // exponent, assembled in log space
    for (int j = 0; j <= 2; ++j) {
      const double sup = sup_derivative_norm(qm, j);
      const double log_ratio = std::log(sup) - std::log(qm.alpha) -
                               (1.0 + j) * std::log(lam) -
                               0.5 * (d + 1) * n * ln10 + decay_log;
      r1[static_cast<std::size_t>(j)].push_back(std::exp(log_ratio));
    }
    // ||u_n||_L1 = 1 after calibration
    const double l1 = 1.0;
    r2.push_back(std::exp(std::log(l1) + std::log(lam) + 0.5 * (d - 1) * n * ln10 -
                          std::log(qm.alpha)));
  }
  bool stable = true;
  const auto stability = [&](const std::vector<double>& series) {
    const auto [lo, hi] = std::minmax_element(series.begin(), series.end());
    if (!(*lo > 0.0) || !std::isfinite(*hi)) return false;
    return *hi / *lo <= 4.0;
  };
  for (const auto& series : r1) {
    stable = stable && stability(series);
    rep.values.insert(rep.values.end(), series.begin(), series.end());
  }
  stable = stable && stability(r2);
  rep.values.insert(rep.values.end(), r2.begin(), r2.end());
  rep.tolerance = 4.0;
  rep.pass = stable;
  return rep;
}

VerificationReport residual_decay_check(Ladder& ladder, int N, int j_lo, int j_hi,
                                       int level_lo, int level_hi) {
  VerificationReport rep;
  rep.check = "residual_decay";
  rep.level_lo = level_lo;
  rep.level_hi = level_hi;
  std::ostringstream oracle;
  oracle << "scanned sup|d^j f_n| weighted by lambda^{" << N << "-j} along the ladder";
  rep.oracle = oracle.str();

  bool ok = true;
  for (int j = j_lo; j <= j_hi; ++j) {
    std::vector<double> series;
    for (int n = level_lo; n <= level_hi; ++n) {
      const QuasiMode qm = make_quasimode(ladder, n, 1e-10);
      const double sup = sup_derivative_norm(qm, j);
      series.push_back(std::exp(std::log(sup) + (N - j) * std::log(qm.lambda)));
    }
    for (double v : series) ok = ok && v > 0.0 && std::isfinite(v);
    for (std::size_t k = 2; k < series.size(); ++k)
      ok = ok && series[k] <= series[k - 1];
    rep.values.insert(rep.values.end(), series.begin(), series.end());
  }
  rep.tolerance = 0.0;
  rep.pass = ok;
  return rep;
}

}  // namespace logpole
