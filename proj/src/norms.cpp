#include "logpole/norms.hpp"

#include <algorithm>
#include <cmath>

namespace logpole {

double sphere_factor(int d) {
  return 2.0 * std::pow(M_PI, 0.5 * d) / std::tgamma(0.5 * d);
}

double lp_norm(const NormRequest& req) {
  if (!(req.interval.lo > 0.0) || !(req.interval.hi > req.interval.lo))
    throw ConfigError("lp_norm: need 0 < a < b");
  if (req.p == kInfinityP)
    return scan_sup(req.integrand, req.interval.lo, req.interval.hi, 4096);
  if (!(req.p >= 1.0)) throw ConfigError("lp_norm: need p >= 1");

  const double p = req.p;
  const int d = req.d;
  const auto weighted = [&](double r) {
    return std::pow(std::fabs(req.integrand(r)), p) * std::pow(r, d - 1);
  };
  std::vector<double> pts{req.interval.lo};
  for (double b : req.breakpoints)
    if (b > req.interval.lo && b < req.interval.hi) pts.push_back(b);
  pts.push_back(req.interval.hi);
  std::sort(pts.begin(), pts.end());
  const double raw = integrate_split(weighted, pts, req.rel_tol);
  return std::pow(sphere_factor(d) * raw, 1.0 / p);
}

double scan_sup(const Integrand& f, double a, double b, int points,
                int refine_rounds, double refine_rel) {
  double best = 0.0, arg = a;
  const double h = (b - a) / points;
  for (int i = 0; i <= points; ++i) {
    const double r = a + i * h;
    const double v = std::fabs(f(r));
    if (v > best) { best = v; arg = r; }
  }
  double width = h;
  for (int round = 0; round < refine_rounds; ++round) {
    const double prev = best;
    const double lo = std::max(a, arg - width);
    const double hi = std::min(b, arg + width);
    const int m = 200;
    for (int i = 0; i <= m; ++i) {
      const double r = lo + (hi - lo) * i / m;
      const double v = std::fabs(f(r));
      if (v > best) { best = v; arg = r; }
    }
    width = (hi - lo) / m * 2.0;
    if (best > 0.0 && std::fabs(best - prev) <= refine_rel * best) break;
  }
  return best;
}

double scan_argmax(const Integrand& f, double a, double b, int points, int refine_rounds) {
  double best = -1.0, arg = a;
  const double h = (b - a) / points;
  for (int i = 0; i <= points; ++i) {
    const double r = a + i * h;
    const double v = std::fabs(f(r));
    if (v > best) { best = v; arg = r; }
  }
  double width = h;
  for (int round = 0; round < refine_rounds; ++round) {
    const double lo = std::max(a, arg - width);
    const double hi = std::min(b, arg + width);
    const int m = 200;
    for (int i = 0; i <= m; ++i) {
      const double r = lo + (hi - lo) * i / m;
      const double v = std::fabs(f(r));
      if (v > best) { best = v; arg = r; }
    }
    width = (hi - lo) / m * 2.0;
  }
  return arg;
}

bool holder_volume_check(const Integrand& f, double q0, double q, double support_volume,
                         const Interval& interval, int d) {
  if (!(q > q0 && q0 >= 1.0) && q != q0)
    throw ConfigError("holder_volume_check: need q >= q0 >= 1");
  NormRequest lhs{f, q0, interval, d, 1e-9, {}};
  NormRequest rhs{f, q, interval, d, 1e-9, {}};
  const double left = lp_norm(lhs);
  const double right = std::pow(support_volume, 1.0 / q0 - 1.0 / q) * lp_norm(rhs);
  return left <= right * (1.0 + 1e-6);
}

double graph_norm(const std::function<Jet(double)>& fjet, const Integrand& V,
                  const Interval& interval, int d, double rel_tol,
                  const std::vector<double>& breakpoints) {
  const auto density = [&](double r) {
    const Jet g = fjet(r);
    const double gp = g.deriv(1);
    const double gv = g.value();
    return (gp * gp + (1.0 + V(r)) * gv * gv) * std::pow(r, d - 1);
  };
  std::vector<double> pts{interval.lo};
  for (double b : breakpoints)
    if (b > interval.lo && b < interval.hi) pts.push_back(b);
  pts.push_back(interval.hi);
  std::sort(pts.begin(), pts.end());
  return std::sqrt(sphere_factor(d) * integrate_split(density, pts, rel_tol));
}

}  // namespace logpole
