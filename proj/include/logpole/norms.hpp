#pragma once

#include <functional>
#include <limits>

#include "logpole/jet.hpp"
#include "logpole/quadrature.hpp"
#include "logpole/window.hpp"

namespace logpole {

inline constexpr double kInfinityP = std::numeric_limits<double>::infinity();

/// Surface area of the unit sphere in R^d: 2 pi^{d/2} / Gamma(d/2).
double sphere_factor(int d);

/// An L^p norm request over a radial annulus [a, b], 0 < a < b, with the
/// r^{d-1} surface measure and the sphere factor included, so results are
/// genuine R^d norms. p = kInfinityP asks for the scan-based sup norm.
struct NormRequest {
  Integrand integrand;
  double p = 2.0;
  Interval interval;
  int d = 3;
  double rel_tol = 1e-9;
  std::vector<double> breakpoints;  // optional interior seeds for the panels
};

double lp_norm(const NormRequest& req);

/// Sup of |f| over [a, b]: uniform scan followed by local refinement
/// rounds (10x finer around the running argmax) until two successive
/// rounds agree to refine_rel.
double scan_sup(const Integrand& f, double a, double b, int points,
                int refine_rounds = 3, double refine_rel = 0.01);
double scan_argmax(const Integrand& f, double a, double b, int points,
                   int refine_rounds = 3);

/// Holder with support volume B: ||v||_{q0} <= B^{1/q0-1/q} ||v||_q.
/// True result within a 1e-6 relative slack.
bool holder_volume_check(const Integrand& f, double q0, double q, double support_volume,
                         const Interval& interval, int d);

/// Graph norm of the square root of the Schrodinger operator:
/// ||g||^2 = int |g'|^2 + (1 + V) |g|^2 over R^d, radial reduction.
/// `fjet` must yield at least a first-order jet of g at r.
double graph_norm(const std::function<Jet(double)>& fjet, const Integrand& V,
                  const Interval& interval, int d, double rel_tol = 1e-9,
                  const std::vector<double>& breakpoints = {});

}  // namespace logpole
