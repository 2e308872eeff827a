#include "logpole/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "logpole/dynamics.hpp"
#include "logpole/harness.hpp"
#include "logpole/kernel.hpp"
#include "logpole/norms.hpp"
#include "logpole/potential.hpp"
#include "logpole/verifier.hpp"

namespace logpole {

namespace {

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(6);
  out << v;
  return out.str();
}

// 1. ODE identity on a dense grid
CriterionResult ode_identity(const ResolvedConfig&) {
  CriterionResult res;
  res.id = 1;
  res.name = "ODE identity -y'' + b y = 0 on [-30, 30]";
  res.budget_seconds = 1.0;
  double worst = 0.0;
  const int pts = 1000;
  for (int i = 0; i <= pts; ++i) {
    const double s = -30.0 + 60.0 * i / pts;
    const double by = value_b(s) * value_y(s);
    const double rel = std::fabs(ode_residual(s)) / std::max(1.0, std::fabs(by));
    worst = std::max(worst, rel);
  }
  res.pass = worst <= 1e-12;
  res.detail = "max normalized residual " + fmt(worst) + " (tol 1e-12)";
  return res;
}

// 2. partition of unity telescopes to the outer cutoff
CriterionResult partition_identity(const ResolvedConfig& cfg) {
  CriterionResult res;
  res.id = 2;
  res.name = "partition identity sum psi_n = chi(10^n0 r)";
  res.budget_seconds = 1.0;
  const int n0 = cfg.n0;
  const int n_hi = n0 + 12;
  const double lo = pow10i(-(n0 + 9));
  const double hi = 2.0 * pow10i(-n0);
  const int samples = 10000;
  const double step = std::log(hi / lo) / samples;
  double worst = 0.0;
  for (int i = 0; i <= samples; ++i) {
    const double r = lo * std::exp(i * step);
    double acc = 0.0;
    for (int n = n0; n <= n_hi; ++n) acc += psi(n, r, 0).value();
    worst = std::max(worst, std::fabs(acc - value_chi(pow10i(n0) * r)));
  }
  res.pass = worst <= 1e-12;
  res.detail = "max |sum - cutoff| " + fmt(worst) + " over " + std::to_string(samples) +
               " log-spaced radii (tol 1e-12)";
  return res;
}

// 3. closed-form residual against the finite-difference oracle
CriterionResult fd_cross_check(const ResolvedConfig& cfg) {
  CriterionResult res;
  res.id = 3;
  res.name = "residual cross-check (order-6 FD oracle)";
  res.budget_seconds = 10.0;
  Ladder ladder = cfg.make_ladder_for_run();
  const PotentialModel model = make_potential(ladder);
  std::ostringstream detail;
  bool ok = true;
  for (int n = cfg.n0; n <= cfg.n0 + 3; ++n) {
    const QuasiMode qm = make_quasimode(ladder, n, cfg.raw.quad_rel_tol);
    const VerificationReport rep = fd_residual_check(model, qm, 200, cfg.raw.fd_step_factor);
    ok = ok && rep.pass;
    res.check_reports.push_back(rep.to_json());
    detail << "n=" << n << ": worst " << fmt(rep.values[0]) << " tol " << fmt(rep.tolerance)
           << (rep.pass ? " ok" : " FAIL") << "; ";
  }
  {  // step-halving shows the 6th-order convergence of the stencil
    const QuasiMode qm = make_quasimode(ladder, cfg.n0, cfg.raw.quad_rel_tol);
    const Interval plateau = qm.window.chi_plateau();
    const double h = cfg.raw.fd_step_factor / qm.lambda;
    double s_h = 0.0, s_h2 = 0.0;
    for (double fr : {0.3, 0.4, 0.5, 0.6, 0.7}) {
      const double r = plateau.lo + fr * plateau.length();
      s_h += fd_equation_deviation(model, qm, r, h);
      s_h2 += fd_equation_deviation(model, qm, r, h / 2.0);
    }
    const double ratio = s_h / s_h2;
    const bool order_ok = ratio > 50.0 && ratio < 80.0;
    ok = ok && order_ok;
    detail << "halving ratio " << fmt(ratio) << " (expect ~64)";
  }
  res.pass = ok;
  res.detail = detail.str();
  return res;
}

// 4. unit L1 mass, stable under panel doubling
CriterionResult normalization(const ResolvedConfig& cfg) {
  CriterionResult res;
  res.id = 4;
  res.name = "calibrated modes have unit L1 mass";
  res.budget_seconds = 30.0;
  Ladder ladder = cfg.make_ladder_for_run();
  std::ostringstream detail;
  bool ok = true;
  for (int n = cfg.n0; n <= cfg.n0 + 6; ++n) {
    const QuasiMode qm = make_quasimode(ladder, n, cfg.raw.quad_rel_tol);
    // recompute the mass on a doubled panel seed (segment midpoints added)
    std::vector<double> pts = qm.peak_breakpoints();
    pts.insert(pts.begin(), qm.support().lo);
    pts.push_back(qm.support().hi);
    std::vector<double> doubled;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      doubled.push_back(pts[i]);
      doubled.push_back(0.5 * (pts[i] + pts[i + 1]));
    }
    doubled.push_back(pts.back());
    const int d = qm.d;
    const double mass =
        sphere_factor(d) *
        integrate_split([&](double r) { return qm.u_value(r) * std::pow(r, d - 1); },
                        doubled, cfg.raw.quad_rel_tol);
    const double dev = std::fabs(mass - 1.0);
    ok = ok && dev <= 1e-8;
    detail << "n=" << n << ": |L1-1| " << fmt(dev) << "; ";
  }
  res.pass = ok;
  res.detail = detail.str();
  return res;
}

// 5. residual decay and the two measured quasimode constants
CriterionResult decay_and_constants(const ResolvedConfig& cfg) {
  CriterionResult res;
  res.id = 5;
  res.name = "residual sup-norm decay and measured constants";
  res.budget_seconds = 60.0;
  Ladder ladder = cfg.make_ladder_for_run();
  const int lo = cfg.n0, hi = cfg.n0 + 6;
  const VerificationReport decay = residual_decay_check(ladder, cfg.raw.N, 0, 2, lo, hi);
  const VerificationReport constants = mode_constants_check(ladder, lo, hi);
  res.check_reports = {decay.to_json(), constants.to_json()};
  std::ostringstream detail;
  const std::size_t per_j = static_cast<std::size_t>(hi - lo + 1);
  for (int j = 0; j <= 2; ++j) {
    detail << "sup|d^" << j << " f| lambda^{N-" << j << "}:";
    for (std::size_t k = 0; k < per_j; ++k)
      detail << " " << fmt(decay.values[static_cast<std::size_t>(j) * per_j + k]);
    detail << "; ";
  }
  detail << (decay.pass ? "decay ok" : "decay FAIL (sequence increases)") << "; ";
  detail << (constants.pass ? "constants stable" : "constants FAIL (R1 drifts beyond factor 4)");
  res.pass = decay.pass && constants.pass;
  res.detail = detail.str();
  return res;
}

// 6. two-sided |log r|^2 / r^2 bound and the L^p integrability split
CriterionResult sandwich_and_integrability(const ResolvedConfig& cfg) {
  CriterionResult res;
  res.id = 6;
  res.name = "potential sandwich and L^p integrability split";
  res.budget_seconds = 30.0;
  Ladder ladder = cfg.make_ladder_for_run();
  const PotentialModel model = make_potential(ladder);
  const SandwichReport sw = sandwich_report(model, cfg.n0, cfg.n0 + 6);
  const bool sw_ok = sw.global_min > 0.0 && std::isfinite(sw.global_max) && sw.stability <= 16.0;

  const IntegrabilityReport conv = integrability_report(model, 1.2, 9);
  const IntegrabilityReport div = integrability_report(model, 1.5, 9);
  bool conv_ok = true, div_ok = true;
  for (std::size_t k = conv.increments.size() - 3; k < conv.increments.size(); ++k)
    conv_ok = conv_ok && conv.increments[k] <= 0.7 * conv.increments[k - 1];
  for (std::size_t k = div.increments.size() - 3; k < div.increments.size(); ++k)
    div_ok = div_ok && div.increments[k] >= 1.02 * div.increments[k - 1];
  div_ok = div_ok && div.total > 1e6;

  std::ostringstream detail;
  detail << "V r^2/log^2 r in [" << fmt(sw.global_min) << ", " << fmt(sw.global_max)
         << "], per-level ratio drift " << fmt(sw.stability) << " (gate 16); "
         << "p=1.2 total " << fmt(conv.total) << " with shrinking increments "
         << (conv_ok ? "ok" : "FAIL") << "; p=1.5 total " << fmt(div.total)
         << (div_ok ? " growing past 1e6 ok" : " FAIL");
  res.pass = sw_ok && conv_ok && div_ok;
  res.detail = detail.str();
  return res;
}

// 7. quasi-stationary evolution within the driven-propagator bound
CriterionResult duhamel(const ResolvedConfig& cfg) {
  CriterionResult res;
  res.id = 7;
  res.name = "quasi-stationarity of the evolved mode";
  res.budget_seconds = 300.0;
  Ladder ladder = cfg.make_ladder_for_run();
  const PotentialModel model = make_potential(ladder);
  const QuasiMode qm = make_quasimode(ladder, cfg.n0, cfg.raw.quad_rel_tol);
  const double T = 10.0 / (qm.lambda * qm.lambda);
  const DuhamelReport rep = duhamel_check(model, qm, T, cfg.raw.scan_per_wavelength);
  std::ostringstream detail;
  detail << "D(T) " << fmt(rep.samples.back().deviation) << " vs bound "
         << fmt(rep.samples.back().bound) << "; e_disc " << fmt(rep.e_disc_final)
         << " shrink x" << fmt(rep.e_disc_shrink) << " (expect ~4); drift "
         << fmt(rep.total_drift) << " (tol 1e-8); fine-grid D(T) "
         << fmt(rep.fine_deviation_final);
  res.pass = rep.pass;
  res.detail = detail.str();
  return res;
}

// 8. failure quotients grow at the predicted log-log rates
CriterionResult quotient_growth(const ResolvedConfig& cfg) {
  CriterionResult res;
  res.id = 8;
  res.name = "failure-quotient growth rates";
  res.budget_seconds = 120.0;
  Ladder ladder = cfg.make_ladder_for_run();
  const int lo = cfg.n0, hi = cfg.n0 + 6;
  const int d = cfg.raw.d;
  const double N = cfg.raw.N;
  std::ostringstream detail;
  bool ok = true;

  const auto check = [&](QuotientFamily fam, QuotientParams p, double slope_lo,
                         double slope_hi) {
    const QuotientSeries s = build_series(ladder, fam, p, lo, hi);
    const bool slope_ok = s.regression.valid && s.regression.slope >= slope_lo &&
                          s.regression.slope <= slope_hi &&
                          s.regression.max_residual <= 0.2;
    ok = ok && slope_ok;
    detail << family_name(fam) << ": slope " << fmt(s.regression.slope) << " in ["
           << fmt(slope_lo) << ", " << fmt(slope_hi) << "], resid "
           << fmt(s.regression.max_residual) << (slope_ok ? " ok; " : " FAIL; ");
  };
  const double inf = std::numeric_limits<double>::infinity();
  check(QuotientFamily::strichartz, {4.0, 2.0, 0.0}, d * (0.5 - 0.25) - 0.1, inf);
  check(QuotientFamily::dispersion, {4.0, 0.0, 0.0}, d * (0.75 - 0.25) - 0.1, inf);
  check(QuotientFamily::smoothing, {0.0, 0.0, 0.5}, 0.5 - 0.15, 0.5 + 0.15);
  check(QuotientFamily::loss_strichartz, {6.0, 0.0, 0.5}, d / 2.0 - d / 6.0 - 0.5 - 0.1, inf);
  check(QuotientFamily::resolvent, {0.0, 0.0, 0.0}, N - 1.0, inf);

  res.pass = ok;
  res.detail = detail.str();
  return res;
}

// 9. the steeper profile makes the residual family decay at every order
CriterionResult epsilon_variant(const ResolvedConfig& cfg) {
  CriterionResult res;
  res.id = 9;
  res.name = "epsilon profile supports arbitrary-order decay";
  res.budget_seconds = 60.0;
  FrequencyProfile profile;
  profile.variant = ProfileVariant::epsilon;
  profile.epsilon = 1.0;
  const int n0 = choose_n0(profile, cfg.raw.d);
  std::ostringstream detail;
  detail << "n0=" << n0 << "; ";
  bool ok = true;
  Ladder ladder = make_ladder(profile, cfg.raw.d, 0, n0, kDefaultLadderSpan);
  for (int Np = 0; Np <= 4; ++Np) {
    const VerificationReport rep = residual_decay_check(ladder, Np, 0, 2, n0, n0 + 6);
    ok = ok && rep.pass;
    res.check_reports.push_back(rep.to_json());
    detail << "N'=" << Np << (rep.pass ? " ok; " : " FAIL; ");
  }
  res.pass = ok;
  res.detail = detail.str();
  return res;
}

}  // namespace

CriterionResult run_criterion(int id, const ResolvedConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  CriterionResult res;
  switch (id) {
    case 1: res = ode_identity(config); break;
    case 2: res = partition_identity(config); break;
    case 3: res = fd_cross_check(config); break;
    case 4: res = normalization(config); break;
    case 5: res = decay_and_constants(config); break;
    case 6: res = sandwich_and_integrability(config); break;
    case 7: res = duhamel(config); break;
    case 8: res = quotient_growth(config); break;
    case 9: res = epsilon_variant(config); break;
    default: throw ConfigError("unknown criterion id " + std::to_string(id));
  }
  res.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (res.seconds > res.budget_seconds) {
    res.pass = false;
    res.detail += " [over runtime budget]";
  }
  return res;
}

std::vector<int> all_criteria() { return {1, 2, 3, 4, 5, 6, 7, 8, 9}; }

std::vector<int> criteria_for_suite(const std::string& suite) {
  if (suite == "ode") return {1};
  if (suite == "partition") return {2};
  if (suite == "residual") return {3};
  if (suite == "norms") return {4};
  if (suite == "decay") return {5};
  if (suite == "sandwich") return {6};
  if (suite == "duhamel") return {7};
  if (suite == "quotients") return {8};
  if (suite == "epsilon") return {9};
  if (suite == "all") return all_criteria();
  throw ConfigError("unknown suite: " + suite);
}

}  // namespace logpole
