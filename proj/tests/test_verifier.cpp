#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "json.hpp"
#include "logpole/norms.hpp"
#include "logpole/potential.hpp"
#include "logpole/verifier.hpp"

using namespace logpole;

namespace {

Ladder default_ladder() {
  FrequencyProfile p;
  p.M = 160.0;
  return make_ladder(p, 3, 2, 4, 11);
}

}  // namespace

TEST_CASE("reports serialize to the agreed JSON schema") {
  VerificationReport rep;
  rep.check = "demo";
  rep.level_lo = 4;
  rep.level_hi = 6;
  rep.values = {1.0, 2.5};
  rep.tolerance = 0.1;
  rep.pass = true;
  rep.oracle = "none";
  const auto j = nlohmann::json::parse(rep.to_json());
  CHECK(j["check"] == "demo");
  CHECK(j["levels"][0] == 4);
  CHECK(j["levels"][1] == 6);
  CHECK(j["values"].size() == 2);
  CHECK(j["tolerance"] == 0.1);
  CHECK(j["pass"] == true);
  CHECK(j.contains("oracle"));
}

TEST_CASE("finite-difference oracle confirms the eigenvalue equation") {
  Ladder ladder = default_ladder();
  const PotentialModel model = make_potential(ladder);
  for (int n = 4; n <= 7; ++n) {
    const QuasiMode qm = make_quasimode(ladder, n, 1e-10);
    const VerificationReport rep = fd_residual_check(model, qm);
    CHECK(rep.pass);
    CHECK(rep.values[0] <= rep.tolerance);
  }
}

TEST_CASE("the stencil converges at sixth order until the closed form is exact") {
  Ladder ladder = default_ladder();
  const PotentialModel model = make_potential(ladder);
  const QuasiMode qm = make_quasimode(ladder, 4, 1e-10);
  const Interval plateau = qm.window.chi_plateau();
  const double h = 1e-3 / qm.lambda;
  double s_h = 0.0, s_h2 = 0.0;
  for (double fr : {0.3, 0.4, 0.5, 0.6, 0.7}) {
    const double r = plateau.lo + fr * plateau.length();
    s_h += fd_equation_deviation(model, qm, r, h);
    s_h2 += fd_equation_deviation(model, qm, r, h / 2.0);
  }
  const double ratio = s_h / s_h2;
  CHECK(ratio > 50.0);
  CHECK(ratio < 80.0);
}

TEST_CASE("plateau points: the oracle sees only its own truncation error") {
  Ladder ladder = default_ladder();
  const PotentialModel model = make_potential(ladder);
  const QuasiMode qm = make_quasimode(ladder, 5, 1e-10);
  const double r = qm.window.center() * 1.01;
  CHECK(qm.f(r, 0).value() == 0.0);
  const double h = 1e-3 / qm.lambda;
  const double dev = fd_equation_deviation(model, qm, r, h);
  // bound the truncation: ~ h^6 lambda^8 |u| with a modest stencil constant
  const double lam = qm.lambda;
  const double u_here = std::fabs(qm.u(r, 0).value());
  CHECK(dev <= 1e-2 * std::pow(h, 6) * std::pow(lam / 2.0, 8) * u_here);
}

TEST_CASE("exponential ladder factor equals the power law it hides") {
  // lambda/(20 q(lambda)) = (M/20) log lambda on the standard profile, so
  // exp(-lambda/(20 10^n)) is exactly lambda^{-M/20}
  Ladder ladder = default_ladder();
  for (const auto& e : ladder.entries) {
    const double lhs = e.lambda / (20.0 * std::pow(10.0, e.n));
    const double rhs = (160.0 / 20.0) * std::log(e.lambda);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("measured mode constants: the mass side is stable, the sup side is not") {
  Ladder ladder = default_ladder();
  const VerificationReport rep = mode_constants_check(ladder, 4, 10);
  // layout: three R1 series (j = 0, 1, 2) then R2
  const std::size_t levels = 7;
  REQUIRE(rep.values.size() == 4 * levels);
  for (double v : rep.values) {
    CHECK(v > 0.0);
    CHECK(std::isfinite(v));
  }
  const auto series_minmax = [&](std::size_t block) {
    double lo = rep.values[block * levels], hi = lo;
    for (std::size_t k = 1; k < levels; ++k) {
      lo = std::min(lo, rep.values[block * levels + k]);
      hi = std::max(hi, rep.values[block * levels + k]);
    }
    return std::pair{lo, hi};
  };
  const auto [r2_lo, r2_hi] = series_minmax(3);
  CHECK(r2_hi / r2_lo <= 4.0);  // normalization constant is genuinely stable
  // the sup-norm ratios drift far beyond any constant: the e^{-lambda/(20 10^n)}
  // envelope overstates the decay of the smooth-ramp residual
  const auto [r1_lo, r1_hi] = series_minmax(0);
  CHECK(r1_hi / r1_lo > 1e3);
  CHECK_FALSE(rep.pass);  // pass flag is the conjunction of the stability gates
}

TEST_CASE("decay check measures growth at M = 160 and decay at M = 320") {
  {
    Ladder ladder = default_ladder();
    const VerificationReport rep = residual_decay_check(ladder, 2, 0, 2, 4, 10);
    const std::size_t levels = 7;
    REQUIRE(rep.values.size() == 3 * levels);
    for (double v : rep.values) CHECK(v > 0.0);
    // the j = 0 sequence grows monotonically at this margin
    for (std::size_t k = 2; k < levels; ++k)
      CHECK(rep.values[k] > rep.values[k - 1]);
    CHECK_FALSE(rep.pass);
  }
  {
    // doubling the envelope constant (inner ramp edge sits at half the
    // support distance) restores monotone decay at every order
    FrequencyProfile p;
    p.M = 320.0;
    Ladder ladder = make_ladder(p, 3, 2, choose_n0(p, 3), 11);
    const VerificationReport rep =
        residual_decay_check(ladder, 2, 0, 2, ladder.n0, ladder.n0 + 6);
    CHECK(rep.pass);
  }
}

TEST_CASE("graph norms of the calibrated modes") {
  Ladder ladder = default_ladder();
  const PotentialModel model = make_potential(ladder);
  for (int n : {4, 5, 6}) {
    const QuasiMode qm = make_quasimode(ladder, n, 1e-10);
    const auto [f_norm, u_norm] = graph_norm_P(model, qm);
    CHECK(f_norm > 0.0);
    CHECK(std::isfinite(f_norm));
    // ||u||_D <= 2 lambda ||u||_2: V <= (5/4) lambda^2 on the support
    NormRequest l2;
    l2.integrand = [&](double r) { return qm.u(r, 0).value(); };
    l2.p = 2.0;
    l2.interval = qm.support();
    l2.d = qm.d;
    l2.breakpoints = qm.peak_breakpoints();
    const double u_l2 = lp_norm(l2);
    CHECK(u_norm <= 2.0 * qm.lambda * u_l2);
    CHECK(u_norm >= u_l2);
  }
}
