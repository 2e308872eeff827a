#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "logpole/norms.hpp"
#include "logpole/potential.hpp"
#include "logpole/quadrature.hpp"
#include "logpole/quasimode.hpp"

using namespace logpole;

namespace {

Ladder default_ladder(int d = 3) {
  FrequencyProfile p;
  p.M = 160.0;
  return make_ladder(p, d, 2, 4, 11);
}

}  // namespace

TEST_CASE("level evaluators at the center") {
  Ladder ladder = default_ladder();
  const QuasiMode qm = make_quasimode(ladder, 5, 1e-10);
  const double c = qm.window.center();
  CHECK(qm.y_level(c, 0).value() == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
  CHECK(qm.b_level(c, 0).value() ==
        doctest::Approx(-qm.lambda * qm.lambda / 4.0).epsilon(1e-14));
  CHECK(qm.v(c, 0).value() == doctest::Approx(qm.alpha * std::exp(-1.0)).epsilon(1e-13));
  CHECK(qm.u(c, 0).value() ==
        doctest::Approx(qm.alpha * std::exp(-1.0) / c).epsilon(1e-13));
}

TEST_CASE("scaled well equation holds at random support points") {
  Ladder ladder = default_ladder();
  const QuasiMode qm = make_quasimode(ladder, 6, 1e-10);
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> pick(qm.support().lo, qm.support().hi);
  for (int i = 0; i < 20; ++i) {
    const double r = pick(rng);
    const Jet y = qm.y_level(r, 2);
    const double resid = -y.deriv(2) + qm.b_level(r, 0).value() * y.value();
    CHECK(std::fabs(resid) <= 1e-9 * qm.lambda * qm.lambda);
  }
}

TEST_CASE("support identity in both parametrizations") {
  Ladder ladder = default_ladder();
  for (int n : {4, 7, 10}) {
    const QuasiMode qm = make_quasimode(ladder, n, 1e-10);
    const Interval supp = qm.support();
    CHECK(supp.lo == 2.0 * pow10i(-(n + 1)));
    CHECK(supp.hi == 4.0 * pow10i(-(n + 1)));
    // 10^{-n} = M log(lambda)/lambda turns the endpoints into
    // (M/5, 2M/5) log(lambda)/lambda
    const double M = 160.0;
    const double unit = std::log(qm.lambda) / qm.lambda;
    CHECK(supp.lo == doctest::Approx(M / 5.0 * unit).epsilon(1e-12));
    CHECK(supp.hi == doctest::Approx(2.0 * M / 5.0 * unit).epsilon(1e-12));
  }
}

TEST_CASE("modes vanish outside their support and on the plateau residuals vanish") {
  Ladder ladder = default_ladder();
  const QuasiMode qm = make_quasimode(ladder, 5, 1e-10);
  for (double r : {qm.support().lo * 0.99, qm.support().hi * 1.01, 1.0}) {
    const Jet u = qm.u(r, 3);
    const Jet f = qm.f(r, 3);
    for (int j = 0; j <= 3; ++j) {
      CHECK(u.deriv(j) == 0.0);
      CHECK(f.deriv(j) == 0.0);
    }
  }
  const Interval plateau = qm.window.chi_plateau();
  for (double fr : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    const double r = plateau.lo + fr * plateau.length();
    const Jet f = qm.f(r, 2);
    const Jet g = qm.g(r, 2);
    for (int j = 0; j <= 2; ++j) {
      CHECK(f.deriv(j) == 0.0);
      CHECK(g.deriv(j) == 0.0);
    }
  }
}

TEST_CASE("two evaluation paths for the reduced residual agree") {
  Ladder ladder = default_ladder();
  std::mt19937 rng(2024);
  for (int n : {4, 5, 6}) {
    const QuasiMode qm = make_quasimode(ladder, n, 1e-10);
    std::uniform_real_distribution<double> pick(qm.support().lo, qm.support().hi);
    const double lam2 = qm.lambda * qm.lambda;
    for (int i = 0; i < 100; ++i) {
      const double r = pick(rng);
      const double closed = qm.g(r, 0).value();
      const Jet v = qm.v(r, 2);
      const double direct = -v.deriv(2) + qm.b_level(r, 0).value() * v.value();
      const double scale = lam2 * std::fabs(v.value()) + std::fabs(closed) + 1e-300;
      CHECK(std::fabs(closed - direct) <= 1e-9 * scale);
    }
  }
}

TEST_CASE("the full radial eigenvalue equation holds through jets") {
  Ladder ladder = default_ladder();
  const PotentialModel model = make_potential(ladder);
  std::mt19937 rng(7);
  for (int n : {4, 6}) {
    const QuasiMode qm = make_quasimode(ladder, n, 1e-10);
    const double lam2 = qm.lambda * qm.lambda;
    const double scale = lam2 * sup_u(qm);
    std::uniform_real_distribution<double> pick(qm.support().lo, qm.support().hi);
    for (int i = 0; i < 60; ++i) {
      const double r = pick(rng);
      const Jet u = qm.u(r, 2);
      const double lhs = -u.deriv(2) - (qm.d - 1) / r * u.deriv(1) +
                         model.V(r, 0).value() * u.value() - lam2 * u.value();
      const double f = qm.f(r, 0).value();
      CHECK(std::fabs(lhs - f) <= 1e-9 * scale);
    }
  }
}

TEST_CASE("calibration yields unit mass, idempotently") {
  Ladder ladder = default_ladder();
  for (int n : {4, 5}) {
    const QuasiMode qm = make_quasimode(ladder, n, 1e-10);
    // independent path: the L1 norm machinery, jets instead of raw values
    NormRequest req;
    req.integrand = [&](double r) { return qm.u(r, 0).value(); };
    req.p = 1.0;
    req.interval = qm.support();
    req.d = qm.d;
    req.rel_tol = 1e-11;
    req.breakpoints = qm.peak_breakpoints();
    CHECK(lp_norm(req) == doctest::Approx(1.0).epsilon(1e-8));
    // idempotent: recalibration returns the cached normalization
    const double again = calibrate_alpha(ladder, n, 1e-10);
    CHECK(again == doctest::Approx(qm.alpha).epsilon(1e-10));
  }
}

TEST_CASE("normalization is stable under quadrature refinement") {
  Ladder ladder = default_ladder();
  const double coarse = calibrate_alpha(ladder, 5, 1e-10);
  const double fine = calibrate_alpha(ladder, 5, 2.5e-11);
  CHECK(std::fabs(coarse / fine - 1.0) < 1e-8);
}

TEST_CASE("alpha grows like lambda^{(d+1)/2} after normalization") {
  Ladder ladder = default_ladder();
  std::vector<double> xs, ys;
  for (int n = 4; n <= 10; ++n) {
    const QuasiMode qm = make_quasimode(ladder, n, 1e-10);
    xs.push_back(std::log(qm.lambda));
    ys.push_back(std::log(qm.alpha));
    // alpha_n <= C lambda_n 10^{n(d-1)/2} with a stable constant
    const double c = qm.alpha / (qm.lambda * pow10i(n));
    CHECK(c > 0.05);
    CHECK(c < 20.0);
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  CHECK(slope == doctest::Approx(2.0).epsilon(0.075));  // (d+1)/2 at d = 3
}

TEST_CASE("d = 1 collapses the conjugation") {
  Ladder ladder = default_ladder(1);
  const QuasiMode qm = make_quasimode(ladder, 5, 1e-10);
  const double r = qm.window.center() * 1.001;
  CHECK(qm.u(r, 2).value() == qm.v(r, 2).value());
  CHECK(qm.f(r, 2).value() == qm.g(r, 2).value());
  CHECK(qm.u(r, 2).deriv(2) == qm.v(r, 2).deriv(2));
}

TEST_CASE("sup of the residual lives in the ramp bands") {
  Ladder ladder = default_ladder();
  const QuasiMode qm = make_quasimode(ladder, 4, 1e-10);
  const double sup = sup_derivative_norm(qm, 0);
  CHECK(sup > 0.0);
  // refinement stability: a 3x denser initial scan moves the sup < 1%
  const auto [left, right] = qm.ramp_bands();
  double dense = 0.0;
  for (const Interval& band : {left, right}) {
    const int pts = 3 * static_cast<int>(std::ceil(band.length() * 20.0 * qm.lambda));
    dense = std::max(dense,
                     scan_sup([&](double r) { return qm.f(r, 0).value(); }, band.lo,
                              band.hi, pts));
  }
  CHECK(sup == doctest::Approx(dense).epsilon(0.01));
  CHECK_THROWS_AS(sup_derivative_norm(qm, kDefaultMaxJetOrder), ConfigError);
}

TEST_CASE("u evaluation guards the pole") {
  Ladder ladder = default_ladder();
  const QuasiMode qm = make_quasimode(ladder, 4, 1e-10);
  CHECK_THROWS_AS(qm.u(0.0, 0), std::domain_error);
  CHECK_THROWS_AS(qm.f(0.0, 0), std::domain_error);
}
