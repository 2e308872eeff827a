#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>

#include "logpole/kernel.hpp"

using namespace logpole;

// Reference derivative values computed independently with 40-digit
// arithmetic from the closed forms.
namespace oracle {
constexpr double y_at_3[6] = {
    0.04232921962320499767,  -0.040157023676046644236, 0.036757730205016276428,
    -0.031126980832072130695, 0.021208339744009494846, -0.0025845970559302871368};
constexpr double b_at_17[5] = {0.61259122710452600784, 0.39556985781704512464,
                               -0.53347491666795324852, 0.82008902021994064042,
                               -1.2222483506834740266};
constexpr double chi_at_08[4] = {0.30294071603459272072, -3.8127490303326843169,
                                 8.5567041603151250725, 254.26941834691776364};
constexpr double chi_at_06 = 0.97702263008997438505;
}  // namespace oracle

TEST_CASE("y values") {
  CHECK(eval_y(0.0, 0).value() == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(eval_y(0.0, 1).deriv(1) == doctest::Approx(0.0).epsilon(1e-15));  // even
  CHECK(eval_y(3.0, 0).value() == doctest::Approx(0.04232921962320500).epsilon(1e-14));
}

TEST_CASE("y jets against the high-precision oracle") {
  const Jet y3 = eval_y(3.0, 5);
  for (int j = 0; j <= 5; ++j)
    CHECK(y3.deriv(j) == doctest::Approx(oracle::y_at_3[j]).epsilon(1e-13));
  // evenness: y^(j)(-s) = (-1)^j y^(j)(s)
  const Jet ym3 = eval_y(-3.0, 5);
  for (int j = 0; j <= 5; ++j)
    CHECK(ym3.deriv(j) == doctest::Approx((j % 2 ? -1.0 : 1.0) * y3.deriv(j)).epsilon(1e-13));
  CHECK(eval_y(0.0, 2).deriv(2) ==
        doctest::Approx(-0.3678794411714423216).epsilon(1e-14));
  CHECK(eval_y(0.0, 4).deriv(4) == doctest::Approx(2.2072766470286539296).epsilon(1e-13));
}

TEST_CASE("b values and jets") {
  CHECK(eval_b(0.0, 0).value() == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(eval_b(1.0, 0).value() ==
        doctest::Approx(0.14644660940672627).epsilon(1e-14));
  const Jet b17 = eval_b(1.7, 4);
  for (int j = 0; j <= 4; ++j)
    CHECK(b17.deriv(j) == doctest::Approx(oracle::b_at_17[j]).epsilon(1e-12));
}

TEST_CASE("|b| <= 1 on a wide scan and approaches 1 at +-20") {
  double worst = 0.0;
  for (int i = 0; i <= 4000; ++i) {
    const double s = -40.0 + 80.0 * i / 4000.0;
    worst = std::max(worst, std::fabs(value_b(s)));
  }
  CHECK(worst <= 1.0);
  CHECK(std::fabs(value_b(20.0) - 1.0) < 1e-2);
  CHECK(std::fabs(value_b(-20.0) - 1.0) < 1e-2);
  CHECK(value_b(20.0) < 1.0);
}

TEST_CASE("well equation residual vanishes") {
  CHECK(std::fabs(ode_residual(0.0)) <= 1e-14);
  CHECK(std::fabs(ode_residual(2.5)) <= 1e-12);
  // at large |s| both sides decay; residual scales with them
  const Jet y17 = eval_y(17.0, 2);
  CHECK(std::fabs(ode_residual(17.0)) <=
        1e-12 * std::fabs(value_b(17.0) * y17.value()) + 1e-30);
  double worst = 0.0;
  for (int i = 0; i <= 1000; ++i) {
    const double s = -30.0 + 60.0 * i / 1000.0;
    const Jet y = eval_y(s, 2);
    worst = std::max(worst, std::fabs(ode_residual(s)) / std::max(1.0, std::fabs(y.deriv(2))));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("decay envelope |y^(j)| <= C_j e^{-|s|} with finite measured C_j") {
  for (int j = 0; j <= 8; ++j) {
    double c_j = 0.0;
    for (int i = 0; i <= 2000; ++i) {
      const double s = -30.0 + 60.0 * i / 2000.0;
      const Jet y = eval_y(s, j, Jet::kCapacity);
      c_j = std::max(c_j, std::fabs(y.deriv(j)) * std::exp(std::fabs(s)));
    }
    CHECK(std::isfinite(c_j));
    CHECK(c_j > 0.0);
    CHECK(c_j < 1e6);  // loose sanity ceiling; exact constants are reported, not pinned
  }
}

TEST_CASE("bump spec constants") {
  const BumpSpec spec;
  CHECK(spec.plateau_half_width == 0.5);
  CHECK(spec.support_half_width == 1.0);
  CHECK(std::string(BumpSpec::transition()).find("exp(-1/t)") != std::string::npos);
}

TEST_CASE("bump plateau, support, symmetry") {
  const Jet plateau = eval_chi(0.0, 3);
  CHECK(plateau.value() == 1.0);
  for (int j = 1; j <= 3; ++j) CHECK(plateau.deriv(j) == 0.0);
  for (double s : {1.0, -1.0, 1.5}) {
    const Jet outside = eval_chi(s, 3);
    for (int j = 0; j <= 3; ++j) CHECK(outside.deriv(j) == 0.0);
  }
  CHECK(eval_chi(0.75, 0).value() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(eval_chi(0.5, 0).value() == 1.0);
  CHECK(eval_chi(0.6, 0).value() == doctest::Approx(oracle::chi_at_06).epsilon(1e-13));
  for (double s : {0.55, 0.72, 0.9}) {
    CHECK(eval_chi(s, 0).value() == doctest::Approx(eval_chi(-s, 0).value()).epsilon(1e-15));
  }
}

TEST_CASE("bump ramp jets against the high-precision oracle") {
  const Jet c = eval_chi(0.8, 3);
  for (int j = 0; j <= 3; ++j)
    CHECK(c.deriv(j) == doctest::Approx(oracle::chi_at_08[j]).epsilon(1e-11));
}

TEST_CASE("bump is monotone on the ramp and flat at the joints") {
  double prev = 1.0;
  for (int i = 1; i <= 200; ++i) {
    const double s = 0.5 + 0.5 * i / 201.0;
    const double v = value_chi(s);
    CHECK(v <= prev + 1e-15);
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
    prev = v;
  }
  for (double s : {0.5 + 1e-3, 1.0 - 1e-3}) {
    const Jet j = eval_chi(s, 6, Jet::kCapacity);
    for (int k = 1; k <= 6; ++k) CHECK(std::fabs(j.deriv(k)) < 1e-10);
  }
}

TEST_CASE("scaled families obey the chain rule and the scaled equation") {
  // scaled b at the center is -omega^2
  CHECK(eval_scaled_b(7.0, 0.1, 0.1, 0).value() == doctest::Approx(-49.0).epsilon(1e-14));
  // chain rule: first derivative of y(2 r) at r=1 is 2 y'(2)
  const Jet sy = eval_scaled_y(2.0, 0.0, 1.0, 1);
  CHECK(sy.deriv(1) == doctest::Approx(2.0 * eval_y(2.0, 1).deriv(1)).epsilon(1e-14));
  // j-th coefficient equals omega^j y^(j)(omega (r-a))
  const double omega = 13.0, a = 0.25, r = 0.31;
  const Jet scaled = eval_scaled_y(omega, a, r, 6);
  const Jet plain = eval_y(omega * (r - a), 6);
  double w = 1.0;
  for (int j = 0; j <= 6; ++j) {
    CHECK(scaled.deriv(j) == doctest::Approx(w * plain.deriv(j)).epsilon(1e-13));
    w *= omega;
  }
  // scaled residual -y'' + b y at omega = 50
  const double om = 50.0, ctr = 0.03, rr = 0.031;
  const Jet yj = eval_scaled_y(om, ctr, rr, 2);
  const Jet bj = eval_scaled_b(om, ctr, rr, 0);
  const double resid = -yj.deriv(2) + bj.value() * yj.value();
  CHECK(std::fabs(resid) <= 1e-9 * om * om);
  CHECK_THROWS_AS(eval_scaled_y(-1.0, 0.0, 0.0, 0), std::domain_error);
}

TEST_CASE("jet order limit guards the public entry points") {
  CHECK_THROWS_AS(eval_y(0.0, kDefaultMaxJetOrder + 1), ConfigError);
  CHECK_NOTHROW(eval_y(0.0, kDefaultMaxJetOrder + 1, Jet::kCapacity));
  CHECK_THROWS_AS(eval_y(0.0, Jet::kCapacity + 1, Jet::kCapacity + 5), ConfigError);
}

TEST_CASE("extended-precision value paths agree with double") {
#if LOGPOLE_HAVE_FLOAT128
  for (double s : {0.0, 0.3, 0.77, 2.0, -1.4}) {
    CHECK(static_cast<double>(value_y<__float128>(s)) ==
          doctest::Approx(value_y(s)).epsilon(1e-15));
    CHECK(static_cast<double>(value_chi<__float128>(s)) ==
          doctest::Approx(value_chi(s)).epsilon(1e-15));
  }
#endif
}
