#pragma once

#include <array>
#include <cassert>
#include <cmath>
#include <span>

#include "logpole/errors.hpp"

namespace logpole {

/// A jet holds the value and derivatives of a function at one point,
/// coeffs[j] being the j-th derivative itself (not the Taylor coefficient).
/// Arithmetic propagates derivatives through +, *, /, exp, sqrt, pow and
/// composition, so closed-form d^j/dr^j evaluation never resorts to
/// finite differences.
///
/// Sums and products of integer-valued jets stay exact: the Leibniz rule
/// is applied on raw derivative values with binomial weights, with no
/// 1/j! rescaling in between.
class Jet {
 public:
  static constexpr int kCapacity = 16;  // highest representable order

  Jet() = default;

  /// Zero jet of the given order.
  Jet(double base_point, int order) : base_(base_point), order_(check_order(order)) {
    coeffs_.fill(0.0);
  }

  static Jet constant(double value, double base_point, int order) {
    Jet j(base_point, order);
    j.coeffs_[0] = value;
    return j;
  }

  /// Jet of the identity map r -> r at base_point.
  static Jet variable(double base_point, int order) {
    Jet j(base_point, order);
    j.coeffs_[0] = base_point;
    if (order >= 1) j.coeffs_[1] = 1.0;
    return j;
  }

  double base_point() const { return base_; }
  int order() const { return order_; }

  double deriv(int j) const {
    assert(j >= 0 && j <= order_);
    return coeffs_[static_cast<std::size_t>(j)];
  }
  double& deriv(int j) {
    assert(j >= 0 && j <= order_);
    return coeffs_[static_cast<std::size_t>(j)];
  }
  double value() const { return coeffs_[0]; }

  std::span<const double> coeffs() const {
    return {coeffs_.data(), static_cast<std::size_t>(order_) + 1};
  }

  /// Jet of the derivative function f' (order drops by one).
  Jet derivative_jet() const {
    assert(order_ >= 1);
    Jet out(base_, order_ - 1);
    for (int j = 0; j <= out.order_; ++j) out.coeffs_[j] = coeffs_[j + 1];
    return out;
  }

  /// Truncate to a lower order.
  Jet truncated(int order) const {
    assert(order <= order_);
    Jet out(base_, order);
    for (int j = 0; j <= order; ++j) out.coeffs_[j] = coeffs_[j];
    return out;
  }

  Jet& operator+=(const Jet& rhs) {
    assert(base_ == rhs.base_);
    order_ = std::min(order_, rhs.order_);
    for (int j = 0; j <= order_; ++j) coeffs_[j] += rhs.coeffs_[j];
    return *this;
  }
  Jet& operator-=(const Jet& rhs) {
    assert(base_ == rhs.base_);
    order_ = std::min(order_, rhs.order_);
    for (int j = 0; j <= order_; ++j) coeffs_[j] -= rhs.coeffs_[j];
    return *this;
  }
  Jet& operator+=(double c) {
    coeffs_[0] += c;
    return *this;
  }
  Jet& operator-=(double c) {
    coeffs_[0] -= c;
    return *this;
  }
  Jet& operator*=(double c) {
    for (int j = 0; j <= order_; ++j) coeffs_[j] *= c;
    return *this;
  }
  Jet& operator/=(double c) { return (*this) *= (1.0 / c); }

  Jet operator-() const {
    Jet out = *this;
    for (int j = 0; j <= order_; ++j) out.coeffs_[j] = -out.coeffs_[j];
    return out;
  }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator+(Jet a, double c) { return a += c; }
  friend Jet operator+(double c, Jet a) { return a += c; }
  friend Jet operator-(Jet a, double c) { return a -= c; }
  friend Jet operator-(double c, const Jet& a) { return (-a) += c; }
  friend Jet operator*(Jet a, double c) { return a *= c; }
  friend Jet operator*(double c, Jet a) { return a *= c; }
  friend Jet operator/(Jet a, double c) { return a /= c; }

  /// Leibniz product: (fg)^(n) = sum_k C(n,k) f^(k) g^(n-k).
  friend Jet operator*(const Jet& a, const Jet& b) {
    assert(a.base_ == b.base_);
    Jet out(a.base_, std::min(a.order_, b.order_));
    for (int n = 0; n <= out.order_; ++n) {
      double s = 0.0;
      for (int k = 0; k <= n; ++k) s += binom(n, k) * a.coeffs_[k] * b.coeffs_[n - k];
      out.coeffs_[n] = s;
    }
    return out;
  }

  /// h = f/g solved from f^(n) = sum_k C(n,k) h^(k) g^(n-k), g(x0) != 0.
  friend Jet operator/(const Jet& f, const Jet& g) {
    assert(f.base_ == g.base_);
    if (g.value() == 0.0) throw std::domain_error("jet division by zero-valued jet");
    Jet h(f.base_, std::min(f.order_, g.order_));
    for (int n = 0; n <= h.order_; ++n) {
      double s = f.coeffs_[n];
      for (int k = 0; k < n; ++k) s -= binom(n, k) * h.coeffs_[k] * g.coeffs_[n - k];
      h.coeffs_[n] = s / g.coeffs_[0];
    }
    return h;
  }
  friend Jet operator/(double c, const Jet& g) {
    return Jet::constant(c, g.base_point(), g.order()) / g;
  }

  static double binom(int n, int k) {
    static const auto table = [] {
      std::array<std::array<double, kCapacity + 1>, kCapacity + 1> t{};
      for (int i = 0; i <= kCapacity; ++i) {
        t[i][0] = 1.0;
        for (int j = 1; j <= i; ++j)
          t[i][j] = (j == i) ? 1.0 : t[i - 1][j - 1] + t[i - 1][j];
      }
      return t;
    }();
    return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }

  static double factorial(int n) {
    static const auto table = [] {
      std::array<double, kCapacity + 1> t{};
      t[0] = 1.0;
      for (int i = 1; i <= kCapacity; ++i) t[i] = t[i - 1] * i;
      return t;
    }();
    return table[static_cast<std::size_t>(n)];
  }

 private:
  static int check_order(int order) {
    if (order < 0 || order > kCapacity)
      throw ConfigError("jet order out of range [0, " + std::to_string(kCapacity) + "]");
    return order;
  }

  double base_ = 0.0;
  int order_ = 0;
  std::array<double, kCapacity + 1> coeffs_{};
};

/// h = exp(f), via h^(n+1) = sum_k C(n,k) h^(k) f^(n+1-k).
inline Jet exp(const Jet& f) {
  Jet h(f.base_point(), f.order());
  h.deriv(0) = std::exp(f.value());
  for (int n = 0; n < f.order(); ++n) {
    double s = 0.0;
    for (int k = 0; k <= n; ++k) s += Jet::binom(n, k) * h.deriv(k) * f.deriv(n + 1 - k);
    h.deriv(n + 1) = s;
  }
  return h;
}

/// h = sqrt(f), f(x0) > 0.
inline Jet sqrt(const Jet& f) {
  if (!(f.value() > 0.0)) throw std::domain_error("jet sqrt of non-positive value");
  Jet h(f.base_point(), f.order());
  h.deriv(0) = std::sqrt(f.value());
  for (int n = 0; n < f.order(); ++n) {
    // from (h h')^(n) = f^(n+1)/2; only the k=0 term contains h^(n+1)
    double s = 0.5 * f.deriv(n + 1);
    for (int k = 1; k <= n; ++k) s -= Jet::binom(n, k) * h.deriv(k) * h.deriv(n + 1 - k);
    h.deriv(n + 1) = s / h.deriv(0);
  }
  return h;
}

/// h = f^p for real p, f(x0) > 0, via f h' = p f' h.
inline Jet pow(const Jet& f, double p) {
  if (!(f.value() > 0.0)) throw std::domain_error("jet pow of non-positive value");
  Jet h(f.base_point(), f.order());
  h.deriv(0) = std::pow(f.value(), p);
  for (int n = 0; n < f.order(); ++n) {
    double s = 0.0;
    for (int k = 0; k <= n; ++k) s += p * Jet::binom(n, k) * f.deriv(k + 1) * h.deriv(n - k);
    for (int k = 1; k <= n; ++k) s -= Jet::binom(n, k) * f.deriv(k) * h.deriv(n + 1 - k);
    h.deriv(n + 1) = s / f.deriv(0);
  }
  return h;
}

inline Jet reciprocal(const Jet& f) { return 1.0 / f; }

/// Jet of outer(inner(.)) at inner.base_point(); `outer` must be a jet at
/// inner's value. Evaluated by Horner on the truncated Taylor series of
/// `outer`, which realizes Faa di Bruno without assembling Bell polynomials.
inline Jet compose(const Jet& outer, const Jet& inner) {
  assert(outer.base_point() == inner.value());
  const int m = std::min(outer.order(), inner.order());
  Jet dx = inner.truncated(m);
  dx.deriv(0) = 0.0;  // inner minus its value
  Jet acc = Jet::constant(outer.deriv(m) / Jet::factorial(m), inner.base_point(), m);
  for (int k = m - 1; k >= 0; --k) {
    acc = acc * dx;
    acc += outer.deriv(k) / Jet::factorial(k);
  }
  return acc;
}

}  // namespace logpole
