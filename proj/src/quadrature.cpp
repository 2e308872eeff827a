#include "logpole/quadrature.hpp"

#include <array>
#include <cmath>
#include <queue>
#include <vector>

namespace logpole {

namespace {

struct Gauss15Rule {
  std::array<double, 15> node{};
  std::array<double, 15> weight{};
};

// Nodes are the roots of P_15, found by Newton from Chebyshev estimates in
// long double; weights via 2 / ((1-x^2) P_15'(x)^2).
Gauss15Rule build_gauss15() {
  constexpr int n = 15;
  Gauss15Rule rule;
  for (int i = 0; i < n; ++i) {
    long double x = std::cos(M_PIl * (i + 0.75L) / (n + 0.5L));
    long double dp = 0.0L;
    for (int it = 0; it < 100; ++it) {
      long double p0 = 1.0L, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0L);
      const long double dx = p1 / dp;
      x -= dx;
      if (std::fabs(static_cast<double>(dx)) < 1e-19) break;
    }
    rule.node[static_cast<std::size_t>(i)] = static_cast<double>(x);
    rule.weight[static_cast<std::size_t>(i)] =
        static_cast<double>(2.0L / ((1.0L - x * x) * dp * dp));
  }
  return rule;
}

const Gauss15Rule& gauss15_rule() {
  static const Gauss15Rule rule = build_gauss15();
  return rule;
}

double panel(const Integrand& f, double a, double b) {
  const auto& rule = gauss15_rule();
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double acc = 0.0;
  for (int i = 0; i < 15; ++i)
    acc += rule.weight[static_cast<std::size_t>(i)] *
           f(mid + half * rule.node[static_cast<std::size_t>(i)]);
  return acc * half;
}

struct Piece {
  double a = 0.0, b = 0.0;
  double value = 0.0;  // two-half estimate
  double err = 0.0;    // disagreement with the one-panel estimate
  int depth = 0;
};

Piece make_piece(const Integrand& f, double a, double b, int depth) {
  const double whole = panel(f, a, b);
  const double mid = 0.5 * (a + b);
  const double value = panel(f, a, mid) + panel(f, mid, b);
  return {a, b, value, std::fabs(value - whole), depth};
}

struct ByError {
  bool operator()(const Piece& x, const Piece& y) const { return x.err < y.err; }
};

// Globally adaptive: always bisect the piece with the worst disagreement
// until the summed disagreement meets the tolerance.
double integrate_pieces(const Integrand& f, std::vector<Piece> init, double rel_tol,
                        double abs_floor, int max_depth) {
  std::priority_queue<Piece, std::vector<Piece>, ByError> queue;
  double total = 0.0, err = 0.0;
  for (const Piece& p : init) {
    total += p.value;
    err += p.err;
    queue.push(p);
  }
  while (err > rel_tol * std::fabs(total) + abs_floor) {
    const Piece worst = queue.top();
    queue.pop();
    if (worst.depth >= max_depth)
      throw NumericError("quadrature: no convergence after " + std::to_string(max_depth) +
                         " refinement levels (interval [" + std::to_string(worst.a) +
                         ", " + std::to_string(worst.b) + "])");
    const double mid = 0.5 * (worst.a + worst.b);
    const Piece left = make_piece(f, worst.a, mid, worst.depth + 1);
    const Piece right = make_piece(f, mid, worst.b, worst.depth + 1);
    total += left.value + right.value - worst.value;
    err += left.err + right.err - worst.err;
    queue.push(left);
    queue.push(right);
  }
  return total;
}

}  // namespace

double gauss15(const Integrand& f, double a, double b) { return panel(f, a, b); }

double integrate(const Integrand& f, double a, double b, double rel_tol,
                 double abs_floor, int max_depth) {
  if (a == b) return 0.0;
  return integrate_pieces(f, {make_piece(f, a, b, 0)}, rel_tol, abs_floor, max_depth);
}

double integrate_split(const Integrand& f, const std::vector<double>& breakpoints,
                       double rel_tol, double abs_floor, int max_depth) {
  std::vector<Piece> init;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
    if (breakpoints[i] != breakpoints[i + 1])
      init.push_back(make_piece(f, breakpoints[i], breakpoints[i + 1], 0));
  if (init.empty()) return 0.0;
  return integrate_pieces(f, std::move(init), rel_tol, abs_floor, max_depth);
}

}  // namespace logpole
