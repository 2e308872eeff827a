#include "logpole/dynamics.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "logpole/quadrature.hpp"

namespace logpole {

double discrete_l2(const WaveState& state) {
  double acc = 0.0;
  for (const auto& z : state.psi) acc += std::norm(z);
  return std::sqrt(acc * state.grid.h());
}

WaveState evolve(WaveState state, const std::vector<double>& W, double dt, int steps,
                 double* max_rel_step_drift) {
  const int m = state.grid.points;
  assert(static_cast<int>(W.size()) == m && static_cast<int>(state.psi.size()) == m);
  using C = std::complex<double>;
  const double h2 = state.grid.h() * state.grid.h();
  const C half_i_dt(0.0, 0.5 * dt);
  const C off = -half_i_dt / h2;  // A off-diagonal
  std::vector<C> den(static_cast<std::size_t>(m)), cp(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    const auto ju = static_cast<std::size_t>(j);
    const C diag = 1.0 + half_i_dt * (2.0 / h2 + W[ju]);
    den[ju] = (j == 0) ? diag : diag - off * cp[ju - 1];
    assert(std::abs(den[ju]) > 0.0);
    cp[ju] = off / den[ju];
  }

  std::vector<C> rhs(static_cast<std::size_t>(m)), z(static_cast<std::size_t>(m));
  double worst_drift = 0.0;
  double norm_prev = discrete_l2(state);
  for (int step = 0; step < steps; ++step) {
    for (int j = 0; j < m; ++j) {
      const auto ju = static_cast<std::size_t>(j);
      const C bdiag = 1.0 - half_i_dt * (2.0 / h2 + W[ju]);
      C v = bdiag * state.psi[ju];
      if (j > 0) v -= off * state.psi[ju - 1];
      if (j + 1 < m) v -= off * state.psi[ju + 1];
      rhs[ju] = v;
    }
    z[0] = rhs[0] / den[0];
    for (int j = 1; j < m; ++j) {
      const auto ju = static_cast<std::size_t>(j);
      z[ju] = (rhs[ju] - off * z[ju - 1]) / den[ju];
    }
    state.psi[static_cast<std::size_t>(m - 1)] = z[static_cast<std::size_t>(m - 1)];
    for (int j = m - 2; j >= 0; --j) {
      const auto ju = static_cast<std::size_t>(j);
      state.psi[ju] = z[ju] - cp[ju] * state.psi[ju + 1];
    }
    state.time += dt;
    if (max_rel_step_drift) {
      const double norm_now = discrete_l2(state);
      worst_drift = std::max(worst_drift, std::fabs(norm_now - norm_prev) / norm_prev);
      norm_prev = norm_now;
    }
  }
  if (max_rel_step_drift) *max_rel_step_drift = worst_drift;
  return state;
}

double concentration_profile(const WaveState& state, const Interval& window) {
  double inside = 0.0, total = 0.0;
  for (int j = 0; j < state.grid.points; ++j) {
    const double m = std::norm(state.psi[static_cast<std::size_t>(j)]);
    total += m;
    if (window.contains(state.grid.r(j))) inside += m;
  }
  return total > 0.0 ? inside / total : 0.0;
}

RadialGrid make_mode_grid(const QuasiMode& qm, int points_per_wavelength) {
  if (points_per_wavelength < 20)
    throw ConfigError("mode grid needs at least 20 points per wavelength");
  const Interval supp = qm.support();
  const double wavelength = 2.0 * M_PI / qm.lambda;
  const double pad = std::max(12.0 * wavelength, 0.1 * supp.length());
  RadialGrid grid;
  grid.r_min = supp.lo - pad;
  grid.r_max = supp.hi + pad;
  if (!(grid.r_min > 0.0)) throw ConfigError("mode grid would reach r <= 0");
  const double h_max = wavelength / points_per_wavelength;
  grid.points = static_cast<int>(std::ceil((grid.r_max - grid.r_min) / h_max)) - 1;
  if (grid.points < 100) throw ConfigError("mode grid too coarse");
  return grid;
}

namespace {

struct Run {
  std::vector<double> deviation;  // at t_k = k T / time_samples, k = 0..time_samples
  std::vector<double> mass;
  double drift = 0.0;
  double max_step_drift = 0.0;
};

// dt = T / (time_samples * substeps): all resolutions sample identical times.
Run run_evolution(const PotentialModel& model, const QuasiMode& qm, double T,
                  const RadialGrid& grid, int time_samples, int substeps) {
  const int m = grid.points;
  std::vector<double> W(static_cast<std::size_t>(m));
  WaveState state{grid, std::vector<std::complex<double>>(static_cast<std::size_t>(m)), 0.0};
  for (int j = 0; j < m; ++j) {
    const double r = grid.r(j);
    W[static_cast<std::size_t>(j)] = model.W_value(r);
    state.psi[static_cast<std::size_t>(j)] = qm.v(r, 0).value();
  }
  const std::vector<std::complex<double>> v0 = state.psi;
  const double norm0 = discrete_l2(state);
  const double dt = T / (static_cast<double>(time_samples) * substeps);
  const double lam2 = qm.lambda * qm.lambda;

  Run out;
  out.deviation.push_back(0.0);
  out.mass.push_back(concentration_profile(state, qm.support()));
  for (int k = 1; k <= time_samples; ++k) {
    double step_drift = 0.0;
    state = evolve(std::move(state), W, dt, substeps, &step_drift);
    out.max_step_drift = std::max(out.max_step_drift, step_drift);
    const std::complex<double> phase = std::exp(std::complex<double>(0.0, -lam2 * state.time));
    double acc = 0.0;
    for (int j = 0; j < m; ++j)
      acc += std::norm(state.psi[static_cast<std::size_t>(j)] -
                       phase * v0[static_cast<std::size_t>(j)]);
    out.deviation.push_back(std::sqrt(acc * grid.h()) / norm0);
    out.mass.push_back(concentration_profile(state, qm.support()));
  }
  out.drift = std::fabs(discrete_l2(state) - norm0) / norm0;
  return out;
}

}  // namespace

DuhamelReport duhamel_check(const PotentialModel& model, const QuasiMode& qm, double T,
                            int points_per_wavelength, double dt_factor,
                            int time_samples) {
  const double lam2 = qm.lambda * qm.lambda;
  if (!(T <= 100.0 / lam2)) throw ConfigError("duhamel_check: horizon beyond desk scale");

  DuhamelReport rep;
  rep.n = qm.n;
  rep.T = T;

  // ||g||/||v|| in the reduced picture (plain L2(dr))
  const auto sq = [](double x) { return x * x; };
  const auto [band_l, band_r] = qm.ramp_bands();
  const double g2 =
      integrate([&](double r) { return sq(qm.g(r, 0).value()); }, band_l.lo, band_l.hi, 1e-8) +
      integrate([&](double r) { return sq(qm.g(r, 0).value()); }, band_r.lo, band_r.hi, 1e-8);
  std::vector<double> vpts = qm.peak_breakpoints();
  vpts.insert(vpts.begin(), qm.support().lo);
  vpts.push_back(qm.support().hi);
  const double v2 =
      integrate_split([&](double r) { return sq(qm.v(r, 0).value()); }, vpts, 1e-10);
  rep.g_over_v = std::sqrt(g2 / v2);

  const int substeps0 =
      std::max(1, static_cast<int>(std::ceil(T * lam2 / (dt_factor * time_samples))));
  const RadialGrid g0 = make_mode_grid(qm, points_per_wavelength);
  const RadialGrid g1{g0.r_min, g0.r_max, 2 * g0.points + 1};  // exact h halving
  const RadialGrid g2_{g0.r_min, g0.r_max, 4 * g0.points + 3};
  const Run r0 = run_evolution(model, qm, T, g0, time_samples, substeps0);
  const Run r1 = run_evolution(model, qm, T, g1, time_samples, 2 * substeps0);
  const Run r2 = run_evolution(model, qm, T, g2_, time_samples, 4 * substeps0);

  const std::size_t k_last = r0.deviation.size() - 1;
  const double e1 = (4.0 / 3.0) * std::fabs(r0.deviation[k_last] - r1.deviation[k_last]);
  const double e2 = (4.0 / 3.0) * std::fabs(r1.deviation[k_last] - r2.deviation[k_last]);
  rep.e_disc_final = e1;
  rep.e_disc_shrink = e2 > 0.0 ? e1 / e2 : 0.0;
  rep.total_drift = r0.drift;
  rep.max_step_drift = std::max({r0.max_step_drift, r1.max_step_drift, r2.max_step_drift});
  rep.fine_deviation_final = r2.deviation[k_last];

  bool all_bounded = true;
  for (std::size_t k = 0; k < r0.deviation.size(); ++k) {
    DuhamelSample s;
    s.t = T * static_cast<double>(k) / static_cast<double>(time_samples);
    s.deviation = r0.deviation[k];
    const double e_disc_k = (4.0 / 3.0) * std::fabs(r0.deviation[k] - r1.deviation[k]);
    s.bound = s.t * rep.g_over_v + 1.25 * e_disc_k + 1e-12;
    s.mass_fraction = r0.mass[k];
    if (s.deviation > s.bound) all_bounded = false;
    rep.samples.push_back(s);
  }
  rep.pass = all_bounded && rep.e_disc_shrink > 2.5 && rep.e_disc_shrink < 6.5 &&
             rep.total_drift <= 1e-8;
  return rep;
}

}  // namespace logpole
