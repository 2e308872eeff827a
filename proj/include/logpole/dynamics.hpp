#pragma once

#include <complex>
#include <vector>

#include "logpole/potential.hpp"
#include "logpole/quasimode.hpp"

namespace logpole {

/// Uniform grid on [r_min, r_max] with homogeneous Dirichlet ends; only
/// interior points are stored.
struct RadialGrid {
  double r_min = 0.0;
  double r_max = 0.0;
  int points = 0;

  double h() const { return (r_max - r_min) / (points + 1); }
  double r(int j) const { return r_min + (j + 1) * h(); }
};

struct WaveState {
  RadialGrid grid;
  std::vector<std::complex<double>> psi;
  double time = 0.0;
};

double discrete_l2(const WaveState& state);

/// Crank-Nicolson for i d/dt psi = (-d^2/dr^2 + W) psi: one tridiagonal
/// solve per step against a precomputed factorization; exactly unitary in
/// the discrete L2 norm up to roundoff.
///
/// max_rel_step_drift, when given, receives the largest relative norm
/// change over any single step.
WaveState evolve(WaveState state, const std::vector<double>& W, double dt, int steps,
                 double* max_rel_step_drift = nullptr);

/// Fraction of discrete L2 mass inside [a, b]; in [0, 1].
double concentration_profile(const WaveState& state, const Interval& window);

struct DuhamelSample {
  double t = 0.0;
  double deviation = 0.0;  // ||psi(t) - e^{-i lambda^2 t} v_n|| / ||v_n||
  double bound = 0.0;      // t ||g_n||/||v_n|| + fitted discretization error
  double mass_fraction = 0.0;
};

struct DuhamelReport {
  int n = 0;
  double T = 0.0;
  double g_over_v = 0.0;          // ||g_n||_{L2} / ||v_n||_{L2}
  std::vector<DuhamelSample> samples;      // base resolution
  double e_disc_final = 0.0;               // Richardson estimate at t = T
  double e_disc_shrink = 0.0;              // ratio under (h, dt) halving, ~4
  double total_drift = 0.0;                // |(norm(T) - norm(0))/norm(0)|
  double max_step_drift = 0.0;
  double fine_deviation_final = 0.0;       // D(T) at the finest resolution
  bool pass = false;
};

/// Evolves v_n on three nested resolutions and tests the quasi-stationarity
/// bound D(t) <= t ||g_n||/||v_n|| + E_disc with E_disc estimated by
/// Richardson extrapolation.
DuhamelReport duhamel_check(const PotentialModel& model, const QuasiMode& qm, double T,
                            int points_per_wavelength = 20, double dt_factor = 0.1,
                            int time_samples = 20);

/// Grid accepted by duhamel_check for this mode (padding >= 10 wavelengths,
/// >= points_per_wavelength samples per 2 pi / lambda).
RadialGrid make_mode_grid(const QuasiMode& qm, int points_per_wavelength = 20);

}  // namespace logpole
