#pragma once

#include <optional>
#include <string>

#include "logpole/ladder.hpp"

namespace logpole {

/// A reproducible run description. "auto" entries are resolved against
/// choose_M / choose_n0; serialization uses 17 significant digits so a
/// round-trip reproduces every double bit-exactly.
struct RunConfig {
  int version = 1;
  int d = 3;
  int N = 2;
  std::optional<double> M;      // empty = auto
  ProfileVariant variant = ProfileVariant::standard;
  double epsilon = 1.0;
  std::optional<int> n0;        // empty = auto
  int level_span = 8;
  double quad_rel_tol = 1e-10;
  double fd_step_factor = 1e-3;
  int scan_per_wavelength = 20;
  std::string out_dir = ".";
  std::string format = "csv";

  std::string serialize() const;
  static RunConfig parse(const std::string& text);
  static RunConfig load(const std::string& path);
  void save(const std::string& path) const;
};

struct ResolvedConfig {
  RunConfig raw;
  FrequencyProfile profile;
  int n0 = 0;
  int level_lo = 0;
  int level_hi = 0;

  Ladder make_ladder_for_run(int extra_levels = 0) const;
  /// The resolved key=value block embedded in output headers.
  std::string header() const;
};

ResolvedConfig resolve(const RunConfig& config);

}  // namespace logpole
