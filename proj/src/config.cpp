#include "logpole/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace logpole {

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string RunConfig::serialize() const {
  std::ostringstream out;
  out << "config_version=" << version << "\n";
  out << "d=" << d << "\n";
  out << "N=" << N << "\n";
  out << "M=" << (M ? fmt_double(*M) : "auto") << "\n";
  out << "variant=" << (variant == ProfileVariant::standard ? "standard" : "epsilon") << "\n";
  out << "epsilon=" << fmt_double(epsilon) << "\n";
  out << "n0=" << (n0 ? std::to_string(*n0) : "auto") << "\n";
  out << "level_span=" << level_span << "\n";
  out << "quad_rel_tol=" << fmt_double(quad_rel_tol) << "\n";
  out << "fd_step_factor=" << fmt_double(fd_step_factor) << "\n";
  out << "scan_per_wavelength=" << scan_per_wavelength << "\n";
  out << "out_dir=" << out_dir << "\n";
  out << "format=" << format << "\n";
  return out.str();
}

RunConfig RunConfig::parse(const std::string& text) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string line;
  bool saw_version = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("config line without '=': " + line);
    const std::string key = line.substr(0, eq);
    const std::string val = line.substr(eq + 1);
    try {
      if (key == "config_version") {
        cfg.version = std::stoi(val);
        saw_version = true;
        if (cfg.version != 1) throw ConfigError("unsupported config_version " + val);
      } else if (key == "d") cfg.d = std::stoi(val);
      else if (key == "N") cfg.N = std::stoi(val);
      else if (key == "M") cfg.M = (val == "auto") ? std::nullopt : std::optional<double>(std::stod(val));
      else if (key == "variant") {
        if (val == "standard") cfg.variant = ProfileVariant::standard;
        else if (val == "epsilon") cfg.variant = ProfileVariant::epsilon;
        else throw ConfigError("unknown variant: " + val);
      }
      else if (key == "epsilon") cfg.epsilon = std::stod(val);
      else if (key == "n0") cfg.n0 = (val == "auto") ? std::nullopt : std::optional<int>(std::stoi(val));
      else if (key == "level_span") cfg.level_span = std::stoi(val);
      else if (key == "quad_rel_tol") cfg.quad_rel_tol = std::stod(val);
      else if (key == "fd_step_factor") cfg.fd_step_factor = std::stod(val);
      else if (key == "scan_per_wavelength") cfg.scan_per_wavelength = std::stoi(val);
      else if (key == "out_dir") cfg.out_dir = val;
      else if (key == "format") cfg.format = val;
      else throw ConfigError("unknown config key: " + key);
    } catch (const std::invalid_argument&) {
      throw ConfigError("bad value for " + key + ": " + val);
    } catch (const std::out_of_range&) {
      throw ConfigError("value out of range for " + key + ": " + val);
    }
  }
  if (!saw_version) throw ConfigError("config is missing config_version");
  return cfg;
}

RunConfig RunConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

void RunConfig::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write config file: " + path);
  out << serialize();
}

ResolvedConfig resolve(const RunConfig& config) {
  if (config.d < 1) throw ConfigError("d must be >= 1");
  if (config.N < 0) throw ConfigError("N must be >= 0");
  if (config.level_span < 1) throw ConfigError("level_span must be >= 1");
  if (config.variant == ProfileVariant::epsilon && !(config.epsilon > 0.0))
    throw ConfigError("epsilon variant needs epsilon > 0");
  if (config.format != "csv" && config.format != "json")
    throw ConfigError("format must be csv or json");

  ResolvedConfig r;
  r.raw = config;
  r.profile.variant = config.variant;
  r.profile.epsilon = config.epsilon;
  r.profile.M = config.M ? *config.M : choose_M(config.d, config.N);
  if (r.profile.M <= 1.0) throw ConfigError("M must be > 1");
  r.n0 = config.n0 ? *config.n0 : choose_n0(r.profile, config.d);
  r.level_lo = r.n0;
  r.level_hi = r.n0 + config.level_span - 1;
  return r;
}

Ladder ResolvedConfig::make_ladder_for_run(int extra_levels) const {
  const int span = std::max(raw.level_span + extra_levels, kDefaultLadderSpan);
  return make_ladder(profile, raw.d, raw.N, n0, span);
}

std::string ResolvedConfig::header() const {
  RunConfig expanded = raw;
  expanded.M = profile.M;
  expanded.n0 = n0;
  std::ostringstream out;
  std::istringstream lines(expanded.serialize());
  std::string line;
  while (std::getline(lines, line)) out << "# " << line << "\n";
  return out.str();
}

}  // namespace logpole
