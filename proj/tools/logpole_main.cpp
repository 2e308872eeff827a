#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "json.hpp"
#include "logpole/acceptance.hpp"
#include "logpole/config.hpp"
#include "logpole/dynamics.hpp"
#include "logpole/harness.hpp"
#include "logpole/potential.hpp"
#include "logpole/verifier.hpp"

namespace {

using namespace logpole;

struct CliOptions {
  std::string config_path;
  std::string M = "auto";
  std::string n0 = "auto";
  std::string levels;
  std::string variant;
  std::optional<int> d;
  std::optional<int> N;
  std::optional<double> epsilon;
  std::string out_dir;
  std::string format;
};

RunConfig build_config(const CliOptions& opt) {
  RunConfig cfg;
  if (!opt.config_path.empty()) cfg = RunConfig::load(opt.config_path);
  if (opt.d) cfg.d = *opt.d;
  if (opt.N) cfg.N = *opt.N;
  if (opt.M != "auto") cfg.M = std::stod(opt.M);
  if (!opt.variant.empty()) {
    if (opt.variant == "standard") cfg.variant = ProfileVariant::standard;
    else if (opt.variant == "epsilon") cfg.variant = ProfileVariant::epsilon;
    else throw ConfigError("unknown variant: " + opt.variant);
  }
  if (opt.epsilon) cfg.epsilon = *opt.epsilon;
  if (opt.n0 != "auto") cfg.n0 = std::stoi(opt.n0);
  if (!opt.out_dir.empty()) cfg.out_dir = opt.out_dir;
  if (!opt.format.empty()) cfg.format = opt.format;
  return cfg;
}

std::pair<int, int> parse_levels(const std::string& text, const ResolvedConfig& cfg) {
  if (text.empty()) return {cfg.level_lo, cfg.level_hi};
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw ConfigError("--levels expects A..B");
  const int lo = std::stoi(text.substr(0, dots));
  const int hi = std::stoi(text.substr(dots + 2));
  if (lo < cfg.n0 || hi < lo) throw ConfigError("--levels range invalid for this n0");
  return {lo, hi};
}

std::ofstream open_out(const ResolvedConfig& cfg, const std::string& name) {
  std::filesystem::create_directories(cfg.raw.out_dir);
  const auto path = std::filesystem::path(cfg.raw.out_dir) / name;
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path.string());
  return out;
}

void emit(const ResolvedConfig& cfg, const std::string& name, const std::string& body,
          bool with_header = true) {
  const std::string text = with_header ? cfg.header() + body : body;
  std::cout << text;
  if (!cfg.raw.out_dir.empty() && cfg.raw.out_dir != ".") {
    auto out = open_out(cfg, name);
    out << text;
  }
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int cmd_ladder(const ResolvedConfig& cfg, int lo, int hi) {
  Ladder ladder = make_ladder(cfg.profile, cfg.raw.d, cfg.raw.N, cfg.n0,
                              std::max(hi - cfg.n0 + 1, cfg.raw.level_span));
  std::ostringstream body;
  body << "n,lambda_n,q_lambda_n,alpha_n,support_lo,support_hi\n";
  for (int n = lo; n <= hi; ++n) {
    const QuasiMode qm = make_quasimode(ladder, n, cfg.raw.quad_rel_tol);
    const Interval supp = qm.support();
    body << n << "," << fmt17(qm.lambda) << "," << fmt17(cfg.profile.q(qm.lambda)) << ","
         << fmt17(qm.alpha) << "," << fmt17(supp.lo) << "," << fmt17(supp.hi) << "\n";
  }
  emit(cfg, "ladder.csv", body.str());
  return 0;
}

int cmd_potential(const ResolvedConfig& cfg, int lo, int hi) {
  Ladder ladder = make_ladder(cfg.profile, cfg.raw.d, cfg.raw.N, cfg.n0,
                              std::max(hi - cfg.n0 + 3, cfg.raw.level_span));
  const PotentialModel model = make_potential(ladder);
  std::ostringstream body;
  body << "r,V,W,level\n";
  const double r_lo = LevelWindow{hi}.psi_support().lo;
  const double r_hi = model.support_radius();
  const int per_decade = 512;
  const int samples = static_cast<int>(std::ceil(per_decade * std::log10(r_hi / r_lo)));
  for (int i = 0; i <= samples; ++i) {
    const double r = r_lo * std::exp(std::log(r_hi / r_lo) * i / samples);
    double best_psi = -1.0;
    int level = -1;
    for (int n : model.active_levels(r)) {
      const double p = psi(n, r, 0).value();
      if (p > best_psi) { best_psi = p; level = n; }
    }
    body << fmt17(r) << "," << fmt17(model.V_value(r)) << "," << fmt17(model.W_value(r))
         << "," << level << "\n";
  }
  emit(cfg, "potential.csv", body.str());
  return 0;
}

int cmd_quasimode(const ResolvedConfig& cfg, int n, int jorder) {
  Ladder ladder = cfg.make_ladder_for_run(n - cfg.n0 + 1);
  const QuasiMode qm = make_quasimode(ladder, n, cfg.raw.quad_rel_tol);
  std::ostringstream body;
  body << "r,u,f";
  for (int j = 1; j <= jorder; ++j) body << ",u_d" << j << ",f_d" << j;
  body << "\n";
  const Interval supp = qm.support();
  const int samples = 2000;
  for (int i = 0; i <= samples; ++i) {
    const double r = supp.lo + supp.length() * i / samples;
    const Jet u = qm.u(r, jorder);
    const Jet f = qm.f(r, jorder);
    body << fmt17(r) << "," << fmt17(u.value()) << "," << fmt17(f.value());
    for (int j = 1; j <= jorder; ++j)
      body << "," << fmt17(u.deriv(j)) << "," << fmt17(f.deriv(j));
    body << "\n";
  }
  emit(cfg, "quasimode_" + std::to_string(n) + ".csv", body.str());
  return 0;
}

int cmd_verify(const ResolvedConfig& cfg, const std::string& suite) {
  const std::vector<int> ids = criteria_for_suite(suite);
  nlohmann::json arr = nlohmann::json::array();
  bool all_pass = true;
  for (int id : ids) {
    const CriterionResult res = run_criterion(id, cfg);
    all_pass = all_pass && res.pass;
    nlohmann::json j;
    j["check"] = res.name;
    j["criterion"] = res.id;
    j["pass"] = res.pass;
    j["seconds"] = res.seconds;
    j["detail"] = res.detail;
    for (const std::string& rep : res.check_reports)
      j["reports"].push_back(nlohmann::json::parse(rep));
    arr.push_back(j);
    std::cerr << (res.pass ? "[PASS] " : "[FAIL] ") << res.id << ": " << res.name << "\n";
  }
  nlohmann::json top;
  top["config"] = cfg.header();
  top["suite"] = suite;
  top["reports"] = arr;
  emit(cfg, "verify_" + suite + ".json", top.dump(2) + "\n", false);
  return all_pass ? 0 : 1;
}

int cmd_evolve(const ResolvedConfig& cfg, int n, double t_factor, int samples) {
  Ladder ladder = cfg.make_ladder_for_run(n - cfg.n0 + 1);
  if (n > cfg.n0 + 2) throw ConfigError("evolve: only levels n0..n0+2 are simulated");
  const PotentialModel model = make_potential(ladder);
  const QuasiMode qm = make_quasimode(ladder, n, cfg.raw.quad_rel_tol);
  const double T = t_factor / (qm.lambda * qm.lambda);
  const DuhamelReport rep =
      duhamel_check(model, qm, T, cfg.raw.scan_per_wavelength, 0.1, samples);
  std::ostringstream body;
  body << "t,deviation,bound,mass_fraction\n";
  for (const auto& s : rep.samples)
    body << fmt17(s.t) << "," << fmt17(s.deviation) << "," << fmt17(s.bound) << ","
         << fmt17(s.mass_fraction) << "\n";
  emit(cfg, "evolve_" + std::to_string(n) + ".csv", body.str());
  return rep.pass ? 0 : 1;
}

int cmd_quotients(const ResolvedConfig& cfg, int lo, int hi, const std::string& family,
                  double q, double q0, double sigma) {
  Ladder ladder = make_ladder(cfg.profile, cfg.raw.d, cfg.raw.N, cfg.n0,
                              std::max(hi - cfg.n0 + 1, cfg.raw.level_span));
  QuotientFamily fam;
  if (family == "strichartz") fam = QuotientFamily::strichartz;
  else if (family == "smoothing") fam = QuotientFamily::smoothing;
  else if (family == "dispersion") fam = QuotientFamily::dispersion;
  else if (family == "loss_strichartz") fam = QuotientFamily::loss_strichartz;
  else if (family == "resolvent") fam = QuotientFamily::resolvent;
  else throw ConfigError("unknown family: " + family);

  const QuotientSeries series = build_series(ladder, fam, {q, q0, sigma}, lo, hi);
  std::ostringstream body;
  body << "family,q,q0,sigma,n,lambda_n,quotient\n";
  for (const auto& e : series.entries)
    body << family << "," << q << "," << q0 << "," << sigma << "," << e.n << ","
         << fmt17(e.lambda) << "," << fmt17(e.quotient) << "\n";
  emit(cfg, "quotients_" + family + ".csv", body.str());

  nlohmann::json reg;
  reg["family"] = family;
  reg["slope"] = series.regression.slope;
  reg["intercept"] = series.regression.intercept;
  reg["max_residual"] = series.regression.max_residual;
  reg["entries"] = series.entries.size();
  emit(cfg, "quotients_" + family + ".json", reg.dump(2) + "\n", false);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"construction and verification toolkit for a log-pole potential and its concentrating modes"};
  app.require_subcommand(1);
  app.fallthrough();

  CliOptions opt;
  app.add_option("--config", opt.config_path, "key=value config file");
  app.add_option("--d", opt.d, "space dimension");
  app.add_option("--N", opt.N, "decay order of the residual family");
  app.add_option("--M", opt.M, "profile constant or 'auto'");
  app.add_option("--variant", opt.variant, "standard | epsilon");
  app.add_option("--epsilon", opt.epsilon, "exponent for the epsilon variant");
  app.add_option("--n0", opt.n0, "first level or 'auto'");
  app.add_option("--levels", opt.levels, "level range A..B");
  app.add_option("--out", opt.out_dir, "output directory");
  app.add_option("--format", opt.format, "csv | json");

  auto* ladder_cmd = app.add_subcommand("ladder", "frequency ladder table");
  auto* potential_cmd = app.add_subcommand("potential", "sampled potential CSV");
  auto* quasimode_cmd = app.add_subcommand("quasimode", "sampled mode CSV");
  int qm_n = -1, qm_jorder = 2;
  quasimode_cmd->add_option("--n", qm_n, "level")->required();
  quasimode_cmd->add_option("--jorder", qm_jorder, "derivative columns");
  auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
  std::string suite = "all";
  verify_cmd->add_option("--suite", suite, "ode|partition|residual|norms|decay|sandwich|duhamel|quotients|epsilon|all");
  auto* evolve_cmd = app.add_subcommand("evolve", "time evolution of one mode");
  int ev_n = -1, ev_samples = 20;
  double ev_tf = 10.0;
  evolve_cmd->add_option("--n", ev_n, "level")->required();
  evolve_cmd->add_option("--T-factor", ev_tf, "horizon in units of 1/lambda^2");
  evolve_cmd->add_option("--samples", ev_samples, "time samples");
  auto* quotients_cmd = app.add_subcommand("quotients", "failure-quotient series");
  std::string family = "strichartz";
  double fq = 4.0, fq0 = 2.0, fsigma = 0.5;
  quotients_cmd->add_option("--family", family,
                            "strichartz|smoothing|dispersion|loss_strichartz|resolvent");
  quotients_cmd->add_option("--q", fq, "Lebesgue exponent");
  quotients_cmd->add_option("--q0", fq0, "reference exponent");
  quotients_cmd->add_option("--sigma", fsigma, "derivative order");

  try {
    app.parse(argc, argv);
    const ResolvedConfig cfg = resolve(build_config(opt));
    const auto [lo, hi] = parse_levels(opt.levels, cfg);
    if (*ladder_cmd) return cmd_ladder(cfg, lo, hi);
    if (*potential_cmd) return cmd_potential(cfg, lo, hi);
    if (*quasimode_cmd) return cmd_quasimode(cfg, qm_n, qm_jorder);
    if (*verify_cmd) return cmd_verify(cfg, suite);
    if (*evolve_cmd) return cmd_evolve(cfg, ev_n, ev_tf, ev_samples);
    if (*quotients_cmd) return cmd_quotients(cfg, lo, hi, family, fq, fq0, fsigma);
    return 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
