// hyers-lab: command-line driver for the stability experiments.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "hyerslab/commands.hpp"
#include "hyerslab/config.hpp"
#include "hyerslab/selftest.hpp"
#include "hyerslab/types.hpp"

namespace {

struct Overrides {
  std::optional<std::string> name, function, grid, delta, alpha, candidates, out, format, seed;
  std::optional<int> n, d, samples, kmax;
  std::optional<double> eps, r, c, beta, exponent, tol;
};

hyerslab::ScenarioConfig build_config(const std::string& path, const Overrides& o) {
  using namespace hyerslab;
  ScenarioConfig cfg = path.empty() ? ScenarioConfig{} : load_config(path);
  if (o.name) cfg.name = *o.name;
  if (o.n) cfg.n = *o.n;
  if (o.d) cfg.d = *o.d;
  if (o.eps) cfg.eps = *o.eps;
  if (o.r) cfg.r = *o.r;
  if (o.delta) cfg.deltas = parse_list(*o.delta);
  if (o.alpha) cfg.alphas = parse_list(*o.alpha);
  if (o.candidates) cfg.candidates = parse_list(*o.candidates);
  if (o.function) cfg.function.kind = *o.function;
  if (o.c) cfg.function.c = *o.c;
  if (o.beta) cfg.function.beta = *o.beta;
  if (o.exponent) cfg.function.exponent = *o.exponent;
  if (o.grid) cfg.grid = parse_grid(*o.grid);
  if (o.samples) cfg.samples = *o.samples;
  if (o.seed) {
    try {
      cfg.seed = std::stoull(*o.seed, nullptr, 0);
    } catch (const std::exception&) {
      throw ConfigError("bad seed '" + *o.seed + "'");
    }
  }
  if (o.kmax) cfg.k_max = *o.kmax;
  if (o.tol) cfg.tol = *o.tol;
  if (o.out) cfg.out = *o.out;
  if (o.format) cfg.format = *o.format;
  validate_config(cfg);
  return cfg;
}

int selftest_main(const hyerslab::ScenarioConfig& cfg, const std::string& fault) {
  using namespace hyerslab;
  const auto start = std::chrono::steady_clock::now();
  const auto results = hyerslab::run_selftest({cfg.seed, parse_fault(fault)});
  int failures = 0;
  for (const auto& r : results) {
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.name;
    if (!r.pass) std::cout << ": " << r.detail;
    std::cout << "\n";
    failures += r.pass ? 0 : 1;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << results.size() - failures << "/" << results.size() << " invariants passed in " << secs
            << " s\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stability experiments for symmetric multiadditive mappings", "hyers-lab"};
  std::string command, config_path, fault;
  Overrides o;

  app.add_option("command", command, "defect | approx | constants | threshold | selftest")
      ->required()
      ->check(CLI::IsMember({"defect", "approx", "constants", "threshold", "selftest"}));
  app.add_option("--config", config_path, "YAML scenario file")->check(CLI::ExistingFile);
  app.add_option("--name", o.name, "scenario id");
  app.add_option("--n", o.n, "arity of g");
  app.add_option("--d", o.d, "dimension of each point");
  app.add_option("--eps", o.eps, "control eps");
  app.add_option("--r", o.r, "control exponent");
  app.add_option("--delta", o.delta, "comma separated delta values");
  app.add_option("--alpha", o.alpha, "comma separated alpha values (threshold sweep)");
  app.add_option("--candidates", o.candidates, "comma separated slopes c of a = c x_1...x_n");
  app.add_option("--function", o.function, "exact | power_perturbed | abs_product | gajda_multi");
  app.add_option("--c", o.c, "multiadditive coefficient of g");
  app.add_option("--beta", o.beta, "perturbation amplitude of g");
  app.add_option("--exponent", o.exponent, "perturbation exponent of g (default: --r)");
  app.add_option("--grid", o.grid, "per-axis grid min:max:count");
  app.add_option("--samples", o.samples, "random sample count");
  app.add_option("--seed", o.seed, "PRNG seed (accepts 0x prefix)");
  app.add_option("--kmax", o.kmax, "maximum direct-method iterations");
  app.add_option("--tol", o.tol, "certified tail threshold");
  app.add_option("--out", o.out, "output path (default stdout)");
  app.add_option("--format", o.format, "csv | json");
  app.add_option("--inject-fault", fault, "selftest only: none | zeta-branch");

  CLI11_PARSE(app, argc, argv);

  try {
    const auto cfg = build_config(config_path, o);
    if (command == "selftest") return selftest_main(cfg, fault);

    hyerslab::Report report;
    if (command == "defect") report = hyerslab::cmd_defect(cfg);
    if (command == "approx") report = hyerslab::cmd_approx(cfg);
    if (command == "constants") report = hyerslab::cmd_constants(cfg);
    if (command == "threshold") report = hyerslab::cmd_threshold(cfg);

    auto emit = [&](std::ostream& out) {
      if (cfg.format == "json") {
        hyerslab::write_json(out, report);
      } else {
        hyerslab::write_csv(out, report);
      }
    };
    if (cfg.out.empty()) {
      emit(std::cout);
    } else {
      std::ofstream file(cfg.out, std::ios::binary);
      if (!file) throw hyerslab::ConfigError("cannot write '" + cfg.out + "'");
      emit(file);
      std::cerr << report.rows.size() << " rows, " << report.failures() << " failed -> " << cfg.out
                << "\n";
    }
    return report.failures() == 0 ? 0 : 1;
  } catch (const hyerslab::ConfigError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 64;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
