#include "hyerslab/commands.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "hyerslab/approximate.hpp"
#include "hyerslab/control.hpp"
#include "hyerslab/gajda.hpp"
#include "hyerslab/sampling.hpp"

namespace hyerslab {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

Report start_report(const std::string& command, const ScenarioConfig& cfg) {
  Report rep;
  rep.command = command;
  std::ostringstream hash, seed;
  hash << std::hex << config_hash(cfg);
  seed << "0x" << std::hex << std::uppercase << cfg.seed;
  rep.header = {std::string("tool: ") + kToolVersion, "scenario: " + cfg.name,
                "config_hash: " + hash.str(), "seed: " + seed.str(),
                std::string("prng: ") + kPrngName};
  return rep;
}

std::vector<double> flatten(const Tuple& t) {
  std::vector<double> out;
  for (const auto& p : t) out.insert(out.end(), p.begin(), p.end());
  return out;
}

/// All count^(n d) grid tuples, last coordinate varying fastest.
std::vector<Tuple> grid_tuples(const GridSpec& grid, int n, int d) {
  const auto axis = grid.axis();
  const std::size_t dims = static_cast<std::size_t>(n * d);
  std::vector<std::size_t> idx(dims, 0);
  std::vector<Tuple> out;
  while (true) {
    Tuple t(static_cast<std::size_t>(n), Point(static_cast<std::size_t>(d)));
    for (std::size_t i = 0; i < dims; ++i) t[i / d][i % d] = axis[idx[i]];
    out.push_back(std::move(t));
    std::size_t pos = dims;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < axis.size()) break;
      idx[pos] = 0;
      if (pos == 0) return out;
    }
    if (dims == 0) return out;
  }
}

Tuple random_tuple(Rng& rng, std::size_t length, int d, const GridSpec& box) {
  Tuple t(length, Point(static_cast<std::size_t>(d)));
  for (auto& p : t)
    for (auto& v : p) v = rng.uniform(box.min, box.max);
  return t;
}

/// The exactly n-additive part of the catalog function, when it has one.
std::optional<double> known_additive_part(const SymmetricSpec& spec, const Tuple& y) {
  double c = 0.0;
  if (auto* e = std::get_if<ExactMultiadditive>(&spec.kind)) {
    c = e->c;
  } else if (auto* p = std::get_if<PowerPerturbed>(&spec.kind)) {
    c = p->c;
  } else {
    return std::nullopt;
  }
  return evaluate_symmetric(SymmetricSpec{spec.n, spec.d, ExactMultiadditive{c}}, y);
}

std::string constants_flag(int n, double r) {
  std::ostringstream msg;
  msg.precision(17);
  msg << "printed corollary constant 2^{(n-1)(r-1)+1}/|2^r-2| differs from the summed r_n phi "
         "coefficient for n >= 2 (n="
      << n << " r=" << r << ": definitional " << stability_constant(n, r) << " vs printed "
      << printed_stability_constant(n, r) << ")";
  return msg.str();
}

}  // namespace

SymmetricSpec function_from_config(const ScenarioConfig& cfg) {
  SymmetricSpec spec;
  spec.n = cfg.n;
  spec.d = cfg.d;
  const auto& f = cfg.function;
  const double eps = f.eps.value_or(cfg.eps);
  if (f.kind == "exact") {
    spec.kind = ExactMultiadditive{f.c};
  } else if (f.kind == "power_perturbed") {
    spec.kind = PowerPerturbed{f.c, f.beta, f.exponent.value_or(cfg.r)};
  } else if (f.kind == "abs_product") {
    spec.kind = AbsProduct{eps};
  } else if (f.kind == "gajda_multi") {
    spec.kind = GajdaMulti{eps};
  } else {
    throw ConfigError("unknown function kind '" + f.kind + "'");
  }
  validate(spec);
  return spec;
}

Report cmd_defect(const ScenarioConfig& cfg) {
  validate_config(cfg);
  const auto spec = function_from_config(cfg);
  const PowerControl phi{cfg.n, cfg.eps, cfg.r};
  Report rep = start_report("defect", cfg);
  rep.header.push_back("function: " + describe(spec));
  rep.header.push_back("control: power(eps=" + format_real(cfg.eps) + ", r=" + format_real(cfg.r) + ")");
  rep.columns = {"defect", "phi", "slack"};

  Rng rng(cfg.seed);
  for (int s = 0; s < cfg.samples; ++s) {
    const auto z = random_tuple(rng, static_cast<std::size_t>(cfg.n) + 1, cfg.d, cfg.grid);
    const double dz = defect(spec, z);
    const double pz = evaluate_control(phi, z);
    const double allowance = 64 * std::numeric_limits<double>::epsilon() * defect_magnitude(spec, z);
    ReportRow row;
    row.scenario = cfg.name;
    row.point = flatten(z);
    row.values = {{"defect", dz}, {"phi", pz}, {"slack", pz - std::fabs(dz)}};
    row.pass = std::fabs(dz) <= pz + allowance;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

Report cmd_approx(const ScenarioConfig& cfg) {
  validate_config(cfg);
  const auto spec = function_from_config(cfg);
  const PowerControl phi{cfg.n, cfg.eps, cfg.r};
  const Mode mode = mode_for(cfg.r);
  const DirectMethodConfig dmc{cfg.k_max, cfg.tol};

  Report rep = start_report("approx", cfg);
  rep.header.push_back("function: " + describe(spec));
  rep.header.push_back("control: power(eps=" + format_real(cfg.eps) + ", r=" + format_real(cfg.r) + ")");
  rep.header.push_back(std::string("branch: ") + to_string(mode));
  rep.columns = {"g",        "a",           "bound",          "abs_err",         "slack",
                 "iterations", "certified", "additive_part", "err_vs_additive", "C_definitional",
                 "C_printed"};

  const double c_def = stability_constant(cfg.n, cfg.r);
  const double c_printed = printed_stability_constant(cfg.n, cfg.r);
  if (cfg.n >= 2) rep.flags.push_back(constants_flag(cfg.n, cfg.r));

  const auto points = grid_tuples(cfg.grid, cfg.n, cfg.d);
  if (cfg.hypothesis_samples > 0) {
    Tuple corner(static_cast<std::size_t>(cfg.n),
                 Point(static_cast<std::size_t>(cfg.d),
                       std::max(std::fabs(cfg.grid.min), std::fabs(cfg.grid.max))));
    check_defect_hypothesis(spec, phi, corner,
                            HypothesisCheck{static_cast<std::size_t>(cfg.hypothesis_samples)});
  }

  double worst_slack = std::numeric_limits<double>::infinity();
  int max_iter = 0;
  for (const auto& y : points) {
    const auto res = approximate(spec, phi, y, mode, dmc, std::nullopt);
    ReportRow row;
    row.scenario = cfg.name;
    row.point = flatten(y);
    const double err = std::fabs(res.g - res.value);
    const double slack = res.bound - err;
    const double tol = 1e-9 * std::max(1.0, std::fabs(res.g));
    row.values = {{"g", res.g},
                  {"a", res.value},
                  {"bound", res.bound},
                  {"abs_err", err},
                  {"slack", slack},
                  {"iterations", res.iterations_used},
                  {"certified", res.certified ? 1.0 : 0.0},
                  {"C_definitional", c_def},
                  {"C_printed", c_printed}};
    row.pass = res.certified && slack >= -tol;
    if (auto exact = known_additive_part(spec, y)) {
      const double e = std::fabs(res.value - *exact);
      row.values["additive_part"] = *exact;
      row.values["err_vs_additive"] = e;
      row.pass = row.pass && e <= res.remaining + tol;
    }
    worst_slack = std::min(worst_slack, slack);
    max_iter = std::max(max_iter, res.iterations_used);
    rep.rows.push_back(std::move(row));
  }

  ReportRow summary;
  summary.scenario = cfg.name + "/summary";
  summary.values = {{"slack", points.empty() ? kNaN : worst_slack},
                    {"iterations", max_iter},
                    {"C_definitional", c_def},
                    {"C_printed", c_printed}};
  summary.pass = rep.failures() == 0;
  rep.rows.push_back(std::move(summary));
  return rep;
}

Report cmd_constants(const ScenarioConfig& cfg) {
  validate_config(cfg);
  Report rep = start_report("constants", cfg);
  rep.header.push_back("reference point: (1, ..., 1), eps = " + format_real(cfg.eps));
  rep.columns = {"n",          "r",          "kappa",        "printed_fold_coef", "C_definitional",
                 "C_printed",  "C_classical", "fold",        "series",            "closed_form",
                 "printed_agrees"};
  bool flagged = false;
  for (int n : cfg.n_values) {
    for (double r : cfg.r_values) {
      if (r == 1.0) throw ConfigError("constants: the r grid must exclude the threshold r = 1");
      const PowerControl phi{n, cfg.eps, r};
      const Mode mode = mode_for(r);
      const Tuple ones(static_cast<std::size_t>(n), Point(static_cast<std::size_t>(cfg.d), 1.0));
      const double one_norm = norm(ones[0]);
      double prod = 1.0;
      for (int i = 0; i < n; ++i) prod *= std::pow(one_norm, r);

      const double k = kappa(n, r);
      const double c_def = stability_constant(n, r);
      const double c_pr = printed_stability_constant(n, r);
      const double fold = fold_control(phi, ones);
      const double series = stabilizer_series(phi, ones, mode, 40).total();
      const double expected = cfg.eps * c_def * prod;
      const bool agrees = rel_close(c_def, c_pr, 1e-12);

      ReportRow row;
      row.scenario = cfg.name;
      row.point = flatten(ones);
      row.values = {{"n", n},
                    {"r", r},
                    {"kappa", k},
                    {"printed_fold_coef", printed_fold_coefficient(n, r)},
                    {"C_definitional", c_def},
                    {"C_printed", c_pr},
                    {"fold", fold},
                    {"series", series},
                    {"closed_form", expected},
                    {"printed_agrees", agrees ? 1.0 : 0.0}};
      if (n == 1) row.values["C_classical"] = 2.0 / std::fabs(2.0 - std::pow(2.0, r));
      row.pass = rel_close(series, expected, 1e-10) && rel_close(fold, cfg.eps * k * prod, 1e-10);
      if (!agrees && !flagged) {
        rep.flags.push_back(constants_flag(n, r));
        flagged = true;
      }
      rep.rows.push_back(std::move(row));
    }
  }
  return rep;
}

namespace {

void threshold_nonuniqueness(const ScenarioConfig& cfg, Report& rep) {
  for (double delta : cfg.deltas) {
    std::vector<double> alphas = cfg.alphas;
    if (alphas.empty()) {
      const double lo = cfg.eps / 2 - 1.5 * delta, hi = cfg.eps / 2 + 1.5 * delta;
      for (int i = 0; i < 9; ++i) alphas.push_back(lo + (hi - lo) * i / 8);
    }
    for (double alpha : alphas) {
      const auto v = nonuniqueness_family(cfg.n, cfg.eps, delta, alpha, 4096, cfg.seed);
      ReportRow row;
      row.scenario = "nonuniqueness";
      row.values = {{"alpha", alpha},
                    {"delta", delta},
                    {"valid", v.valid ? 1.0 : 0.0},
                    {"valid_positive_orthant", v.positive_orthant ? 1.0 : 0.0},
                    {"in_printed_interval",
                     (alpha >= -delta + cfg.eps / 2 && alpha <= delta + cfg.eps / 2) ? 1.0 : 0.0},
                    {"worst_ratio", v.worst_ratio}};
      row.pass = v.sampler_agrees;
      rep.rows.push_back(std::move(row));
    }
  }
}

void threshold_witnesses(const ScenarioConfig& cfg, const std::vector<double>& candidates,
                         Report& rep) {
  const int n = cfg.n;
  for (double c : candidates) {
    AdditiveCandidate m;
    SymmetricMap a = [c](const std::vector<double>& x) {
      double p = c;
      for (double xi : x) p *= xi;
      return p;
    };
    if (n == 1) {
      m = linear_candidate(c);
    } else {
      m = reduce_to_additive(a, n, cfg.eps);
    }
    for (double delta : cfg.deltas) {
      const auto w = find_witness(m, cfg.eps, delta);
      // witness inequality checked on g itself at (1, ..., 1, x*)
      std::vector<double> at(static_cast<std::size_t>(n), 1.0);
      at.back() = w.x_star;
      const double g = n == 1 ? gajda_exact(w.x_star, cfg.eps) : gajda_multi(at, cfg.eps);
      const double direct = std::fabs(g - a(at)) / (delta * std::fabs(w.x_star));
      ReportRow row;
      row.scenario = "witness";
      row.point = {w.x_star};
      row.values = {{"candidate_c", c}, {"slope", m.slope}, {"delta", delta},
                    {"lhs", w.lhs},     {"rhs", w.rhs},     {"ratio", w.ratio},
                    {"depth", w.depth}, {"analytic", w.analytic ? 1.0 : 0.0},
                    {"g_violation_ratio", direct}};
      row.pass = w.valid() && direct > 1.0;
      rep.rows.push_back(std::move(row));
    }
  }
}

}  // namespace

Report cmd_threshold(const ScenarioConfig& cfg) {
  validate_config(cfg);
  if (cfg.d != 1) throw ConfigError("threshold: the counterexamples live on R (d = 1)");
  Report rep = start_report("threshold", cfg);
  rep.header.push_back("eps: " + format_real(cfg.eps));
  rep.columns = {"alpha",     "delta",      "valid", "valid_positive_orthant", "in_printed_interval",
                 "worst_ratio", "samples",  "violations", "candidate_c",          "slope",
                 "lhs",       "rhs",        "ratio", "depth",                  "analytic",
                 "g_violation_ratio"};
  rep.flags.push_back("zeta third branch read as (-inf, -1]; printed as (-inf, 1]");

  Rng rng(cfg.seed);
  const double box = std::max(std::fabs(cfg.grid.min), std::fabs(cfg.grid.max));
  std::vector<double> candidates = cfg.candidates;

  if (cfg.n == 1) {
    // Cauchy defect of f_G against eps(|x| + |y|)
    int violations = 0;
    double worst = 0.0;
    for (int s = 0; s < cfg.samples; ++s) {
      const double x = rng.uniform(-box, box), y = rng.uniform(-box, box);
      const double bound = cfg.eps * (std::fabs(x) + std::fabs(y));
      const double dv = std::fabs(cauchy_defect(x, y, cfg.eps));
      if (bound > 0) worst = std::max(worst, dv / bound);
      if (dv > bound * (1 + 1e-12)) ++violations;
    }
    ReportRow row;
    row.scenario = "cauchy_defect";
    row.values = {{"samples", cfg.samples}, {"violations", violations}, {"worst_ratio", worst}};
    row.pass = violations == 0;
    rep.rows.push_back(std::move(row));
  } else {
    threshold_nonuniqueness(cfg, rep);
    bool interval_flag = false;
    for (const auto& row : rep.rows) {
      if (row.values.at("in_printed_interval") != row.values.at("valid")) interval_flag = true;
    }
    if (interval_flag) {
      rep.flags.push_back(
          "printed non-uniqueness interval [-delta + eps/2, delta + eps/2] holds only on the "
          "positive orthant; on all of R^n a_alpha is admissible iff eps/2 + |alpha| <= delta");
    }

    // Defect bound for the n-variable Gajda function
    const SymmetricSpec gspec{cfg.n, 1, GajdaMulti{cfg.eps}};
    int violations = 0;
    double worst = 0.0;
    for (int s = 0; s < cfg.samples; ++s) {
      Tuple z(static_cast<std::size_t>(cfg.n) + 1, Point(1));
      for (auto& p : z) p[0] = rng.uniform(-box, box);
      const double bound =
          evaluate_control(PowerControl{cfg.n, cfg.eps, 1.0}, z);
      const double dv = std::fabs(defect(gspec, z));
      if (bound > 0) worst = std::max(worst, dv / bound);
      const double allowance = 64 * std::numeric_limits<double>::epsilon() * defect_magnitude(gspec, z);
      if (dv > bound + allowance) ++violations;
    }
    ReportRow row;
    row.scenario = "gajda_multi_defect";
    row.values = {{"samples", cfg.samples}, {"violations", violations}, {"worst_ratio", worst}};
    row.pass = violations == 0;
    rep.rows.push_back(std::move(row));

    if (cfg.fit_candidate) {
      // least-squares c for g ~ c x_1 ... x_n over the grid
      double num = 0.0, den = 0.0;
      for (const auto& y : grid_tuples(cfg.grid, cfg.n, 1)) {
        std::vector<double> x;
        double p = 1.0;
        for (const auto& pt : y) {
          x.push_back(pt[0]);
          p *= pt[0];
        }
        num += gajda_multi(x, cfg.eps) * p;
        den += p * p;
      }
      if (den > 0) candidates.push_back(num / den);
    }
  }
  threshold_witnesses(cfg, candidates, rep);
  return rep;
}

}  // namespace hyerslab
