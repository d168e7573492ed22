#include "hyerslab/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "hyerslab/report.hpp"
#include "hyerslab/types.hpp"

namespace hyerslab {

std::vector<double> GridSpec::axis() const {
  std::vector<double> pts;
  if (count == 1) return {0.5 * (min + max)};
  for (int i = 0; i < count; ++i) pts.push_back(min + (max - min) * i / (count - 1));
  return pts;
}

namespace {

template <class T>
T get(const YAML::Node& node, const std::string& key) {
  try {
    return node.as<T>();
  } catch (const YAML::Exception&) {
    throw ConfigError("config: bad value for '" + key + "'");
  }
}

std::uint64_t parse_seed(const std::string& text) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(text, &used, 0);
    if (used != text.size()) throw ConfigError("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config: bad seed '" + text + "'");
  }
}

void reject_unknown(const YAML::Node& node, const std::set<std::string>& known,
                    const std::string& section) {
  for (const auto& kv : node) {
    const auto key = kv.first.as<std::string>();
    if (!known.count(key)) throw ConfigError("config: unknown key '" + section + key + "'");
  }
}

}  // namespace

ScenarioConfig parse_config(const std::string& yaml_text) {
  YAML::Node root;
  try {
    root = YAML::Load(yaml_text);
  } catch (const YAML::Exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  ScenarioConfig cfg;
  if (root.IsNull()) return cfg;
  if (!root.IsMap()) throw ConfigError("config: top level must be a mapping");

  reject_unknown(root,
                 {"name", "n", "d", "eps", "r", "deltas", "alphas", "candidates", "fit_candidate",
                  "n_values", "r_values", "function", "grid", "samples", "seed", "k_max", "tol",
                  "hypothesis_samples", "out", "format"},
                 "");
  if (auto v = root["name"]) cfg.name = get<std::string>(v, "name");
  if (auto v = root["n"]) cfg.n = get<int>(v, "n");
  if (auto v = root["d"]) cfg.d = get<int>(v, "d");
  if (auto v = root["eps"]) cfg.eps = get<double>(v, "eps");
  if (auto v = root["r"]) cfg.r = get<double>(v, "r");
  if (auto v = root["deltas"]) cfg.deltas = get<std::vector<double>>(v, "deltas");
  if (auto v = root["alphas"]) cfg.alphas = get<std::vector<double>>(v, "alphas");
  if (auto v = root["candidates"]) cfg.candidates = get<std::vector<double>>(v, "candidates");
  if (auto v = root["fit_candidate"]) cfg.fit_candidate = get<bool>(v, "fit_candidate");
  if (auto v = root["n_values"]) cfg.n_values = get<std::vector<int>>(v, "n_values");
  if (auto v = root["r_values"]) cfg.r_values = get<std::vector<double>>(v, "r_values");
  if (auto f = root["function"]) {
    if (!f.IsMap()) throw ConfigError("config: 'function' must be a mapping");
    reject_unknown(f, {"kind", "c", "beta", "exponent", "eps"}, "function.");
    if (auto v = f["kind"]) cfg.function.kind = get<std::string>(v, "function.kind");
    if (auto v = f["c"]) cfg.function.c = get<double>(v, "function.c");
    if (auto v = f["beta"]) cfg.function.beta = get<double>(v, "function.beta");
    if (auto v = f["exponent"]; v && !v.IsNull())
      cfg.function.exponent = get<double>(v, "function.exponent");
    if (auto v = f["eps"]; v && !v.IsNull()) cfg.function.eps = get<double>(v, "function.eps");
  }
  if (auto g = root["grid"]) {
    if (!g.IsMap()) throw ConfigError("config: 'grid' must be a mapping");
    reject_unknown(g, {"min", "max", "count"}, "grid.");
    if (auto v = g["min"]) cfg.grid.min = get<double>(v, "grid.min");
    if (auto v = g["max"]) cfg.grid.max = get<double>(v, "grid.max");
    if (auto v = g["count"]) cfg.grid.count = get<int>(v, "grid.count");
  }
  if (auto v = root["samples"]) cfg.samples = get<int>(v, "samples");
  if (auto v = root["seed"]) cfg.seed = parse_seed(get<std::string>(v, "seed"));
  if (auto v = root["k_max"]) cfg.k_max = get<int>(v, "k_max");
  if (auto v = root["tol"]) cfg.tol = get<double>(v, "tol");
  if (auto v = root["hypothesis_samples"]) cfg.hypothesis_samples = get<int>(v, "hypothesis_samples");
  if (auto v = root["out"]) cfg.out = get<std::string>(v, "out");
  if (auto v = root["format"]) cfg.format = get<std::string>(v, "format");
  validate_config(cfg);
  return cfg;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

namespace {

std::string real_list(const std::vector<double>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + format_real(v[i]);
  return s + "]";
}

}  // namespace

std::string serialize_config(const ScenarioConfig& cfg) {
  std::ostringstream out;
  auto quoted = [](const std::string& s) {
    std::string q = "\"";
    for (char ch : s) {
      if (ch == '"' || ch == '\\') q += '\\';
      q += ch;
    }
    return q + "\"";
  };
  out << "name: " << quoted(cfg.name) << "\n";
  out << "n: " << cfg.n << "\n";
  out << "d: " << cfg.d << "\n";
  out << "eps: " << format_real(cfg.eps) << "\n";
  out << "r: " << format_real(cfg.r) << "\n";
  out << "deltas: " << real_list(cfg.deltas) << "\n";
  out << "alphas: " << real_list(cfg.alphas) << "\n";
  out << "candidates: " << real_list(cfg.candidates) << "\n";
  out << "fit_candidate: " << (cfg.fit_candidate ? "true" : "false") << "\n";
  out << "n_values: [";
  for (std::size_t i = 0; i < cfg.n_values.size(); ++i) out << (i ? ", " : "") << cfg.n_values[i];
  out << "]\n";
  out << "r_values: " << real_list(cfg.r_values) << "\n";
  out << "function:\n";
  out << "  kind: " << cfg.function.kind << "\n";
  out << "  c: " << format_real(cfg.function.c) << "\n";
  out << "  beta: " << format_real(cfg.function.beta) << "\n";
  out << "  exponent: " << (cfg.function.exponent ? format_real(*cfg.function.exponent) : "null") << "\n";
  out << "  eps: " << (cfg.function.eps ? format_real(*cfg.function.eps) : "null") << "\n";
  out << "grid:\n";
  out << "  min: " << format_real(cfg.grid.min) << "\n";
  out << "  max: " << format_real(cfg.grid.max) << "\n";
  out << "  count: " << cfg.grid.count << "\n";
  out << "samples: " << cfg.samples << "\n";
  std::ostringstream seed;
  seed << "0x" << std::hex << std::uppercase << cfg.seed;
  out << "seed: " << seed.str() << "\n";
  out << "k_max: " << cfg.k_max << "\n";
  out << "tol: " << format_real(cfg.tol) << "\n";
  out << "hypothesis_samples: " << cfg.hypothesis_samples << "\n";
  out << "out: " << quoted(cfg.out) << "\n";
  out << "format: " << cfg.format << "\n";
  return out.str();
}

void validate_config(const ScenarioConfig& cfg) {
  auto fail = [](const std::string& m) { throw ConfigError("config: " + m); };
  if (cfg.n < 1) fail("n must be >= 1");
  if (cfg.d < 1) fail("d must be >= 1");
  if (!(cfg.eps > 0)) fail("eps must be > 0");
  if (cfg.samples < 1) fail("samples must be >= 1");
  if (cfg.grid.count < 1) fail("grid.count must be >= 1");
  if (!(cfg.grid.min <= cfg.grid.max)) fail("grid.min must not exceed grid.max");
  if (cfg.k_max < 1) fail("k_max must be >= 1");
  if (!(cfg.tol > 0)) fail("tol must be > 0");
  if (cfg.hypothesis_samples < 0) fail("hypothesis_samples must be >= 0");
  for (double dl : cfg.deltas)
    if (!(dl >= 0)) fail("deltas must be nonnegative");
  for (int nv : cfg.n_values)
    if (nv < 1) fail("n_values must be >= 1");
  if (cfg.format != "csv" && cfg.format != "json") fail("format must be csv or json");
  static const std::set<std::string> kinds{"exact", "power_perturbed", "abs_product", "gajda_multi"};
  if (!kinds.count(cfg.function.kind)) fail("unknown function.kind '" + cfg.function.kind + "'");
  if (cfg.function.eps && !(*cfg.function.eps > 0)) fail("function.eps must be > 0");
}

std::uint64_t config_hash(const ScenarioConfig& cfg) {
  ScenarioConfig keyed = cfg;
  keyed.out.clear();  // where a report goes does not change its content
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : serialize_config(keyed)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

GridSpec parse_grid(const std::string& text) {
  GridSpec g;
  char c1 = 0, c2 = 0;
  std::istringstream in(text);
  if (!(in >> g.min >> c1 >> g.max >> c2 >> g.count) || c1 != ':' || c2 != ':' || !in.eof())
    throw ConfigError("grid must look like min:max:count, got '" + text + "'");
  return g;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      while (used < item.size() && item[used] == ' ') ++used;
      if (used != item.size()) throw ConfigError("");
    } catch (const std::exception&) {
      throw ConfigError("bad number '" + item + "' in list '" + text + "'");
    }
  }
  return out;
}

}  // namespace hyerslab
