#include <algorithm>
#include <sstream>

#include "doctest.h"
#include "hyerslab/commands.hpp"
#include "hyerslab/config.hpp"
#include "hyerslab/types.hpp"
#include "json.hpp"

using namespace hyerslab;

TEST_CASE("config parsing with nested sections") {
  const auto cfg = parse_config(R"(
name: demo
n: 3
eps: 0.5
r: 2
deltas: [1, 10]
function:
  kind: abs_product
  eps: 2
grid: {min: -1, max: 2, count: 4}
seed: 0x10
)");
  CHECK(cfg.name == "demo");
  CHECK(cfg.n == 3);
  CHECK(cfg.r == 2.0);
  CHECK(cfg.deltas == std::vector<double>{1, 10});
  CHECK(cfg.function.kind == "abs_product");
  CHECK(cfg.function.eps == 2.0);
  CHECK(cfg.grid.count == 4);
  CHECK(cfg.grid.axis() == std::vector<double>{-1, 0, 1, 2});
  CHECK(cfg.seed == 16);
  CHECK(cfg.d == 1);
}

TEST_CASE("config round trip through the canonical form") {
  ScenarioConfig cfg;
  cfg.name = "rt \"quoted\"";
  cfg.eps = 0.1;
  cfg.r = 1.0 / 3.0;
  cfg.alphas = {0.1, 0.2};
  cfg.function.exponent = 0.7;
  cfg.out = "x.csv";
  const auto text = serialize_config(cfg);
  const auto back = parse_config(text);
  CHECK(back == cfg);
  CHECK(serialize_config(back) == text);
  CHECK(config_hash(back) == config_hash(cfg));
  CHECK(serialize_config(parse_config("")) == serialize_config(ScenarioConfig{}));
}

TEST_CASE("config errors") {
  CHECK_THROWS_AS(parse_config("bogus: 1"), ConfigError);
  CHECK_THROWS_AS(parse_config("function: {colour: red}"), ConfigError);
  CHECK_THROWS_AS(parse_config("n: 0"), ConfigError);
  CHECK_THROWS_AS(parse_config("n: two"), ConfigError);
  CHECK_THROWS_AS(parse_config("eps: -1"), ConfigError);
  CHECK_THROWS_AS(parse_config("samples: 0"), ConfigError);
  CHECK_THROWS_AS(parse_config("grid: {count: 0}"), ConfigError);
  CHECK_THROWS_AS(parse_config("format: xml"), ConfigError);
  CHECK_THROWS_AS(parse_config("seed: banana"), ConfigError);
  CHECK_THROWS_AS(parse_config("[1, 2]"), ConfigError);
  CHECK_THROWS_AS(load_config("/nonexistent/file.yaml"), ConfigError);
  CHECK(parse_grid("-4:4:9") == GridSpec{-4, 4, 9});
  CHECK_THROWS_AS(parse_grid("-4:4"), ConfigError);
  CHECK(parse_list("1, 2.5,-3") == std::vector<double>{1, 2.5, -3});
  CHECK_THROWS_AS(parse_list("1,x"), ConfigError);
}

TEST_CASE("defect command") {
  ScenarioConfig cfg;
  cfg.function.kind = "abs_product";
  cfg.eps = 1.0;
  cfg.r = 1.0;
  cfg.samples = 10000;
  auto rep = cmd_defect(cfg);
  CHECK(rep.rows.size() == 10000);
  CHECK(rep.failures() == 0);

  cfg.function.kind = "exact";
  cfg.r = 0.3;
  rep = cmd_defect(cfg);
  CHECK(rep.failures() == 0);
  for (const auto& row : rep.rows) CHECK(row.values.at("defect") == doctest::Approx(0.0).scale(1e3));

  // constant control against a linearly growing defect
  cfg.function.kind = "abs_product";
  cfg.r = 0.0;
  cfg.grid = {-1000, 1000, 2};
  cfg.samples = 2000;
  CHECK(cmd_defect(cfg).failures() > 0);
}

TEST_CASE("approx command: both branches and the threshold refusal") {
  ScenarioConfig cfg;
  cfg.eps = 0.1;
  cfg.r = 0.5;
  auto rep = cmd_approx(cfg);
  CHECK(rep.rows.size() == 82);
  CHECK(rep.failures() == 0);
  CHECK(rep.rows.back().scenario == "scenario/summary");
  CHECK(rep.rows.back().values.at("slack") >= 0);
  CHECK_FALSE(rep.flags.empty());

  cfg.r = 2.0;
  rep = cmd_approx(cfg);
  CHECK(rep.failures() == 0);
  CHECK(std::find(rep.header.begin(), rep.header.end(), "branch: minus") != rep.header.end());

  cfg.function.kind = "exact";
  rep = cmd_approx(cfg);
  for (std::size_t i = 0; i + 1 < rep.rows.size(); ++i) {
    const auto& v = rep.rows[i].values;
    CHECK(rel_close(v.at("a"), v.at("g"), 1e-12));
  }

  cfg.r = 1.0;
  CHECK_THROWS_AS(cmd_approx(cfg), ThresholdError);

  // hypothesis failure: control too small for the perturbation
  cfg.function.kind = "power_perturbed";
  cfg.r = 0.5;
  cfg.eps = 0.01;
  CHECK_THROWS_AS(cmd_approx(cfg), ContractViolation);
}

TEST_CASE("constants command") {
  ScenarioConfig cfg;
  const auto rep = cmd_constants(cfg);
  CHECK(rep.rows.size() == 45);
  CHECK(rep.failures() == 0);
  REQUIRE(rep.flags.size() == 1);
  for (const auto& row : rep.rows) {
    const int n = static_cast<int>(row.values.at("n"));
    CHECK((row.values.at("printed_agrees") == 1.0) == (n == 1));
    if (n == 1) CHECK(row.values.at("C_definitional") == row.values.at("C_classical"));
    if (n == 2 && row.values.at("r") == 0.0) {
      CHECK(row.values.at("C_definitional") == doctest::Approx(2.0));
      CHECK(row.values.at("C_printed") == doctest::Approx(1.0));
    }
  }
  cfg.r_values = {0.5, 1.0};
  CHECK_THROWS_AS(cmd_constants(cfg), ConfigError);
}

TEST_CASE("threshold command") {
  ScenarioConfig cfg;
  cfg.eps = 6.0;
  cfg.deltas = {1, 10, 100};
  cfg.samples = 2000;
  auto rep = cmd_threshold(cfg);
  CHECK(rep.failures() == 0);
  std::size_t witnesses = 0;
  for (const auto& row : rep.rows)
    if (row.scenario == "witness") ++witnesses;
  CHECK(witnesses == 6 * 3);  // five listed slopes plus the fitted one

  cfg.n = 1;
  cfg.eps = 1.0;
  cfg.candidates = {0, 1, -1};
  rep = cmd_threshold(cfg);
  CHECK(rep.failures() == 0);
  CHECK(rep.rows.front().scenario == "cauchy_defect");

  cfg.d = 2;
  CHECK_THROWS_AS(cmd_threshold(cfg), ConfigError);
}

TEST_CASE("reports are deterministic and well formed") {
  ScenarioConfig cfg;
  cfg.function.kind = "abs_product";
  cfg.r = 1.0;
  cfg.samples = 50;
  std::ostringstream a, b;
  write_csv(a, cmd_defect(cfg));
  write_csv(b, cmd_defect(cfg));
  CHECK(a.str() == b.str());
  CHECK(a.str().find("# seed: 0x5EED") != std::string::npos);
  CHECK(a.str().find("scenario,point,defect,phi,slack,pass\n") != std::string::npos);

  std::ostringstream j;
  write_json(j, cmd_defect(cfg));
  const auto doc = nlohmann::json::parse(j.str());
  CHECK(doc["rows"].size() == 50);
  CHECK(doc["header"]["command"] == "defect");
  CHECK(doc["rows"][0]["point"].size() == 3);

  cfg.seed = 1;
  std::ostringstream c;
  write_csv(c, cmd_defect(cfg));
  CHECK(c.str() != a.str());

  CHECK(format_real(0.1) == "0.10000000000000001");
}
