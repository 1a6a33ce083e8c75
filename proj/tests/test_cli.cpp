#include "darkgate/commands.hpp"
#include "darkgate/config.hpp"
#include "darkgate/report.hpp"

#include <doctest.h>

#include <charconv>
#include <cstdlib>
#include <sys/wait.h>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

using namespace darkgate;

namespace {

ExperimentConfig small_config() {
  ExperimentConfig config;
  config.omega_t = 20.0;
  config.steps_per_stage = 50;
  config.path_samples = 51;
  config.scan_grid = {10.0, 20.0};
  return config;
}

ordered_json without_wall_clock(ordered_json j) {
  j.erase("wall_clock_seconds");
  return j;
}

// Minimal structural validator for the subset of JSON Schema the docs use:
// type, required, properties, items.
bool matches_schema(const nlohmann::json& value, const nlohmann::json& schema,
                    std::string* error) {
  if (schema.contains("type")) {
    const std::string type = schema["type"].get<std::string>();
    const bool ok =
        (type == "object" && value.is_object()) ||
        (type == "array" && value.is_array()) ||
        (type == "string" && value.is_string()) ||
        (type == "number" && (value.is_number())) ||
        (type == "integer" && value.is_number_integer()) ||
        (type == "boolean" && value.is_boolean()) ||
        (type == "null" && value.is_null());
    if (!ok) {
      *error = "wrong type, expected " + type + ": " + value.dump();
      return false;
    }
  }
  if (schema.contains("required")) {
    for (const auto& key : schema["required"]) {
      if (!value.contains(key.get<std::string>())) {
        *error = "missing required key " + key.get<std::string>();
        return false;
      }
    }
  }
  if (schema.contains("properties") && value.is_object()) {
    for (const auto& [key, sub] : schema["properties"].items()) {
      if (value.contains(key) &&
          !matches_schema(value.at(key), sub, error)) {
        *error = "at '" + key + "': " + *error;
        return false;
      }
    }
  }
  if (schema.contains("items") && value.is_array()) {
    for (const auto& item : value) {
      if (!matches_schema(item, schema["items"], error)) {
        return false;
      }
    }
  }
  return true;
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  return nlohmann::json::parse(in);
}

std::string docs_path(const char* name) {
  return std::string(DARKGATE_SOURCE_DIR) + "/docs/" + name;
}

}  // namespace

TEST_CASE("config defaults and validation") {
  ExperimentConfig config;
  CHECK_NOTHROW(config.validate());
  CHECK(config.omega == 1.0);
  CHECK(config.omega_t == 200.0);
  CHECK(config.steps_per_stage == 4000);
  CHECK(config.path_samples == 2001);
  CHECK(config.seed == 42);

  config.omega = -1.0;
  CHECK_THROWS_WITH_AS(config.validate(), "config field 'omega' must be > 0",
                       ConfigError);

  config = ExperimentConfig{};
  config.scan_grid = {20.0, 10.0};
  CHECK_THROWS_AS(config.validate(), ConfigError);
  config.scan_grid = {};
  CHECK_NOTHROW(config.validate());
}

TEST_CASE("config json parsing") {
  const ExperimentConfig config = parse_config_json(
      R"({"omega": 2.0, "omega_t": 50, "steps_per_stage": 100,
          "path_samples": 11, "scan_grid": [5, 10], "seed": 7,
          "output_dir": "results"})");
  CHECK(config.omega == 2.0);
  CHECK(config.omega_t == 50.0);
  CHECK(config.steps_per_stage == 100);
  CHECK(config.path_samples == 11);
  CHECK(config.scan_grid == std::vector<double>{5.0, 10.0});
  CHECK(config.seed == 7);
  CHECK(config.output_dir == "results");

  CHECK_THROWS_AS(parse_config_json("not json"), ConfigError);
  CHECK_THROWS_AS(parse_config_json(R"({"unknown_field": 1})"), ConfigError);
  CHECK_THROWS_AS(parse_config_json(R"({"omega": "fast"})"), ConfigError);
  CHECK_THROWS_AS(parse_config_json(R"({"seed": -3})"), ConfigError);
}

TEST_CASE("flag overrides win over config values") {
  ExperimentConfig config = small_config();
  CliOverrides overrides;
  overrides.omega_t = 75.0;
  overrides.seed = 99;
  overrides.output_dir = "elsewhere";
  apply_overrides(config, overrides);
  CHECK(config.omega_t == 75.0);
  CHECK(config.seed == 99);
  CHECK(config.output_dir == "elsewhere");
  CHECK(config.steps_per_stage == 50);  // untouched
}

TEST_CASE("doubles format with 17 significant digits, locale free") {
  for (const double v :
       {0.1, 1.0 / 3.0, std::numbers::pi, 1e-300, -2.5e17, 0.0}) {
    const std::string s = format_double(v);
    CHECK(s.find(',') == std::string::npos);
    double back = 0.0;
    const auto result =
        std::from_chars(s.data(), s.data() + s.size(), back);
    CHECK(result.ec == std::errc());
    CHECK(back == v);  // round trip is exact
  }
  CHECK(format_double(0.1) == "0.10000000000000001");
}

TEST_CASE("gate artifacts on a small config") {
  const GateArtifacts art = run_gate(small_config());
  CHECK(art.report["schema_version"] == kSchemaVersion);
  CHECK(art.report["command"] == "gate");
  CHECK(art.report["results"]["leakage"].is_number());
  CHECK(art.report["results"]["gate_matrix"].size() == 4);
  CHECK(art.report.contains("wall_clock_seconds"));

  // CSV: header plus one row per step plus the initial row.
  std::istringstream csv(art.populations_csv);
  std::string line;
  std::getline(csv, line);
  CHECK(line == "s,pop_l1,pop_l2,pop_l3,pop_l4,leakage");
  int rows = 0;
  while (std::getline(csv, line)) {
    ++rows;
  }
  CHECK(rows == 2 * 50 + 1);
}

TEST_CASE("degenerate config still yields a valid report") {
  ExperimentConfig config = small_config();
  config.steps_per_stage = 2;
  config.omega_t = 0.5;
  const GateArtifacts art = run_gate(config);
  const double leakage = art.report["results"]["leakage"].get<double>();
  CHECK(std::isfinite(leakage));
  CHECK(leakage > 0.1);  // far from adiabatic; documented, not fatal
  CHECK(art.report["acceptance_checks"]["leakage_below_1e-3"]["pass"] ==
        false);
}

TEST_CASE("phase artifacts carry the geometric results") {
  const PhaseArtifacts art = run_phase(small_config());
  const auto& results = art.report["results"];
  CHECK(std::abs(results["beta_l4"].get<double>() - std::numbers::pi) <= 1e-9);
  CHECK(std::abs(results["beta_l3"].get<double>()) <= 1e-9);
  CHECK(std::abs(std::abs(results["solid_angle"].get<double>()) -
                 2.0 * std::numbers::pi) <= 1e-6);
  for (const auto& check : art.report["acceptance_checks"]) {
    CHECK(check["pass"] == true);
  }
  std::istringstream csv(art.bloch_csv);
  std::string header;
  std::getline(csv, header);
  CHECK(header == "s,x,y,z");
}

TEST_CASE("scan artifacts and csv layout") {
  const ScanArtifacts art = run_scan(small_config());
  CHECK(art.report["results"]["rows"].size() == 2);
  std::istringstream csv(art.scan_csv);
  std::string header;
  std::getline(csv, header);
  CHECK(header == "omegaT,leakage,gateError,wilsonDistance");

  ExperimentConfig no_grid = small_config();
  no_grid.scan_grid = {};
  CHECK_THROWS_AS(run_scan(no_grid), ConfigError);
}

TEST_CASE("verify artifacts on a small config") {
  ExperimentConfig config = small_config();
  config.steps_per_stage = 40;  // below the convergence-check threshold
  const VerifyArtifacts art = run_verify(config);
  CHECK(art.all_pass);
  bool saw_skip = false;
  for (const auto& check : art.report["checks"]) {
    if (check["name"] == "dynamics.convergence_order") {
      saw_skip = check["skipped"].get<bool>();
      CHECK(check["reason"].get<std::string>().size() > 0);
    }
  }
  CHECK(saw_skip);
}

TEST_CASE("identical config and seed produce identical artifacts") {
  const ExperimentConfig config = small_config();
  const GateArtifacts g1 = run_gate(config);
  const GateArtifacts g2 = run_gate(config);
  CHECK(without_wall_clock(g1.report).dump() ==
        without_wall_clock(g2.report).dump());
  CHECK(g1.populations_csv == g2.populations_csv);

  const PhaseArtifacts p1 = run_phase(config);
  const PhaseArtifacts p2 = run_phase(config);
  CHECK(without_wall_clock(p1.report).dump() ==
        without_wall_clock(p2.report).dump());
  CHECK(p1.bloch_csv == p2.bloch_csv);
}

TEST_CASE("reports validate against the shipped schemas") {
  const nlohmann::json report_schema =
      load_json_file(docs_path("report.schema.json"));
  const nlohmann::json verify_schema =
      load_json_file(docs_path("verify.schema.json"));
  std::string error;

  const ExperimentConfig config = small_config();
  CHECK_MESSAGE(
      matches_schema(run_gate(config).report, report_schema, &error), error);
  CHECK_MESSAGE(
      matches_schema(run_phase(config).report, report_schema, &error), error);
  CHECK_MESSAGE(
      matches_schema(run_scan(config).report, report_schema, &error), error);

  ExperimentConfig vconfig = config;
  vconfig.steps_per_stage = 40;
  CHECK_MESSAGE(
      matches_schema(run_verify(vconfig).report, verify_schema, &error),
      error);
}

TEST_CASE("cli binary end to end") {
  namespace fs = std::filesystem;
  const std::string binary = DARKGATE_CLI_PATH;
  const fs::path dir =
      fs::temp_directory_path() / "darkgate_cli_test";
  fs::remove_all(dir);

  // Usage error: unknown subcommand.
  const int bad =
      std::system((binary + " frobnicate > /dev/null 2>&1").c_str());
  CHECK(WEXITSTATUS(bad) == 2);

  // Config error: negative omega-t.
  const int invalid = std::system(
      (binary + " gate --omega-t -5 > /dev/null 2>&1").c_str());
  CHECK(WEXITSTATUS(invalid) == 2);

  // A real phase run.
  const std::string cmd = binary + " phase --omega-t 20 --steps 50" +
                          " --samples 51 --out " + dir.string() +
                          " > /dev/null 2>&1";
  const int ok = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(ok) == 0);
  CHECK(fs::exists(dir / "report.json"));
  CHECK(fs::exists(dir / "bloch_path.csv"));

  // Same invocation is byte-identical modulo the wall clock.
  const fs::path dir2 = fs::temp_directory_path() / "darkgate_cli_test2";
  fs::remove_all(dir2);
  const std::string cmd2 = binary + " phase --omega-t 20 --steps 50" +
                           " --samples 51 --out " + dir2.string() +
                           " > /dev/null 2>&1";
  REQUIRE(WEXITSTATUS(std::system(cmd2.c_str())) == 0);
  const ordered_json r1 = load_json_file((dir / "report.json").string());
  const ordered_json r2 = load_json_file((dir2 / "report.json").string());
  CHECK(without_wall_clock(r1).dump() == without_wall_clock(r2).dump());

  fs::remove_all(dir);
  fs::remove_all(dir2);
}
