#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace darkgate {

// Raised for malformed or out-of-range configuration; maps to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
  double omega = 1.0;
  double omega_t = 200.0;  // dimensionless adiabaticity product
  int steps_per_stage = 4000;
  int path_samples = 2001;  // fiber samples per stage
  std::vector<double> scan_grid{20.0, 45.0, 90.0, 140.0, 200.0};
  std::uint64_t seed = 42;
  std::string output_dir = "out";

  void validate() const;  // throws ConfigError naming the offending field
  double total_time_per_stage() const { return omega_t / omega; }
};

struct CliOverrides {
  std::optional<std::string> output_dir;
  std::optional<double> omega_t;
  std::optional<int> steps_per_stage;
  std::optional<int> path_samples;
  std::optional<std::uint64_t> seed;
};

// Parses the JSON config file; unknown keys are rejected.
ExperimentConfig load_config_file(const std::string& path);
ExperimentConfig parse_config_json(const std::string& text);

void apply_overrides(ExperimentConfig& config, const CliOverrides& overrides);

}  // namespace darkgate
