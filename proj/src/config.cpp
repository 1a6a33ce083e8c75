#include "darkgate/config.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace darkgate {

void ExperimentConfig::validate() const {
  if (!(omega > 0.0)) {
    throw ConfigError("config field 'omega' must be > 0");
  }
  if (!(omega_t > 0.0)) {
    throw ConfigError("config field 'omega_t' must be > 0");
  }
  if (steps_per_stage < 2) {
    throw ConfigError("config field 'steps_per_stage' must be >= 2");
  }
  if (path_samples < 3) {
    throw ConfigError("config field 'path_samples' must be >= 3");
  }
  for (std::size_t i = 0; i < scan_grid.size(); ++i) {
    if (!(scan_grid[i] > 0.0)) {
      throw ConfigError("config field 'scan_grid' entries must be > 0");
    }
    if (i > 0 && !(scan_grid[i] > scan_grid[i - 1])) {
      throw ConfigError("config field 'scan_grid' must be strictly ascending");
    }
  }
  if (output_dir.empty()) {
    throw ConfigError("config field 'output_dir' must be nonempty");
  }
}

ExperimentConfig parse_config_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) {
    throw ConfigError("config must be a JSON object");
  }

  ExperimentConfig config;
  for (const auto& [key, value] : j.items()) {
    try {
      if (key == "omega") {
        config.omega = value.get<double>();
      } else if (key == "omega_t") {
        config.omega_t = value.get<double>();
      } else if (key == "steps_per_stage") {
        config.steps_per_stage = value.get<int>();
      } else if (key == "path_samples") {
        config.path_samples = value.get<int>();
      } else if (key == "scan_grid") {
        config.scan_grid = value.get<std::vector<double>>();
      } else if (key == "seed") {
        if (value.is_number_integer() && value.get<long long>() < 0) {
          throw ConfigError("config field 'seed' must be >= 0");
        }
        config.seed = value.get<std::uint64_t>();
      } else if (key == "output_dir") {
        config.output_dir = value.get<std::string>();
      } else {
        throw ConfigError("unknown config field '" + key + "'");
      }
    } catch (const nlohmann::json::exception&) {
      throw ConfigError("config field '" + key + "' has the wrong type");
    }
  }
  return config;
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError("cannot open config file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config_json(buffer.str());
}

void apply_overrides(ExperimentConfig& config, const CliOverrides& overrides) {
  if (overrides.output_dir) config.output_dir = *overrides.output_dir;
  if (overrides.omega_t) config.omega_t = *overrides.omega_t;
  if (overrides.steps_per_stage) config.steps_per_stage = *overrides.steps_per_stage;
  if (overrides.path_samples) config.path_samples = *overrides.path_samples;
  if (overrides.seed) config.seed = *overrides.seed;
}

}  // namespace darkgate
