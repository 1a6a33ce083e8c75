#pragma once

#include "darkgate/config.hpp"
#include "darkgate/dynamics.hpp"
#include "darkgate/holonomy.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace darkgate {

using ordered_json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";

// 17 significant digits, locale independent (round-trips any double).
std::string format_double(double v);

ordered_json config_to_json(const ExperimentConfig& config);
ordered_json gate_to_json(const Gate& g);  // rows of [re, im] pairs

// CSV payloads; '\n' line endings, one header row.
std::string populations_csv(const std::vector<Snapshot>& snapshots);
std::string bloch_path_csv(const BlochPath& path);

struct ScanCsvRow {
  double omega_t;
  double leakage;
  double gate_error;
  double wilson_distance;
};
std::string scan_csv(const std::vector<ScanCsvRow>& rows);

// Creates parents as needed; failures carry the offending path.
void write_text_file(const std::string& path, const std::string& content);

}  // namespace darkgate
