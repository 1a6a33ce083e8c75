#include "darkgate/report.hpp"

#include <array>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace darkgate {

std::string format_double(double v) {
  std::array<char, 64> buf;
  const auto result = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                    std::chars_format::general, 17);
  return std::string(buf.data(), result.ptr);
}

ordered_json config_to_json(const ExperimentConfig& config) {
  ordered_json j;
  j["omega"] = config.omega;
  j["omega_t"] = config.omega_t;
  j["steps_per_stage"] = config.steps_per_stage;
  j["path_samples"] = config.path_samples;
  j["scan_grid"] = config.scan_grid;
  j["seed"] = config.seed;
  j["output_dir"] = config.output_dir;
  return j;
}

ordered_json gate_to_json(const Gate& g) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < kLogicalDim; ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < kLogicalDim; ++j) {
      row.push_back({g(i, j).real(), g(i, j).imag()});
    }
    rows.push_back(row);
  }
  return rows;
}

std::string populations_csv(const std::vector<Snapshot>& snapshots) {
  std::string out = "s,pop_l1,pop_l2,pop_l3,pop_l4,leakage\n";
  for (const Snapshot& snap : snapshots) {
    out += format_double(snap.s);
    for (const double pop : snap.populations) {
      out += ',';
      out += format_double(pop);
    }
    out += ',';
    out += format_double(snap.leakage);
    out += '\n';
  }
  return out;
}

std::string bloch_path_csv(const BlochPath& path) {
  std::string out = "s,x,y,z\n";
  for (std::size_t i = 0; i < path.points.size(); ++i) {
    out += format_double(path.s[i]);
    for (int d = 0; d < 3; ++d) {
      out += ',';
      out += format_double(path.points[i](d));
    }
    out += '\n';
  }
  return out;
}

std::string scan_csv(const std::vector<ScanCsvRow>& rows) {
  std::string out = "omegaT,leakage,gateError,wilsonDistance\n";
  for (const ScanCsvRow& row : rows) {
    out += format_double(row.omega_t);
    out += ',';
    out += format_double(row.leakage);
    out += ',';
    out += format_double(row.gate_error);
    out += ',';
    out += format_double(row.wilson_distance);
    out += '\n';
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  const std::filesystem::path p(path);
  std::error_code ec;
  if (p.has_parent_path()) {
    std::filesystem::create_directories(p.parent_path(), ec);
    if (ec) {
      throw std::runtime_error("cannot create directory " +
                               p.parent_path().string() + ": " + ec.message());
    }
  }
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot open for writing: " + path);
  }
  out << content;
  out.flush();
  if (!out) {
    throw std::runtime_error("write failed: " + path);
  }
}

}  // namespace darkgate
