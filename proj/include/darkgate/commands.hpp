#pragma once

#include "darkgate/config.hpp"
#include "darkgate/report.hpp"

#include <string>

namespace darkgate {

// Pure runners: compute the report and file payloads without touching the
// filesystem. The cmd_* wrappers write the artifacts into
// config.output_dir and print a short summary.

struct GateArtifacts {
  ordered_json report;
  std::string populations_csv;
};

struct PhaseArtifacts {
  ordered_json report;
  std::string bloch_csv;
};

struct ScanArtifacts {
  ordered_json report;
  std::string scan_csv;
};

struct VerifyArtifacts {
  ordered_json report;
  bool all_pass = false;
};

GateArtifacts run_gate(const ExperimentConfig& config);
PhaseArtifacts run_phase(const ExperimentConfig& config);
ScanArtifacts run_scan(const ExperimentConfig& config);
VerifyArtifacts run_verify(const ExperimentConfig& config);

int cmd_gate(const ExperimentConfig& config);
int cmd_phase(const ExperimentConfig& config);
int cmd_scan(const ExperimentConfig& config);
int cmd_verify(const ExperimentConfig& config);

}  // namespace darkgate
