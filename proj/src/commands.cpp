#include "darkgate/commands.hpp"

#include "darkgate/dynamics.hpp"
#include "darkgate/holonomy.hpp"
#include "darkgate/linalg.hpp"
#include "darkgate/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iostream>
#include <numbers>

namespace darkgate {

namespace {

constexpr double kPi = std::numbers::pi;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

ordered_json check_entry(double value, double tolerance, bool pass) {
  ordered_json j;
  j["value"] = value;
  j["tolerance"] = tolerance;
  j["pass"] = pass;
  return j;
}

ordered_json report_skeleton(const char* command,
                             const ExperimentConfig& config) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["config"] = config_to_json(config);
  return j;
}

std::string out_path(const ExperimentConfig& config, const char* name) {
  return config.output_dir + "/" + name;
}

}  // namespace

GateArtifacts run_gate(const ExperimentConfig& config) {
  config.validate();
  const auto t0 = Clock::now();

  const ScheduleSpec spec{config.omega, config.path_samples};
  const TimeGrid grid{config.total_time_per_stage(), config.steps_per_stage};
  const PropagationResult prop =
      propagate(spec, grid, PropagateOptions{Execution::Parallel, true});

  const double gate_error = phase_aligned_error(prop.gate_matrix, target_gate());
  const double m44_defect = std::abs(prop.gate_matrix(3, 3) + cxd(1.0, 0.0));

  ordered_json report = report_skeleton("gate", config);
  ordered_json results;
  results["gate_matrix"] = gate_to_json(prop.gate_matrix);
  results["leakage"] = prop.leakage;
  results["gate_error"] = gate_error;
  results["alignment_phase"] = alignment_phase(prop.gate_matrix, target_gate());
  results["unitarity_defect"] = prop.unitarity_defect;
  report["results"] = results;

  ordered_json checks;
  checks["m44_within_0.05_of_minus_one"] =
      check_entry(m44_defect, 0.05, m44_defect <= 0.05);
  checks["leakage_below_1e-3"] =
      check_entry(prop.leakage, 1e-3, prop.leakage <= 1e-3);
  report["acceptance_checks"] = checks;
  report["wall_clock_seconds"] = seconds_since(t0);

  return GateArtifacts{std::move(report), populations_csv(prop.snapshots)};
}

PhaseArtifacts run_phase(const ExperimentConfig& config) {
  config.validate();
  const auto t0 = Clock::now();

  const ScheduleSpec spec{config.omega, config.path_samples};
  const FiberPath path_l3 =
      sample_fiber_path(spec, FiberKind::L3, config.path_samples);
  const FiberPath path_l4 =
      sample_fiber_path(spec, FiberKind::L4, config.path_samples);
  const FiberPath path_full =
      sample_fiber_path(spec, FiberKind::Full, config.path_samples);

  const double beta_l3 = noncyclic_phase(path_l3);
  const double beta_l4 = noncyclic_phase(path_l4);
  const Gate wilson = wilson_line(path_full);
  const BlochPath bloch = bloch_path(path_l4);
  const double omega_solid = solid_angle(bloch, /*closed=*/true);
  const std::vector<double> closure = grassmann_closure(path_full);

  ordered_json report = report_skeleton("phase", config);
  ordered_json results;
  results["beta_l3"] = beta_l3;
  results["beta_l4"] = beta_l4;
  results["wilson_matrix"] = gate_to_json(wilson);
  results["solid_angle"] = omega_solid;
  results["closure_angles"] = closure;
  results["dynamics_distance"] = nullptr;  // produced by the scan command
  report["results"] = results;

  ordered_json conventions;
  conventions["beta_branch"] = "(-pi, pi]; pi reported as +pi";
  conventions["solid_angle_branch"] = "modulo 4*pi into (-2*pi, 2*pi]";
  conventions["bloch_closure"] =
      "ray map closes the loop; antipodal endpoints take the projective "
      "double cover";
  conventions["fan_apex"] =
      "pole of the loop area vector (first point when the loop is "
      "area-free)";
  report["conventions"] = conventions;

  const double closure_max =
      closure.empty() ? 0.0 : *std::max_element(closure.begin(), closure.end());
  const double beta_l4_defect = circular_distance(beta_l4, kPi);
  const double beta_l3_defect = circular_distance(beta_l3, 0.0);
  const double solid_defect = std::abs(std::abs(omega_solid) - 2.0 * kPi);
  const double half_defect = circular_distance(beta_l4, omega_solid / 2.0);

  ordered_json checks;
  checks["beta_l4_equals_pi"] =
      check_entry(beta_l4_defect, 1e-9, beta_l4_defect <= 1e-9);
  checks["beta_l3_equals_zero"] =
      check_entry(beta_l3_defect, 1e-9, beta_l3_defect <= 1e-9);
  checks["solid_angle_magnitude_2pi"] =
      check_entry(solid_defect, 1e-6, solid_defect <= 1e-6);
  checks["beta_equals_half_solid_angle"] =
      check_entry(half_defect, 1e-6, half_defect <= 1e-6);
  checks["closure_angles_below_1e-10"] =
      check_entry(closure_max, 1e-10, closure_max <= 1e-10);
  report["acceptance_checks"] = checks;
  report["wall_clock_seconds"] = seconds_since(t0);

  return PhaseArtifacts{std::move(report), bloch_path_csv(bloch)};
}

ScanArtifacts run_scan(const ExperimentConfig& config) {
  config.validate();
  if (config.scan_grid.empty()) {
    throw ConfigError("config field 'scan_grid' must be nonempty for scan");
  }
  const auto t0 = Clock::now();

  const ScheduleSpec spec{config.omega, config.path_samples};
  const std::vector<ScanRow> rows =
      adiabatic_scan(spec, config.scan_grid, config.steps_per_stage);
  const Gate wilson = wilson_line(
      sample_fiber_path(spec, FiberKind::Full, config.path_samples));

  std::vector<ScanCsvRow> csv_rows;
  csv_rows.reserve(rows.size());
  bool leakage_monotone = true;
  bool distance_monotone = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double dist = (rows[i].gate - wilson).norm();
    csv_rows.push_back(
        ScanCsvRow{rows[i].omega_t, rows[i].leakage, rows[i].gate_error, dist});
    if (i > 0) {
      leakage_monotone &= rows[i].leakage <= rows[i - 1].leakage;
      distance_monotone &= dist <= csv_rows[i - 1].wilson_distance;
    }
  }
  const double last_distance = csv_rows.back().wilson_distance;

  ordered_json report = report_skeleton("scan", config);
  ordered_json results;
  ordered_json json_rows = ordered_json::array();
  for (const ScanCsvRow& row : csv_rows) {
    ordered_json r;
    r["omega_t"] = row.omega_t;
    r["leakage"] = row.leakage;
    r["gate_error"] = row.gate_error;
    r["wilson_distance"] = row.wilson_distance;
    json_rows.push_back(r);
  }
  results["rows"] = json_rows;
  results["leakage_monotone"] = leakage_monotone;
  results["wilson_distance_monotone"] = distance_monotone;
  results["last_wilson_distance"] = last_distance;
  report["results"] = results;

  ordered_json checks;
  checks["leakage_monotone"] =
      check_entry(leakage_monotone ? 0.0 : 1.0, 0.0, leakage_monotone);
  checks["last_wilson_distance_below_0.05"] =
      check_entry(last_distance, 0.05, last_distance <= 0.05);
  report["acceptance_checks"] = checks;
  report["wall_clock_seconds"] = seconds_since(t0);

  return ScanArtifacts{std::move(report), scan_csv(csv_rows)};
}

VerifyArtifacts run_verify(const ExperimentConfig& config) {
  config.validate();
  const auto t0 = Clock::now();

  const std::vector<CheckResult> checks = run_verify_suite(config);
  bool all_pass = true;
  ordered_json json_checks = ordered_json::array();
  for (const CheckResult& check : checks) {
    all_pass &= check.pass;
    ordered_json j;
    j["name"] = check.name;
    j["residual"] = check.residual;
    j["tolerance"] = check.tolerance;
    j["pass"] = check.pass;
    j["skipped"] = check.skipped;
    j["reason"] = check.reason;
    j["seconds"] = check.seconds;
    json_checks.push_back(j);
  }

  ordered_json report = report_skeleton("verify", config);
  report["checks"] = json_checks;
  report["all_pass"] = all_pass;
  report["wall_clock_seconds"] = seconds_since(t0);
  return VerifyArtifacts{std::move(report), all_pass};
}

int cmd_gate(const ExperimentConfig& config) {
  const GateArtifacts art = run_gate(config);
  write_text_file(out_path(config, "report.json"), art.report.dump(2) + "\n");
  write_text_file(out_path(config, "populations.csv"), art.populations_csv);
  std::cout << "leakage = "
            << format_double(art.report["results"]["leakage"].get<double>())
            << "\ngate_error = "
            << format_double(art.report["results"]["gate_error"].get<double>())
            << "\nwrote " << out_path(config, "report.json") << " and "
            << out_path(config, "populations.csv") << "\n";
  return 0;
}

int cmd_phase(const ExperimentConfig& config) {
  const PhaseArtifacts art = run_phase(config);
  write_text_file(out_path(config, "report.json"), art.report.dump(2) + "\n");
  write_text_file(out_path(config, "bloch_path.csv"), art.bloch_csv);
  std::cout << "beta_l4 = "
            << format_double(art.report["results"]["beta_l4"].get<double>())
            << "\nbeta_l3 = "
            << format_double(art.report["results"]["beta_l3"].get<double>())
            << "\nsolid_angle = "
            << format_double(art.report["results"]["solid_angle"].get<double>())
            << "\nwrote " << out_path(config, "report.json") << " and "
            << out_path(config, "bloch_path.csv") << "\n";
  return 0;
}

int cmd_scan(const ExperimentConfig& config) {
  const ScanArtifacts art = run_scan(config);
  write_text_file(out_path(config, "report.json"), art.report.dump(2) + "\n");
  write_text_file(out_path(config, "scan.csv"), art.scan_csv);
  std::cout << "rows = " << art.report["results"]["rows"].size()
            << "\nleakage_monotone = "
            << (art.report["results"]["leakage_monotone"].get<bool>() ? "true"
                                                                      : "false")
            << "\nwrote " << out_path(config, "report.json") << " and "
            << out_path(config, "scan.csv") << "\n";
  return 0;
}

int cmd_verify(const ExperimentConfig& config) {
  const VerifyArtifacts art = run_verify(config);
  write_text_file(out_path(config, "verify.json"), art.report.dump(2) + "\n");
  for (const auto& check : art.report["checks"]) {
    const std::string name = check["name"].get<std::string>();
    if (check["skipped"].get<bool>()) {
      std::cout << "skip " << name << " (" << check["reason"].get<std::string>()
                << ")\n";
    } else if (check["pass"].get<bool>()) {
      std::cout << "ok   " << name
                << "  residual=" << format_double(check["residual"].get<double>())
                << "\n";
    } else {
      std::cerr << "FAIL " << name
                << "  residual=" << format_double(check["residual"].get<double>())
                << "  tolerance="
                << format_double(check["tolerance"].get<double>()) << "\n";
    }
  }
  std::cout << "wrote " << out_path(config, "verify.json") << "\n";
  return art.all_pass ? 0 : 1;
}

}  // namespace darkgate
