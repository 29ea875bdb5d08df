#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ncsq/audit.hpp"
#include "ncsq/export_table.hpp"
#include "ncsq/params.hpp"
#include "ncsq/types.hpp"

namespace ncsq {

inline constexpr const char* kToolName = "ncsq";
inline constexpr const char* kToolVersion = "0.1.0";

inline constexpr std::size_t kDefaultTrajectorySamples = 1024;
inline constexpr double kFigure2EpsRatio = 0.1;
inline constexpr int kFigure2Frames = 7;

// Spiral ratios of the figure-1 data set.
inline constexpr double kFigure1EpsRatios[] = {0.0, 0.1, 0.01, 0.001};

// Settings shared by every subcommand.
struct RunConfig {
  std::string command;
  ParamInputs params;
  // When set, dynamics use from_figure_controls(eps_ratio, big_omega)
  // instead of deriving from params.
  std::optional<double> eps_ratio;
  double big_omega = 1.0;
  std::string out_dir;
  ExportFormat format = ExportFormat::kCsv;
  std::uint64_t seed = 1;
  std::size_t samples = kDefaultTrajectorySamples;
  int grid = 256;
  bool oracle = false;
  int cases = 100;
  PhasePoint initial = from_initial_conditions(1.0, 0.0, 1.0, 0.0);
  double t_begin = 0.0;
  std::optional<double> t_end;  // defaults to t_begin + one period
};

// Flags that reproduce `config` (output directory excluded).
std::string canonical_command(const RunConfig& config);

DerivedParams resolve_dynamics(const RunConfig& config);

struct DeriveResult {
  ExportTable table;
  std::string verdict;
};

DeriveResult cmd_derive(const RunConfig& config);
AuditReport cmd_audit(const RunConfig& config);
ExportTable audit_table(const RunConfig& config, const AuditReport& report);

// Two initial conditions, (x, pi_x, y, pi_y) = (1,0,1,0) and (1,1,1,0),
// times the four spiral ratios: eight tables of tau, Q1, Q2, Pi1, Pi2.
std::vector<ExportTable> cmd_figure1(const RunConfig& config);

// Seven (Q1, Pi1) grids at tau_k = k pi / (32 eps_ratio Omega), followed by
// the metrics table (k, tau, var_Q1, var_Pi1, r, purity).
std::vector<ExportTable> cmd_figure2(const RunConfig& config);

// Closed-form samples; with config.oracle also RK4 columns.
ExportTable cmd_trajectory(const RunConfig& config);

// Command-line entry point. Exit codes: 0 success, 1 invariant failure,
// 2 invalid parameters, 3 I/O failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace ncsq
