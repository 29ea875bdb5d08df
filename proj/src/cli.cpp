#include <filesystem>
#include <iostream>
#include <ostream>

#include <CLI11.hpp>

#include "ncsq/commands.hpp"
#include "ncsq/config.hpp"
#include "ncsq/errors.hpp"

namespace ncsq {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvariant = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitIo = 3;

// Options registered on every subcommand; parameters given as flags take
// precedence over the config file.
struct Flags {
  std::string config_file;
  ParamInputs params;
  std::vector<std::pair<CLI::Option*, std::function<void(ParamInputs&)>>> setters;
  std::string format = "csv";
  std::vector<double> initial;
};

void add_common(CLI::App* sub, RunConfig& config, Flags& flags) {
  auto* cfg = sub->add_option("--config", flags.config_file,
                              "Parameter file with 'name = value' lines");
  auto param = [&](const char* name, double ParamInputs::*field,
                   const char* help) {
    auto* opt = sub->add_option(name, flags.params.*field, help);
    flags.setters.emplace_back(
        opt, [&flags, field](ParamInputs& p) { p.*field = flags.params.*field; });
    return opt;
  };
  auto optional_param = [&](const char* name,
                            std::optional<double> ParamInputs::*field,
                            const char* help) {
    auto* opt = sub->add_option(name, flags.params.*field, help);
    flags.setters.emplace_back(
        opt, [&flags, field](ParamInputs& p) { p.*field = flags.params.*field; });
    return opt;
  };
  std::vector<CLI::Option*> nc = {
      param("--theta", &ParamInputs::theta, "Position noncommutativity"),
      param("--eta", &ParamInputs::eta, "Momentum noncommutativity"),
      param("--mass", &ParamInputs::mass, "Oscillator mass"),
      param("--omega", &ParamInputs::omega, "Oscillator frequency"),
      optional_param("--lambda", &ParamInputs::lambda, "Position map scale"),
      optional_param("--mu", &ParamInputs::mu, "Momentum map scale"),
      cfg};
  param("--hbar", &ParamInputs::hbar, "Reduced Planck constant");
  auto* eps = sub->add_option("--eps-ratio", config.eps_ratio,
                              "Spiral ratio Gamma/Omega (figure controls)");
  sub->add_option("--big-omega", config.big_omega,
                  "Oscillation frequency Omega (figure controls)");
  for (auto* o : nc) eps->excludes(o);

  sub->add_option("--format", flags.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", config.out_dir, "Output directory");
  sub->add_option("--samples", config.samples, "Trajectory samples");
  sub->add_option("--grid", config.grid, "Grid points per axis");
  sub->add_option("--seed", config.seed, "Seed for randomized audits");
  sub->add_option("--cases", config.cases, "Random parameter sets to audit");
  sub->add_flag("--oracle", config.oracle, "Add RK4 comparison columns");
  sub->add_option("--initial", flags.initial, "Initial Q1 Q2 Pi1 Pi2")
      ->expected(4);
  sub->add_option("--t-begin", config.t_begin, "Start time");
  sub->add_option("--t-end", config.t_end, "End time");
}

void resolve(RunConfig& config, const Flags& flags) {
  ParamInputs params;
  if (!flags.config_file.empty()) {
    params = apply_config_file(params, flags.config_file);
  }
  for (const auto& [opt, set] : flags.setters) {
    if (opt->count() > 0) set(params);
  }
  config.params = params;
  config.format = parse_export_format(flags.format);
  if (!flags.initial.empty()) {
    config.initial = PhasePoint(flags.initial[0], flags.initial[1],
                                flags.initial[2], flags.initial[3]);
  }
}

void emit(const ExportTable& table, const RunConfig& config, std::ostream& out) {
  if (config.out_dir.empty()) {
    out << (config.format == ExportFormat::kCsv ? to_csv(table) : to_json(table));
  } else {
    out << "wrote " << write_table(table, config.out_dir, config.format).string()
        << "\n";
  }
}

int dispatch(RunConfig& config, std::ostream& out, std::ostream& err) {
  const std::string& cmd = config.command;
  if (cmd == "derive") {
    const DeriveResult r = cmd_derive(config);
    out << "verdict: " << r.verdict << "\n";
    for (std::size_t c = 0; c < r.table.column_count(); ++c) {
      out << r.table.columns()[c] << " = " << format_double(r.table.at(0, c))
          << "\n";
    }
    if (!config.out_dir.empty()) emit(r.table, config, out);
    return kExitOk;
  }
  if (cmd == "audit") {
    const AuditReport report = cmd_audit(config);
    for (const auto& c : report.checks) {
      out << (c.passed() ? "PASS " : "FAIL ") << c.name
          << "  max_error=" << format_double(c.max_error)
          << "  tolerance=" << format_double(c.tolerance) << "\n";
    }
    out << report.cases << " parameter sets audited\n";
    if (!config.out_dir.empty()) emit(audit_table(config, report), config, out);
    if (const auto* failed = report.first_failure()) {
      err << "error: invariant failed: " << failed->name << "\n";
      return kExitInvariant;
    }
    return kExitOk;
  }
  if (cmd == "figure1" || cmd == "figure2") {
    if (config.out_dir.empty()) config.out_dir = "out";
    const auto tables = cmd == "figure1" ? cmd_figure1(config) : cmd_figure2(config);
    for (const auto& t : tables) emit(t, config, out);
    return kExitOk;
  }
  if (cmd == "trajectory") {
    emit(cmd_trajectory(config), config, out);
    return kExitOk;
  }
  err << "error: unknown subcommand '" << cmd << "'\n";
  return kExitInvalid;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Noncommutative coupled-oscillator squeezing toolkit", kToolName};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  RunConfig config;
  Flags flags;
  const std::pair<const char*, const char*> subcommands[] = {
      {"derive", "Derive the effective constants and validity verdicts"},
      {"audit", "Run the invariant suite over seeded random parameters"},
      {"figure1", "Export the phase-space spiral trajectories"},
      {"figure2", "Export the squeezed marginal Wigner grids and metrics"},
      {"trajectory", "Export a closed-form trajectory"},
  };
  for (const auto& [name, help] : subcommands) {
    auto* sub = app.add_subcommand(name, help);
    add_common(sub, config, flags);
    sub->callback([&config, n = name] { config.command = n; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }

  try {
    resolve(config, flags);
    return dispatch(config, out, err);
  } catch (const IoError& e) {
    err << "error: " << e.kind() << ": " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    err << "error: " << e.kind() << ": " << e.what() << "\n";
    return kExitInvalid;
  }
}

}  // namespace ncsq
