#include "ncsq/commands.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "ncsq/dynamics.hpp"
#include "ncsq/errors.hpp"
#include "ncsq/wigner.hpp"

namespace ncsq {
namespace {

std::string num(double v) { return format_double(v); }

void stamp(ExportTable& table, const RunConfig& config) {
  table.set_meta("tool", std::string(kToolName) + " " + kToolVersion);
  table.set_meta("subcommand", config.command);
  table.set_meta("command", canonical_command(config));
}

void stamp_dynamics(ExportTable& table, const DerivedParams& d) {
  table.set_meta("alpha_sq", num(d.alpha_sq()));
  table.set_meta("beta_sq", num(d.beta_sq()));
  table.set_meta("gamma", num(d.gamma()));
  table.set_meta("big_omega", num(d.big_omega()));
  table.set_meta("eps_ratio", num(d.eps_ratio()));
}

std::string eps_label(double eps) {
  std::ostringstream s;
  s << eps;
  return s.str();
}

// RK4 over [0, dt] with substeps no longer than period / 1e4.
PhasePoint rk4_advance(const PhasePoint& z, const DerivedParams& d, double dt) {
  const double max_step = d.period() / 1e4;
  const auto n = static_cast<long>(std::ceil(std::abs(dt) / max_step));
  if (n == 0) return z;
  const double h = dt / static_cast<double>(n);
  PhasePoint out = z;
  for (long i = 0; i < n; ++i) out = rk4_step(out, d, h);
  return out;
}

}  // namespace

std::string canonical_command(const RunConfig& c) {
  std::ostringstream s;
  s << kToolName << ' ' << c.command;
  if (c.eps_ratio) {
    s << " --eps-ratio " << num(*c.eps_ratio) << " --big-omega "
      << num(c.big_omega);
  } else if (c.command != "figure1" && c.command != "figure2") {
    s << " --theta " << num(c.params.theta) << " --eta " << num(c.params.eta)
      << " --mass " << num(c.params.mass) << " --omega " << num(c.params.omega);
    if (c.params.lambda) s << " --lambda " << num(*c.params.lambda);
    if (c.params.mu) s << " --mu " << num(*c.params.mu);
  } else {
    s << " --big-omega " << num(c.big_omega);
  }
  s << " --hbar " << num(c.params.hbar);
  s << " --format " << export_format_name(c.format);
  if (c.command == "figure1" || c.command == "trajectory") {
    s << " --samples " << c.samples;
  }
  if (c.command == "figure2") s << " --grid " << c.grid;
  if (c.command == "audit") s << " --seed " << c.seed << " --cases " << c.cases;
  if (c.command == "trajectory") {
    s << " --initial";
    for (int i = 0; i < 4; ++i) s << ' ' << num(c.initial[i]);
    s << " --t-begin " << num(c.t_begin);
    if (c.t_end) s << " --t-end " << num(*c.t_end);
    if (c.oracle) s << " --oracle";
  }
  return s.str();
}

DerivedParams resolve_dynamics(const RunConfig& config) {
  if (config.eps_ratio) {
    return from_figure_controls(*config.eps_ratio, config.big_omega);
  }
  return derive(NCParams::make(config.params));
}

DeriveResult cmd_derive(const RunConfig& config) {
  if (config.eps_ratio) {
    const DerivedParams d = from_figure_controls(*config.eps_ratio, config.big_omega);
    ExportTable t("derive", {"eps_ratio", "big_omega", "alpha_sq", "beta_sq",
                             "gamma", "eps_small"});
    t.add_row({d.eps_ratio(), d.big_omega(), d.alpha_sq(), d.beta_sq(),
               d.gamma(), d.eps_small()});
    stamp(t, config);
    t.set_meta("verdict", "figure controls");
    return {std::move(t), "figure controls"};
  }

  const NCParams p = NCParams::make(config.params);
  const DerivedParams d = derive(p);
  const double residual =
      constraint_residual(p.theta(), p.eta(), p.hbar(), p.lambda_mu());
  const std::string verdict = p.theta() == 0.0 && p.eta() == 0.0
                                  ? "commutative limit"
                                  : "noncommutative";
  ExportTable t("derive",
                {"theta", "eta", "mass", "omega", "hbar", "lambda", "mu",
                 "lambda_mu", "constraint_residual", "alpha_sq", "beta_sq",
                 "gamma", "big_omega", "eps_small", "eps_ratio",
                 "omega_identity_error"});
  t.add_row({p.theta(), p.eta(), p.mass(), p.omega(), p.hbar(), p.lambda(),
             p.mu(), p.lambda_mu(), residual, d.alpha_sq(), d.beta_sq(),
             d.gamma(), d.big_omega(), d.eps_small(), d.eps_ratio(),
             std::abs(2.0 * d.alpha() * d.beta() - d.big_omega()) /
                 d.big_omega()});
  stamp(t, config);
  t.set_meta("verdict", verdict);
  return {std::move(t), verdict};
}

AuditReport cmd_audit(const RunConfig& config) {
  if (config.cases < 0) throw DomainError("--cases must be non-negative");
  return run_audit(NCParams::make(config.params), config.seed, config.cases);
}

ExportTable audit_table(const RunConfig& config, const AuditReport& report) {
  ExportTable t("audit", {"check", "max_error", "tolerance", "passed"});
  for (std::size_t i = 0; i < report.checks.size(); ++i) {
    const auto& c = report.checks[i];
    t.add_row({static_cast<double>(i), c.max_error, c.tolerance,
               c.passed() ? 1.0 : 0.0});
    t.set_meta("check_" + std::to_string(i), c.name);
  }
  stamp(t, config);
  t.set_meta("cases", std::to_string(report.cases));
  return t;
}

std::vector<ExportTable> cmd_figure1(const RunConfig& config) {
  const PhasePoint starts[] = {from_initial_conditions(1.0, 0.0, 1.0, 0.0),
                               from_initial_conditions(1.0, 1.0, 1.0, 0.0)};
  std::vector<ExportTable> tables;
  for (int ic = 0; ic < 2; ++ic) {
    for (double eps : kFigure1EpsRatios) {
      const DerivedParams d = from_figure_controls(eps, config.big_omega);
      const Trajectory traj = spiral_samples(starts[ic], d, config.samples);
      ExportTable t("figure1_ic" + std::to_string(ic + 1) + "_eps" + eps_label(eps),
                    {"tau", "Q1", "Q2", "Pi1", "Pi2"});
      for (std::size_t i = 0; i < traj.size(); ++i) {
        const PhasePoint& z = traj.point(i);
        t.add_row({traj.time(i), z[kQ1], z[kQ2], z[kPi1], z[kPi2]});
      }
      stamp(t, config);
      stamp_dynamics(t, d);
      const PhasePoint& z0 = starts[ic];
      t.set_meta("initial_x_pix_y_piy", num(z0[kQ1]) + " " + num(z0[kPi1]) +
                                            " " + num(z0[kQ2]) + " " +
                                            num(z0[kPi2]));
      tables.push_back(std::move(t));
    }
  }
  return tables;
}

std::vector<ExportTable> cmd_figure2(const RunConfig& config) {
  const double eps = config.eps_ratio.value_or(kFigure2EpsRatio);
  if (!(eps > 0.0)) {
    throw DomainError("figure2 needs a positive eps_ratio");
  }
  const DerivedParams d = from_figure_controls(eps, config.big_omega);
  const double hbar = config.params.hbar;
  const GaussianState initial = coherent_state(config.initial, hbar);

  std::vector<ExportTable> tables;
  ExportTable metrics("figure2_metrics",
                      {"k", "tau", "var_Q1", "var_Pi1", "r", "purity"});
  for (int k = 0; k < kFigure2Frames; ++k) {
    const double tau = k * std::numbers::pi / (32.0 * eps * d.big_omega());
    const GaussianState state = evolve(initial, d, tau);
    const MarginalState m = marginal(state, Subsystem::kFirst);
    const auto [q_axis, p_axis] = auto_axes(m, kDefaultGridSigmas, config.grid);
    const WignerGrid grid = evaluate_grid(state, Subsystem::kFirst, q_axis,
                                          p_axis, GridNormalization::kFigure);

    ExportTable t("figure2_k" + std::to_string(k), {"Q1", "Pi1", "W"});
    for (int i = 0; i < q_axis.count; ++i) {
      for (int j = 0; j < p_axis.count; ++j) {
        t.add_row({q_axis.at(i), p_axis.at(j), grid.value(i, j)});
      }
    }
    stamp(t, config);
    stamp_dynamics(t, d);
    t.set_meta("k", std::to_string(k));
    t.set_meta("tau", num(tau));
    t.set_meta("normalization", normalization_name(grid.normalization));
    t.set_meta("extent", "mean +/- 6 sigma per axis");
    t.set_meta("q_range", num(q_axis.min) + " " + num(q_axis.max));
    t.set_meta("p_range", num(p_axis.min) + " " + num(p_axis.max));
    t.set_meta("grid_points", std::to_string(q_axis.count) + "x" +
                                  std::to_string(p_axis.count));
    tables.push_back(std::move(t));

    const SqueezingMetrics s = squeezing_metrics(m, hbar);
    metrics.add_row({static_cast<double>(k), tau, m.covariance(0, 0),
                     m.covariance(1, 1), s.squeeze, s.purity});
  }
  stamp(metrics, config);
  stamp_dynamics(metrics, d);
  tables.push_back(std::move(metrics));
  return tables;
}

ExportTable cmd_trajectory(const RunConfig& config) {
  const DerivedParams d = resolve_dynamics(config);
  const double t_end = config.t_end.value_or(config.t_begin + d.period());
  if (!(t_end > config.t_begin)) {
    throw DomainError("trajectory needs t_end > t_begin");
  }
  if (!config.initial.allFinite()) {
    throw DomainError("initial point must be finite");
  }
  const Trajectory traj =
      closed_form_samples(config.initial, d, config.t_begin, t_end, config.samples);

  std::vector<std::string> columns = {"t", "Q1", "Q2", "Pi1", "Pi2"};
  if (config.oracle) {
    columns.insert(columns.end(), {"Q1_rk4", "Q2_rk4", "Pi1_rk4", "Pi2_rk4"});
  }
  ExportTable t("trajectory", columns);
  PhasePoint oracle = config.initial;
  std::vector<double> row;
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const PhasePoint& z = traj.point(i);
    row.assign({traj.time(i), z[kQ1], z[kQ2], z[kPi1], z[kPi2]});
    if (config.oracle) {
      if (i > 0) oracle = rk4_advance(oracle, d, traj.time(i) - traj.time(i - 1));
      row.insert(row.end(), {oracle[kQ1], oracle[kQ2], oracle[kPi1], oracle[kPi2]});
    }
    t.add_row(row);
  }
  stamp(t, config);
  stamp_dynamics(t, d);
  return t;
}

}  // namespace ncsq
