#include "ncsq/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ncsq/dynamics.hpp"
#include "ncsq/errors.hpp"

namespace ncsq {
namespace {

constexpr double kMinDeterminant = 1e-300;

int first_index(Subsystem s) { return s == Subsystem::kFirst ? kQ1 : kQ2; }
int second_index(Subsystem s) { return s == Subsystem::kFirst ? kPi1 : kPi2; }

void check_axis(const AxisSpec& axis, const char* name) {
  if (axis.count < 16) {
    throw DomainError(std::string(name) + " axis needs at least 16 points");
  }
  if (!(axis.min < axis.max) || !std::isfinite(axis.min) ||
      !std::isfinite(axis.max)) {
    throw DegenerateAxes(std::string(name) + " axis has min >= max");
  }
}

}  // namespace

GaussianState::GaussianState(const PhasePoint& mean, const Mat4& covariance)
    : mean_(mean), covariance_(covariance) {
  if (!mean.allFinite() || !covariance.allFinite()) {
    throw DomainError("Gaussian state entries must be finite");
  }
  const double scale = std::max(1.0, covariance.cwiseAbs().maxCoeff());
  if ((covariance - covariance.transpose()).cwiseAbs().maxCoeff() >
      1e-12 * scale) {
    throw DomainError("covariance must be symmetric");
  }
  // Symmetrize exactly so downstream products stay symmetric.
  covariance_ = 0.5 * (covariance + covariance.transpose());
  Eigen::LLT<Mat4> llt(covariance_);
  if (llt.info() != Eigen::Success) {
    throw DomainError("covariance must be positive definite");
  }
  const Eigen::Vector4d diag = llt.matrixL().toDenseMatrix().diagonal();
  det_ = diag.prod() * diag.prod();
  precision_ = llt.solve(Mat4::Identity());
  precision_ = 0.5 * (precision_ + precision_.transpose()).eval();
}

GaussianState coherent_state(const PhasePoint& mean, double hbar) {
  if (!(hbar > 0.0)) throw DomainError("hbar must be positive");
  return GaussianState(mean, 0.5 * hbar * Mat4::Identity());
}

GaussianState evolve(const GaussianState& state, const DerivedParams& dparams,
                     double t) {
  const Mat4& m = propagator(dparams, t).matrix();
  return GaussianState(m * state.mean(),
                       m * state.covariance() * m.transpose());
}

double evaluate(const GaussianState& state, const PhasePoint& z) {
  if (state.det_covariance() < kMinDeterminant) {
    throw SingularCovariance("covariance determinant below 1e-300");
  }
  const Vec4 d = z - state.mean();
  const double quad = d.dot(state.precision() * d);
  const double norm =
      4.0 * std::numbers::pi * std::numbers::pi * std::sqrt(state.det_covariance());
  return std::exp(-0.5 * quad) / norm;
}

double flow_evaluate(const WignerField& initial, const DerivedParams& dparams,
                     const PhasePoint& z, double t) {
  return initial(propagator(dparams, -t).apply(z));
}

MarginalState marginal(const GaussianState& state, Subsystem subsystem) {
  const int a = first_index(subsystem);
  const int b = second_index(subsystem);
  MarginalState out;
  out.mean = Vec2(state.mean()[a], state.mean()[b]);
  const Mat4& c = state.covariance();
  out.covariance << c(a, a), c(a, b), c(b, a), c(b, b);
  return out;
}

double evaluate(const MarginalState& state, const Vec2& point) {
  const double det = state.covariance.determinant();
  if (det < kMinDeterminant) {
    throw SingularCovariance("marginal covariance determinant below 1e-300");
  }
  const Vec2 d = point - state.mean;
  const double quad = d.dot(state.covariance.inverse() * d);
  return std::exp(-0.5 * quad) / (2.0 * std::numbers::pi * std::sqrt(det));
}

Quadrature amplified_quadrature(const MarginalState& state) {
  return state.covariance(0, 0) >= state.covariance(1, 1)
             ? Quadrature::kPosition
             : Quadrature::kMomentum;
}

Quadrature attenuated_quadrature(const MarginalState& state) {
  return amplified_quadrature(state) == Quadrature::kPosition
             ? Quadrature::kMomentum
             : Quadrature::kPosition;
}

SqueezingMetrics squeezing_metrics(const MarginalState& state, double hbar) {
  const Mat2& c = state.covariance;
  const double half_trace = 0.5 * (c(0, 0) + c(1, 1));
  const double half_diff = 0.5 * (c(0, 0) - c(1, 1));
  const double spread = std::hypot(half_diff, c(0, 1));
  const double det = c(0, 0) * c(1, 1) - c(0, 1) * c(1, 0);

  SqueezingMetrics m;
  m.var_major = half_trace + spread;
  // Computed from the determinant to avoid cancellation for strong squeezing.
  m.var_minor = det / m.var_major;
  m.squeeze = -0.5 * std::log(2.0 * m.var_minor / hbar);
  m.axis_angle = 0.5 * std::atan2(2.0 * c(0, 1), c(0, 0) - c(1, 1));
  if (m.axis_angle <= -std::numbers::pi / 2) m.axis_angle += std::numbers::pi;
  m.uncertainty_product = std::sqrt(det);
  m.purity = hbar / (2.0 * m.uncertainty_product);
  return m;
}

const char* normalization_name(GridNormalization mode) {
  return mode == GridNormalization::kFigure ? "figure" : "physical";
}

double WignerGrid::max_value() const {
  return values.empty() ? 0.0 : *std::max_element(values.begin(), values.end());
}

double WignerGrid::integral() const {
  const double dq = q_axis.step();
  const double dp = p_axis.step();
  double sum = 0.0;
  for (int i = 0; i < q_axis.count; ++i) {
    const double wq = (i == 0 || i + 1 == q_axis.count) ? 0.5 : 1.0;
    for (int j = 0; j < p_axis.count; ++j) {
      const double wp = (j == 0 || j + 1 == p_axis.count) ? 0.5 : 1.0;
      sum += wq * wp * value(i, j);
    }
  }
  return sum * dq * dp;
}

std::pair<AxisSpec, AxisSpec> auto_axes(const MarginalState& state,
                                        double n_sigmas, int count) {
  const double sq = std::sqrt(state.covariance(0, 0));
  const double sp = std::sqrt(state.covariance(1, 1));
  return {AxisSpec{state.mean[0] - n_sigmas * sq, state.mean[0] + n_sigmas * sq,
                   count},
          AxisSpec{state.mean[1] - n_sigmas * sp, state.mean[1] + n_sigmas * sp,
                   count}};
}

WignerGrid evaluate_grid(const GaussianState& state, Subsystem subsystem,
                         const AxisSpec& q_axis, const AxisSpec& p_axis,
                         GridNormalization mode) {
  check_axis(q_axis, "q");
  check_axis(p_axis, "p");
  const MarginalState m = marginal(state, subsystem);

  WignerGrid grid;
  grid.q_axis = q_axis;
  grid.p_axis = p_axis;
  grid.subsystem = subsystem;
  grid.normalization = mode;
  grid.values.resize(static_cast<std::size_t>(q_axis.count) * p_axis.count);
  for (int i = 0; i < q_axis.count; ++i) {
    for (int j = 0; j < p_axis.count; ++j) {
      grid.values[static_cast<std::size_t>(i) * p_axis.count + j] =
          evaluate(m, Vec2(q_axis.at(i), p_axis.at(j)));
    }
  }
  if (mode == GridNormalization::kFigure) {
    const double peak = grid.max_value();
    if (!(peak > 0.0)) {
      throw SingularCovariance("grid does not resolve the distribution");
    }
    for (double& v : grid.values) v /= peak;
  }
  return grid;
}

}  // namespace ncsq
