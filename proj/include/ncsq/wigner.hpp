#pragma once

#include <functional>
#include <vector>

#include "ncsq/params.hpp"
#include "ncsq/types.hpp"

namespace ncsq {

// Gaussian Wigner function with mean `mean` and covariance `covariance`.
class GaussianState {
 public:
  // Throws DomainError unless the covariance is symmetric positive definite.
  GaussianState(const PhasePoint& mean, const Mat4& covariance);

  const PhasePoint& mean() const { return mean_; }
  const Mat4& covariance() const { return covariance_; }
  double det_covariance() const { return det_; }
  const Mat4& precision() const { return precision_; }

 private:
  PhasePoint mean_;
  Mat4 covariance_;
  Mat4 precision_;
  double det_;
};

// Symmetric coherent state: covariance (hbar/2) I.
GaussianState coherent_state(const PhasePoint& mean, double hbar);

// Exact image under the linear flow: mean -> M mean, cov -> M cov M^T.
GaussianState evolve(const GaussianState& state, const DerivedParams& dparams,
                     double t);

// exp(-d^T cov^{-1} d / 2) / ((2 pi)^2 sqrt(det cov)), d = z - mean.
// Throws SingularCovariance if det cov < 1e-300.
double evaluate(const GaussianState& state, const PhasePoint& z);

using WignerField = std::function<double(const PhasePoint&)>;

// W(z, t) = W0(M(-t) z) for an arbitrary initial field W0.
double flow_evaluate(const WignerField& initial, const DerivedParams& dparams,
                     const PhasePoint& z, double t);

enum class Subsystem { kFirst = 1, kSecond = 2 };

// One-oscillator marginal in its (Q_k, Pi_k) plane.
struct MarginalState {
  Vec2 mean;
  Mat2 covariance;
};

MarginalState marginal(const GaussianState& state, Subsystem subsystem);

double evaluate(const MarginalState& state, const Vec2& point);

enum class Quadrature { kPosition = 0, kMomentum = 1 };

// Quadrature with the larger / smaller variance.
Quadrature amplified_quadrature(const MarginalState& state);
Quadrature attenuated_quadrature(const MarginalState& state);

struct SqueezingMetrics {
  double var_major = 0.0;  // largest principal variance
  double var_minor = 0.0;  // smallest principal variance
  // -(1/2) ln(2 var_minor / hbar)
  double squeeze = 0.0;
  // Angle of the major principal axis from the Q axis, in (-pi/2, pi/2].
  double axis_angle = 0.0;
  // sqrt(det cov)
  double uncertainty_product = 0.0;
  // hbar / (2 sqrt(det cov))
  double purity = 0.0;
};

SqueezingMetrics squeezing_metrics(const MarginalState& state, double hbar);

struct AxisSpec {
  double min = 0.0;
  double max = 0.0;
  int count = 0;

  double step() const { return (max - min) / (count - 1); }
  double at(int i) const {
    return i + 1 == count ? max : min + i * step();
  }
};

enum class GridNormalization {
  kPhysical,  // probability density
  kFigure,    // rescaled so the largest grid value is 1
};

const char* normalization_name(GridNormalization mode);

// W sampled on a rectangular grid of one oscillator's phase plane.
// values are stored with the momentum index fastest: value(i, j) is at
// (q_axis.at(i), p_axis.at(j)).
struct WignerGrid {
  AxisSpec q_axis;
  AxisSpec p_axis;
  Subsystem subsystem = Subsystem::kFirst;
  GridNormalization normalization = GridNormalization::kPhysical;
  std::vector<double> values;

  double value(int i, int j) const {
    return values[static_cast<std::size_t>(i) * p_axis.count + j];
  }
  double max_value() const;
  // Trapezoidal integral over the grid.
  double integral() const;
};

inline constexpr double kDefaultGridSigmas = 6.0;
inline constexpr int kDefaultGridPoints = 256;

// mean +/- n_sigmas standard deviations along each axis.
std::pair<AxisSpec, AxisSpec> auto_axes(const MarginalState& state,
                                        double n_sigmas = kDefaultGridSigmas,
                                        int count = kDefaultGridPoints);

// Throws DomainError if either axis has fewer than 16 points and
// DegenerateAxes if min >= max.
WignerGrid evaluate_grid(const GaussianState& state, Subsystem subsystem,
                         const AxisSpec& q_axis, const AxisSpec& p_axis,
                         GridNormalization mode);

}  // namespace ncsq
