#include "ncsq/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ncsq/errors.hpp"
#include "ncsq/swmap.hpp"

namespace ncsq {

Propagator propagator(const DerivedParams& dparams, double t) {
  if (!std::isfinite(t)) {
    throw DomainError("propagation time must be finite");
  }
  const double grow = std::exp(dparams.gamma() * t);
  const double decay = std::exp(-dparams.gamma() * t);
  const double c = std::cos(dparams.big_omega() * t);
  const double s = std::sin(dparams.big_omega() * t);
  const double b_over_a = dparams.beta() / dparams.alpha();
  const double a_over_b = dparams.alpha() / dparams.beta();

  Mat4 m = Mat4::Zero();
  m(kQ1, kQ1) = grow * c;
  m(kQ1, kPi2) = grow * b_over_a * s;
  m(kQ2, kQ2) = decay * c;
  m(kQ2, kPi1) = decay * b_over_a * s;
  m(kPi1, kPi1) = decay * c;
  m(kPi1, kQ2) = -decay * a_over_b * s;
  m(kPi2, kPi2) = grow * c;
  m(kPi2, kQ1) = -grow * a_over_b * s;
  return Propagator(m, t, dparams);
}

PhasePoint eom_rhs(const PhasePoint& z, const DerivedParams& dparams) {
  const double a2 = 2.0 * dparams.alpha_sq();
  const double b2 = 2.0 * dparams.beta_sq();
  const double g = dparams.gamma();
  return PhasePoint(b2 * z[kPi2] + g * z[kQ1],   //
                    b2 * z[kPi1] - g * z[kQ2],   //
                    -a2 * z[kQ2] - g * z[kPi1],  //
                    -a2 * z[kQ1] + g * z[kPi2]);
}

PhasePoint rk4_step(const PhasePoint& z, const DerivedParams& dparams,
                    double h) {
  const PhasePoint k1 = eom_rhs(z, dparams);
  const PhasePoint k2 = eom_rhs(z + 0.5 * h * k1, dparams);
  const PhasePoint k3 = eom_rhs(z + 0.5 * h * k2, dparams);
  const PhasePoint k4 = eom_rhs(z + h * k3, dparams);
  return z + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

void Trajectory::push_back(double time, const PhasePoint& point) {
  if (!times_.empty() && !(time > times_.back())) {
    throw DomainError("trajectory times must be strictly increasing");
  }
  times_.push_back(time);
  points_.push_back(point);
}

Trajectory integrate(const PhasePoint& z0, const DerivedParams& dparams,
                     double t_end, double step) {
  if (!(step > 0.0) || !(t_end > 0.0) || !std::isfinite(t_end)) {
    throw DomainError("integrate requires step > 0 and finite t_end > 0");
  }
  if (step > dparams.period() / 100.0) {
    throw StepTooLarge("step " + std::to_string(step) +
                       " exceeds period/100 = " +
                       std::to_string(dparams.period() / 100.0));
  }
  const auto n_steps = static_cast<std::size_t>(std::ceil(t_end / step - 1e-9));
  Trajectory traj(dparams, z0, step);
  traj.push_back(0.0, z0);
  PhasePoint z = z0;
  for (std::size_t i = 1; i <= n_steps; ++i) {
    const double t_prev = static_cast<double>(i - 1) * step;
    const double t_next = i == n_steps ? t_end : static_cast<double>(i) * step;
    z = rk4_step(z, dparams, t_next - t_prev);
    traj.push_back(t_next, z);
  }
  return traj;
}

Trajectory closed_form_samples(const PhasePoint& z0,
                               const DerivedParams& dparams, double t_begin,
                               double t_end, std::size_t n_samples) {
  if (n_samples < 2) {
    throw InsufficientSamples("need at least 2 samples");
  }
  if (!(t_end > t_begin) || !std::isfinite(t_begin) || !std::isfinite(t_end)) {
    throw DomainError("time range must satisfy t_begin < t_end");
  }
  const double dt = (t_end - t_begin) / static_cast<double>(n_samples - 1);
  Trajectory traj(dparams, z0, dt);
  for (std::size_t i = 0; i < n_samples; ++i) {
    const double offset =
        i + 1 == n_samples ? t_end - t_begin : static_cast<double>(i) * dt;
    traj.push_back(t_begin + offset, propagator(dparams, offset).apply(z0));
  }
  return traj;
}

double second_order_residual(const Trajectory& traj,
                             const DerivedParams& dparams) {
  if (traj.size() < 3) {
    throw InsufficientSamples("second-order residual needs at least 3 samples");
  }
  const auto& t = traj.times();
  const double h = (t.back() - t.front()) / static_cast<double>(t.size() - 1);
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (std::abs((t[i] - t[i - 1]) - h) > 1e-9 * std::max(1.0, h)) {
      throw DomainError("trajectory is not uniformly sampled");
    }
  }
  const double g = dparams.gamma();
  const double stiffness = g * g + 4.0 * dparams.alpha_sq() * dparams.beta_sq();
  // Sign of the first-derivative term for (Q1, Q2, Pi1, Pi2).
  const Vec4 damping(-2.0 * g, 2.0 * g, 2.0 * g, -2.0 * g);

  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < traj.size(); ++i) {
    const PhasePoint& prev = traj.point(i - 1);
    const PhasePoint& here = traj.point(i);
    const PhasePoint& next = traj.point(i + 1);
    const Vec4 second = (next - 2.0 * here + prev) / (h * h);
    const Vec4 first = (next - prev) / (2.0 * h);
    const Vec4 residual =
        second + damping.cwiseProduct(first) + stiffness * here;
    worst = std::max(worst, residual.cwiseAbs().maxCoeff());
  }
  return worst;
}

double energy_drift(const Trajectory& traj, const DerivedParams& dparams) {
  if (traj.empty()) return 0.0;
  const double h0 = hamiltonian_c(traj.point(0), dparams);
  double worst = 0.0;
  for (const auto& z : traj.points()) {
    worst = std::max(worst, std::abs(hamiltonian_c(z, dparams) - h0));
  }
  return worst;
}

const char* plane_name(Plane plane) {
  switch (plane) {
    case Plane::kQ1Pi1: return "Q1-Pi1";
    case Plane::kQ2Pi2: return "Q2-Pi2";
    case Plane::kQ1Pi2: return "Q1-Pi2";
    case Plane::kQ2Pi1: return "Q2-Pi1";
  }
  return "?";
}

std::array<int, 2> plane_indices(Plane plane) {
  switch (plane) {
    case Plane::kQ1Pi1: return {kQ1, kPi1};
    case Plane::kQ2Pi2: return {kQ2, kPi2};
    case Plane::kQ1Pi2: return {kQ1, kPi2};
    case Plane::kQ2Pi1: return {kQ2, kPi1};
  }
  return {0, 0};
}

std::vector<Vec2> projection(const Trajectory& traj, Plane plane) {
  const auto [a, b] = plane_indices(plane);
  std::vector<Vec2> out;
  out.reserve(traj.size());
  for (const auto& z : traj.points()) out.emplace_back(z[a], z[b]);
  return out;
}

Trajectory spiral_samples(const PhasePoint& z0, const DerivedParams& dparams,
                          std::size_t n_samples) {
  return closed_form_samples(z0, dparams, 0.0, dparams.period(), n_samples);
}

SpiralFit fit_log_spiral(const std::vector<Vec2>& curve) {
  if (curve.size() < 3) {
    throw InsufficientSamples("spiral fit needs at least 3 points");
  }
  std::vector<double> angle(curve.size());
  std::vector<double> log_r(curve.size());
  double previous = 0.0;
  double accumulated = 0.0;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const double r = curve[i].norm();
    if (!(r > 0.0)) {
      throw DomainError("spiral fit requires points away from the origin");
    }
    const double raw = std::atan2(curve[i].y(), curve[i].x());
    if (i > 0) {
      accumulated += std::remainder(raw - previous, 2.0 * std::numbers::pi);
    }
    previous = raw;
    angle[i] = accumulated;
    log_r[i] = std::log(r);
  }
  if (accumulated < 0.0) {
    for (double& a : angle) a = -a;
  }

  const double n = static_cast<double>(curve.size());
  double mean_a = 0.0;
  double mean_l = 0.0;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    mean_a += angle[i];
    mean_l += log_r[i];
  }
  mean_a /= n;
  mean_l /= n;
  double saa = 0.0;
  double sal = 0.0;
  double sll = 0.0;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const double da = angle[i] - mean_a;
    const double dl = log_r[i] - mean_l;
    saa += da * da;
    sal += da * dl;
    sll += dl * dl;
  }
  if (!(saa > 0.0)) {
    throw DomainError("spiral fit requires a nonzero winding");
  }
  SpiralFit fit;
  fit.slope = sal / saa;
  fit.intercept = mean_l - fit.slope * mean_a;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const double e = log_r[i] - (fit.intercept + fit.slope * angle[i]);
    ss_res += e * e;
  }
  fit.r_squared = sll > 0.0 ? 1.0 - ss_res / sll : 1.0;
  return fit;
}

}  // namespace ncsq
