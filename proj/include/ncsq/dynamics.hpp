#pragma once

#include <array>
#include <vector>

#include "ncsq/params.hpp"
#include "ncsq/types.hpp"

namespace ncsq {

// Closed-form linear flow z(t) = M(t) z(0) of the coupled oscillators.
class Propagator {
 public:
  Propagator(const Mat4& matrix, double time, const DerivedParams& dparams)
      : matrix_(matrix), time_(time), dparams_(dparams) {}

  const Mat4& matrix() const { return matrix_; }
  double time() const { return time_; }
  const DerivedParams& dparams() const { return dparams_; }

  PhasePoint apply(const PhasePoint& z) const { return matrix_ * z; }

 private:
  Mat4 matrix_;
  double time_;
  DerivedParams dparams_;
};

// Q1(t) = e^{+Gt} [x cos Wt + (b/a) pi_y sin Wt]
// Q2(t) = e^{-Gt} [y cos Wt + (b/a) pi_x sin Wt]
// Pi1(t) = e^{-Gt} [pi_x cos Wt - (a/b) y sin Wt]
// Pi2(t) = e^{+Gt} [pi_y cos Wt - (a/b) x sin Wt]
// Negative times give the time-reversed flow. Throws DomainError if t is not
// finite.
Propagator propagator(const DerivedParams& dparams, double t);

// Hamilton's equations for hamiltonian_c.
PhasePoint eom_rhs(const PhasePoint& z, const DerivedParams& dparams);

// One classic fourth-order Runge-Kutta step of eom_rhs.
PhasePoint rk4_step(const PhasePoint& z, const DerivedParams& dparams,
                    double h);

class Trajectory {
 public:
  Trajectory(const DerivedParams& dparams, const PhasePoint& initial,
             double step)
      : dparams_(dparams), initial_(initial), step_(step) {}

  // Times must be strictly increasing.
  void push_back(double time, const PhasePoint& point);

  std::size_t size() const { return times_.size(); }
  bool empty() const { return times_.empty(); }
  const std::vector<double>& times() const { return times_; }
  const std::vector<PhasePoint>& points() const { return points_; }
  double time(std::size_t i) const { return times_[i]; }
  const PhasePoint& point(std::size_t i) const { return points_[i]; }
  const PhasePoint& back() const { return points_.back(); }

  const DerivedParams& dparams() const { return dparams_; }
  const PhasePoint& initial() const { return initial_; }
  // Nominal sampling step.
  double step() const { return step_; }

 private:
  DerivedParams dparams_;
  PhasePoint initial_;
  double step_;
  std::vector<double> times_;
  std::vector<PhasePoint> points_;
};

// Fixed-step RK4 from t = 0 to t_end. The last step is shortened if t_end is
// not a multiple of step. Throws StepTooLarge if step exceeds period/100.
Trajectory integrate(const PhasePoint& z0, const DerivedParams& dparams,
                     double t_end, double step);

// n_samples uniform closed-form samples on [t_begin, t_end], both ends
// included; z0 is the state at t_begin.
Trajectory closed_form_samples(const PhasePoint& z0,
                               const DerivedParams& dparams, double t_begin,
                               double t_end, std::size_t n_samples);

// Max absolute residual of the decoupled second-order equations
//   Q1'' - 2G Q1' + (G^2 + 4a^2b^2) Q1,  Q2'' + 2G Q2' + ...,
//   Pi1'' + 2G Pi1' + ...,               Pi2'' - 2G Pi2' + ...
// with central differences at interior samples.
// Throws InsufficientSamples below 3 points and DomainError if the sampling
// is not uniform.
double second_order_residual(const Trajectory& traj,
                             const DerivedParams& dparams);

// max_i |H(z_i) - H(z_0)| with H = hamiltonian_c.
double energy_drift(const Trajectory& traj, const DerivedParams& dparams);

enum class Plane { kQ1Pi1, kQ2Pi2, kQ1Pi2, kQ2Pi1 };

inline constexpr std::array<Plane, 4> kAllPlanes = {
    Plane::kQ1Pi1, Plane::kQ2Pi2, Plane::kQ1Pi2, Plane::kQ2Pi1};

const char* plane_name(Plane plane);
std::array<int, 2> plane_indices(Plane plane);

std::vector<Vec2> projection(const Trajectory& traj, Plane plane);

// Closed-form samples over one period [0, 2 pi / Omega]. Throws
// InsufficientSamples if n_samples < 2.
Trajectory spiral_samples(const PhasePoint& z0, const DerivedParams& dparams,
                          std::size_t n_samples);

struct SpiralFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

// Least-squares fit of log(radius) against the winding angle accumulated
// along the direction of travel (so the angle grows for either sense of
// rotation). Requires at least 3 points with nonzero radius.
SpiralFit fit_log_spiral(const std::vector<Vec2>& curve);

}  // namespace ncsq
