#pragma once

#include <Eigen/Dense>

namespace ncsq {

using Vec2 = Eigen::Vector2d;
using Vec4 = Eigen::Vector4d;
using Mat2 = Eigen::Matrix2d;
using Mat4 = Eigen::Matrix4d;

// Phase-space coordinates in the fixed order (q1, q2, p1, p2), or
// (Q1, Q2, Pi1, Pi2) for the canonical variables. Note that the initial
// conditions (x, pi_x, y, pi_y) therefore sit at indices (0, 2, 1, 3).
using PhasePoint = Vec4;

inline constexpr int kQ1 = 0;
inline constexpr int kQ2 = 1;
inline constexpr int kPi1 = 2;
inline constexpr int kPi2 = 3;

// Builds a PhasePoint from initial conditions given as (x, pi_x, y, pi_y).
inline PhasePoint from_initial_conditions(double x, double pi_x, double y,
                                          double pi_y) {
  return PhasePoint(x, y, pi_x, pi_y);
}

// Standard symplectic form J = [[0, I], [-I, 0]] in (Q1, Q2, Pi1, Pi2) order.
inline Mat4 standard_symplectic_form() {
  Mat4 j = Mat4::Zero();
  j(0, 2) = 1.0;
  j(1, 3) = 1.0;
  j(2, 0) = -1.0;
  j(3, 1) = -1.0;
  return j;
}

inline double max_abs(const Mat4& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace ncsq
