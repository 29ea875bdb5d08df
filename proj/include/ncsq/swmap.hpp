#pragma once

#include "ncsq/params.hpp"
#include "ncsq/types.hpp"

namespace ncsq {

enum class MapDirection {
  kToNoncommutative,  // (Q, Pi) -> (q, p)
  kToCanonical,       // (q, p) -> (Q, Pi)
};

struct LinearMap {
  Mat4 matrix;
  MapDirection direction;

  PhasePoint apply(const PhasePoint& z) const { return matrix * z; }
};

// [z_a, z_b] = i hbar * matrix(a, b) for the noncommutative coordinates.
struct CommutatorMatrix {
  Mat4 matrix;
};

// Levi-Civita symbol with epsilon_12 = +1.
constexpr double levi_civita(int i, int j) {
  return i == j ? 0.0 : (i < j ? 1.0 : -1.0);
}

// q_i = lambda Q_i - theta/(2 lambda hbar) eps_ij Pi_j,
// p_i = mu Pi_i + eta/(2 mu hbar) eps_ij Q_j.
LinearMap forward_map(const NCParams& params);

// Inverse of forward_map. Throws SingularMap if theta*eta >= hbar^2.
LinearMap inverse_map(const NCParams& params);

CommutatorMatrix commutator_matrix(const NCParams& params);

// H = p1 p2 / m + m omega^2 q1 q2.
double hamiltonian_nc(const PhasePoint& z, const NCParams& params);

// (q1, q2, p1, p2) -> (x1, x2, k1, k2) with x_j = (q1 - (-1)^j q2)/sqrt(2).
PhasePoint rotate_45(const PhasePoint& z);
PhasePoint unrotate_45(const PhasePoint& rotated);

// k^2/(2m) + m omega^2 x^2 / 2.
double hamiltonian_ho(double x, double k, double mass, double omega);

// H = 2 alpha^2 Q1 Q2 + 2 beta^2 Pi1 Pi2 + Gamma (Q1 Pi1 - Q2 Pi2).
double hamiltonian_c(const PhasePoint& z, const DerivedParams& dparams);

}  // namespace ncsq
