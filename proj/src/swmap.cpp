#include "ncsq/swmap.hpp"

#include <cmath>
#include <numbers>

#include "ncsq/errors.hpp"

namespace ncsq {

LinearMap forward_map(const NCParams& params) {
  const double lambda = params.lambda();
  const double mu = params.mu();
  const double pos = params.theta() / (2.0 * lambda * params.hbar());
  const double mom = params.eta() / (2.0 * mu * params.hbar());

  Mat4 s = Mat4::Zero();
  for (int i = 0; i < 2; ++i) {
    s(i, i) = lambda;
    s(2 + i, 2 + i) = mu;
    for (int j = 0; j < 2; ++j) {
      s(i, 2 + j) = -pos * levi_civita(i, j);
      s(2 + i, j) = mom * levi_civita(i, j);
    }
  }
  return {s, MapDirection::kToNoncommutative};
}

LinearMap inverse_map(const NCParams& params) {
  const double ratio = params.coupling_ratio();
  if (ratio >= 1.0) {
    throw SingularMap("theta*eta >= hbar^2, the map is not invertible");
  }
  const double scale = 1.0 / std::sqrt(1.0 - ratio);
  const double lm = params.lambda_mu();
  const double pos = params.theta() / (2.0 * lm * params.hbar());
  const double mom = params.eta() / (2.0 * lm * params.hbar());

  Mat4 t = Mat4::Zero();
  for (int i = 0; i < 2; ++i) {
    t(i, i) = params.mu() * scale;
    t(2 + i, 2 + i) = params.lambda() * scale;
    for (int j = 0; j < 2; ++j) {
      t(i, 2 + j) = params.mu() * scale * pos * levi_civita(i, j);
      t(2 + i, j) = -params.lambda() * scale * mom * levi_civita(i, j);
    }
  }
  return {t, MapDirection::kToCanonical};
}

CommutatorMatrix commutator_matrix(const NCParams& params) {
  const double a = params.theta() / params.hbar();
  const double b = params.eta() / params.hbar();
  Mat4 c;
  // clang-format off
  c <<  0.0,    a,  1.0,  0.0,
         -a,  0.0,  0.0,  1.0,
       -1.0,  0.0,  0.0,    b,
        0.0, -1.0,   -b,  0.0;
  // clang-format on
  return {c};
}

double hamiltonian_nc(const PhasePoint& z, const NCParams& params) {
  const double m = params.mass();
  const double w = params.omega();
  return z[kPi1] * z[kPi2] / m + m * w * w * z[kQ1] * z[kQ2];
}

PhasePoint rotate_45(const PhasePoint& z) {
  const double r = 1.0 / std::numbers::sqrt2;
  return PhasePoint(r * (z[0] + z[1]), r * (z[0] - z[1]), r * (z[2] + z[3]),
                    r * (z[2] - z[3]));
}

PhasePoint unrotate_45(const PhasePoint& rotated) {
  // The rotation matrix is symmetric and orthogonal, hence its own inverse.
  return rotate_45(rotated);
}

double hamiltonian_ho(double x, double k, double mass, double omega) {
  return k * k / (2.0 * mass) + 0.5 * mass * omega * omega * x * x;
}

double hamiltonian_c(const PhasePoint& z, const DerivedParams& dparams) {
  return 2.0 * dparams.alpha_sq() * z[kQ1] * z[kQ2] +
         2.0 * dparams.beta_sq() * z[kPi1] * z[kPi2] +
         dparams.gamma() * (z[kQ1] * z[kPi1] - z[kQ2] * z[kPi2]);
}

}  // namespace ncsq
