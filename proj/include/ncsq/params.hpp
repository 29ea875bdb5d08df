#pragma once

#include <optional>

namespace ncsq {

// Raw, unvalidated inputs. lambda and mu are optional: when neither is
// given the constrained product is split symmetrically, when one is given
// the other is solved from the product.
struct ParamInputs {
  double theta = 0.0;
  double eta = 0.0;
  double mass = 1.0;
  double omega = 1.0;
  double hbar = 1.0;
  std::optional<double> lambda;
  std::optional<double> mu;
};

// Tolerance on lambda*mu*(1 - lambda*mu) - theta*eta/(4 hbar^2).
inline constexpr double kConstraintTolerance = 1e-12;

// Returns the root lambda*mu = (1 + sqrt(1 - theta*eta/hbar^2)) / 2 of
// lambda*mu*(1 - lambda*mu) = theta*eta/(4 hbar^2), the branch that reduces
// to the identity map when theta*eta -> 0.
// Throws DomainError for theta*eta < 0 or a non-positive hbar, and
// SingularMap for theta*eta >= hbar^2.
double solve_constraint(double theta, double eta, double hbar);

double constraint_residual(double theta, double eta, double hbar,
                           double lambda_mu);

// Validated noncommutative parameters. Immutable once built.
class NCParams {
 public:
  static NCParams make(const ParamInputs& in);
  static NCParams make(double theta, double eta) {
    ParamInputs in;
    in.theta = theta;
    in.eta = eta;
    return make(in);
  }

  double theta() const { return theta_; }
  double eta() const { return eta_; }
  double mass() const { return mass_; }
  double omega() const { return omega_; }
  double hbar() const { return hbar_; }
  double lambda() const { return lambda_; }
  double mu() const { return mu_; }
  double lambda_mu() const { return lambda_ * mu_; }
  // theta*eta/hbar^2, in [0, 1).
  double coupling_ratio() const { return theta_ * eta_ / (hbar_ * hbar_); }

 private:
  NCParams() = default;

  double theta_ = 0.0;
  double eta_ = 0.0;
  double mass_ = 1.0;
  double omega_ = 1.0;
  double hbar_ = 1.0;
  double lambda_ = 1.0;
  double mu_ = 1.0;
};

// Effective constants of the coupled oscillators in canonical variables.
class DerivedParams {
 public:
  double alpha_sq() const { return alpha_sq_; }
  double beta_sq() const { return beta_sq_; }
  double alpha() const;
  double beta() const;
  // Coupling rate Gamma.
  double gamma() const { return gamma_; }
  // Oscillation frequency Omega = 2 alpha beta.
  double big_omega() const { return big_omega_; }
  // Dimensionless coupling epsilon, Gamma = omega * epsilon.
  double eps_small() const { return eps_small_; }
  // Spiral ratio Gamma / Omega.
  double eps_ratio() const { return eps_ratio_; }
  double period() const;

  friend DerivedParams derive(const NCParams& params);
  friend DerivedParams from_figure_controls(double eps_ratio, double big_omega);

 private:
  DerivedParams() = default;

  double alpha_sq_ = 0.0;
  double beta_sq_ = 0.0;
  double gamma_ = 0.0;
  double big_omega_ = 0.0;
  double eps_small_ = 0.0;
  double eps_ratio_ = 0.0;
};

// Throws NonPositiveStiffness when alpha^2 or beta^2 is not positive, which
// for constrained parameters is the same region as (2 lambda mu - 1)^2 <=
// epsilon^2; OverdampedRegime is raised only if rounding separates the two.
DerivedParams derive(const NCParams& params);

// Parameterization used for the figure data: alpha = beta = sqrt(Omega/2)
// and Gamma = eps_ratio * Omega. eps_small is reported as if 2 lambda mu = 1
// exactly, i.e. eps_ratio / sqrt(1 + eps_ratio^2).
DerivedParams from_figure_controls(double eps_ratio, double big_omega);

}  // namespace ncsq
