#include "ncsq/params.hpp"

#include <cmath>
#include <string>

#include "ncsq/errors.hpp"

namespace ncsq {
namespace {

void require_finite(double value, const char* name) {
  if (!std::isfinite(value)) {
    throw DomainError(std::string(name) + " must be finite");
  }
}

void require_positive(double value, const char* name) {
  require_finite(value, name);
  if (value <= 0.0) {
    throw DomainError(std::string(name) + " must be positive, got " +
                      std::to_string(value));
  }
}

}  // namespace

double solve_constraint(double theta, double eta, double hbar) {
  require_finite(theta, "theta");
  require_finite(eta, "eta");
  require_positive(hbar, "hbar");
  const double ratio = theta * eta / (hbar * hbar);
  if (ratio < 0.0) {
    throw DomainError("theta*eta must be non-negative");
  }
  if (ratio >= 1.0) {
    throw SingularMap("theta*eta must be below hbar^2 (theta*eta/hbar^2 = " +
                      std::to_string(ratio) + ")");
  }
  return 0.5 * (1.0 + std::sqrt(1.0 - ratio));
}

double constraint_residual(double theta, double eta, double hbar,
                           double lambda_mu) {
  return lambda_mu * (1.0 - lambda_mu) - theta * eta / (4.0 * hbar * hbar);
}

NCParams NCParams::make(const ParamInputs& in) {
  require_positive(in.mass, "mass");
  require_positive(in.omega, "omega");
  const double product = solve_constraint(in.theta, in.eta, in.hbar);

  NCParams p;
  p.theta_ = in.theta;
  p.eta_ = in.eta;
  p.mass_ = in.mass;
  p.omega_ = in.omega;
  p.hbar_ = in.hbar;

  if (in.lambda) require_positive(*in.lambda, "lambda");
  if (in.mu) require_positive(*in.mu, "mu");

  if (in.lambda && in.mu) {
    p.lambda_ = *in.lambda;
    p.mu_ = *in.mu;
    const double residual =
        constraint_residual(in.theta, in.eta, in.hbar, p.lambda_ * p.mu_);
    if (std::abs(residual) > kConstraintTolerance ||
        p.lambda_ * p.mu_ < 0.5) {
      throw DomainError("lambda*mu = " + std::to_string(p.lambda_ * p.mu_) +
                        " violates the constraint; expected " +
                        std::to_string(product));
    }
  } else if (in.lambda) {
    p.lambda_ = *in.lambda;
    p.mu_ = product / p.lambda_;
  } else if (in.mu) {
    p.mu_ = *in.mu;
    p.lambda_ = product / p.mu_;
  } else {
    p.lambda_ = p.mu_ = std::sqrt(product);
  }
  return p;
}

double DerivedParams::alpha() const { return std::sqrt(alpha_sq_); }
double DerivedParams::beta() const { return std::sqrt(beta_sq_); }
double DerivedParams::period() const { return 2.0 * M_PI / big_omega_; }

DerivedParams derive(const NCParams& params) {
  const double m = params.mass();
  const double w = params.omega();
  const double hbar = params.hbar();
  const double lambda = params.lambda();
  const double mu = params.mu();
  const double theta = params.theta();
  const double eta = params.eta();

  DerivedParams d;
  d.alpha_sq_ = lambda * lambda * m * w * w / 2.0 -
                eta * eta / (8.0 * m * mu * mu * hbar * hbar);
  d.beta_sq_ = mu * mu / (2.0 * m) -
               m * w * w * theta * theta / (8.0 * lambda * lambda * hbar * hbar);
  d.gamma_ = theta * m * w * w / (2.0 * hbar) - eta / (2.0 * m * hbar);
  d.eps_small_ = (m * w * theta - eta / (m * w)) / (2.0 * hbar);

  // Under the constraint 4 alpha^2 beta^2 = omega^2 ((2 lm - 1)^2 - eps^2),
  // so a non-positive stiffness and an imaginary Omega coincide. The
  // radicand check only guards rounding at the boundary.
  if (d.alpha_sq_ <= 0.0) {
    throw NonPositiveStiffness("alpha^2 = " + std::to_string(d.alpha_sq_) +
                               " is not positive");
  }
  if (d.beta_sq_ <= 0.0) {
    throw NonPositiveStiffness("beta^2 = " + std::to_string(d.beta_sq_) +
                               " is not positive");
  }
  const double shift = 2.0 * params.lambda_mu() - 1.0;
  const double radicand = shift * shift - d.eps_small_ * d.eps_small_;
  if (radicand <= 0.0) {
    throw OverdampedRegime("(2 lambda mu - 1)^2 <= epsilon^2 (epsilon = " +
                           std::to_string(d.eps_small_) + ")");
  }
  d.big_omega_ = w * std::sqrt(radicand);
  d.eps_ratio_ = d.gamma_ / d.big_omega_;
  return d;
}

DerivedParams from_figure_controls(double eps_ratio, double big_omega) {
  if (!std::isfinite(eps_ratio) || eps_ratio < 0.0) {
    throw DomainError("eps_ratio must be a finite non-negative number");
  }
  if (!std::isfinite(big_omega) || big_omega <= 0.0) {
    throw DomainError("big_omega must be a finite positive number");
  }
  DerivedParams d;
  d.alpha_sq_ = big_omega / 2.0;
  d.beta_sq_ = big_omega / 2.0;
  d.big_omega_ = big_omega;
  d.gamma_ = eps_ratio * big_omega;
  d.eps_ratio_ = eps_ratio;
  d.eps_small_ = eps_ratio / std::sqrt(1.0 + eps_ratio * eps_ratio);
  return d;
}

}  // namespace ncsq
