#include "ncsq/params.hpp"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "ncsq/errors.hpp"
#include "oracles.hpp"

namespace ncsq {
namespace {

// Frozen with 30-digit arithmetic: (1 + sqrt(0.98)) / 2 and
// sqrt((2 lm - 1)^2 - 0.05^2).
constexpr double kLambdaMu_0201 = 0.994974746830583267;
constexpr double kOmega_0201 = 0.988685996664259426;

TEST(SolveConstraintTest, CommutativeLimitIsIdentityBranch) {
  EXPECT_EQ(solve_constraint(0.0, 0.0, 1.0), 1.0);
  EXPECT_EQ(solve_constraint(0.3, 0.0, 2.0), 1.0);
}

TEST(SolveConstraintTest, ThreeQuartersIsForced) {
  // theta*eta = 3/4 hbar^2 gives lm (1 - lm) = 3/16.
  const double hbar = 1.7;
  EXPECT_NEAR(solve_constraint(0.75 * hbar, hbar, hbar), 0.75, 1e-15);
}

TEST(SolveConstraintTest, FrozenValueAndResidual) {
  const double lm = solve_constraint(0.2, 0.1, 1.0);
  EXPECT_NEAR(lm, kLambdaMu_0201, 1e-15);
  EXPECT_LT(std::abs(constraint_residual(0.2, 0.1, 1.0, lm)), 1e-12);
}

TEST(SolveConstraintTest, RejectsOutOfDomain) {
  EXPECT_THROW(solve_constraint(-0.1, 0.2, 1.0), DomainError);
  EXPECT_THROW(solve_constraint(1.0, 1.0, 1.0), SingularMap);
  EXPECT_THROW(solve_constraint(2.0, 1.0, 1.0), SingularMap);
  EXPECT_THROW(solve_constraint(0.1, 0.1, 0.0), DomainError);
  EXPECT_THROW(solve_constraint(NAN, 0.1, 1.0), DomainError);
}

TEST(SolveConstraintTest, FixedPointOverRandomDomain) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double hbar = 0.1 + 2.0 * u(rng);
    const double theta = 3.0 * u(rng);
    // theta*eta uniform in [0, hbar^2).
    const double eta = theta > 0 ? u(rng) * hbar * hbar / theta * 0.999999 : u(rng);
    const double lm = solve_constraint(theta, eta, hbar);
    ASSERT_LT(std::abs(constraint_residual(theta, eta, hbar, lm)), 1e-12)
        << theta << " " << eta << " " << hbar;
    ASSERT_GE(lm, 0.5);
  }
}

TEST(NCParamsTest, SymmetricSplitByDefault) {
  const NCParams p = NCParams::make(0.2, 0.1);
  EXPECT_DOUBLE_EQ(p.lambda(), p.mu());
  EXPECT_NEAR(p.lambda_mu(), kLambdaMu_0201, 1e-15);
}

TEST(NCParamsTest, SingleOverrideSolvesTheOther) {
  ParamInputs in;
  in.theta = 0.2;
  in.eta = 0.1;
  in.lambda = 1.1;
  const NCParams p = NCParams::make(in);
  EXPECT_DOUBLE_EQ(p.lambda(), 1.1);
  EXPECT_NEAR(p.lambda_mu(), kLambdaMu_0201, 1e-15);

  in.lambda.reset();
  in.mu = 0.9;
  const NCParams q = NCParams::make(in);
  EXPECT_DOUBLE_EQ(q.mu(), 0.9);
  EXPECT_NEAR(q.lambda_mu(), kLambdaMu_0201, 1e-15);
}

TEST(NCParamsTest, DoubleOverrideMustSatisfyConstraint) {
  ParamInputs in;
  in.theta = 0.2;
  in.eta = 0.1;
  in.lambda = 1.0;
  in.mu = 1.0;
  EXPECT_THROW(NCParams::make(in), DomainError);
  in.mu = kLambdaMu_0201;
  EXPECT_NO_THROW(NCParams::make(in));
}

TEST(NCParamsTest, RejectsNonPositivePhysicalScales) {
  ParamInputs in;
  in.mass = 0.0;
  EXPECT_THROW(NCParams::make(in), DomainError);
  in.mass = 1.0;
  in.omega = -1.0;
  EXPECT_THROW(NCParams::make(in), DomainError);
  in.omega = 1.0;
  in.hbar = 0.0;
  EXPECT_THROW(NCParams::make(in), DomainError);
  in.hbar = 1.0;
  in.lambda = -1.0;
  EXPECT_THROW(NCParams::make(in), DomainError);
}

TEST(DeriveTest, CommutativeLimit) {
  const DerivedParams d = derive(NCParams::make(0.0, 0.0));
  EXPECT_DOUBLE_EQ(d.alpha_sq(), 0.5);
  EXPECT_DOUBLE_EQ(d.beta_sq(), 0.5);
  EXPECT_EQ(d.gamma(), 0.0);
  EXPECT_DOUBLE_EQ(d.big_omega(), 1.0);
  EXPECT_EQ(d.eps_small(), 0.0);
  EXPECT_EQ(d.eps_ratio(), 0.0);
}

TEST(DeriveTest, FigureConditionsGiveEqualAlphaBeta) {
  // m omega = hbar = 1, theta = eta, lambda = mu.
  ParamInputs in;
  in.mass = 2.0;
  in.omega = 0.5;
  in.theta = 0.3;
  in.eta = 0.3;
  const DerivedParams d = derive(NCParams::make(in));
  EXPECT_NEAR(d.alpha(), d.beta(), 1e-15);
}

TEST(DeriveTest, FrozenNoncommutativeExample) {
  const DerivedParams d = derive(NCParams::make(0.2, 0.1));
  EXPECT_NEAR(d.eps_small(), 0.05, 1e-16);
  EXPECT_NEAR(d.gamma(), 0.05, 1e-16);
  EXPECT_NEAR(d.big_omega(), kOmega_0201, 1e-14);
  EXPECT_NEAR(2.0 * d.alpha() * d.beta(), d.big_omega(), 1e-12 * d.big_omega());
  EXPECT_NEAR(d.eps_ratio(), 0.05 / kOmega_0201, 1e-14);
}

TEST(DeriveTest, MatchesIndependentRecomputation) {
  ParamInputs in;
  in.theta = 0.31;
  in.eta = 0.17;
  in.mass = 1.3;
  in.omega = 0.8;
  in.hbar = 1.1;
  in.lambda = 1.05;
  const NCParams p = NCParams::make(in);
  const DerivedParams d = derive(p);
  const auto o = oracle::derived(p.theta(), p.eta(), p.mass(), p.omega(),
                                 p.hbar(), p.lambda(), p.mu());
  EXPECT_NEAR(d.alpha_sq(), static_cast<double>(o.alpha_sq), 1e-15);
  EXPECT_NEAR(d.beta_sq(), static_cast<double>(o.beta_sq), 1e-15);
  EXPECT_NEAR(d.gamma(), static_cast<double>(o.gamma), 1e-15);
  EXPECT_NEAR(d.big_omega(), static_cast<double>(o.big_omega_root), 1e-14);
  EXPECT_NEAR(d.big_omega(), static_cast<double>(o.two_ab), 1e-12);
}

TEST(DeriveTest, RejectsNonPositiveStiffness) {
  // eta = 0 gives lambda mu = 1 and epsilon = 1.5 > 1: beta^2 = 1/2 - 9/8.
  EXPECT_THROW(derive(NCParams::make(3.0, 0.0)), NonPositiveStiffness);
  // Boundary: epsilon = 1 exactly, beta^2 = 0.
  EXPECT_THROW(derive(NCParams::make(2.0, 0.0)), NonPositiveStiffness);
}

TEST(DeriveTest, StiffnessAndRealOmegaCoincide) {
  // 4 alpha^2 beta^2 = omega^2 ((2 lm - 1)^2 - eps^2) under the constraint, so
  // every overdamped point is rejected as a stiffness violation.
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 2000; ++i) {
    ParamInputs in;
    in.theta = 4.0 * u(rng);
    in.eta = 0.25 * u(rng);
    in.mass = 0.5 + u(rng);
    const NCParams p = NCParams::make(in);
    const auto o = oracle::derived(p.theta(), p.eta(), p.mass(), p.omega(),
                                   p.hbar(), p.lambda(), p.mu());
    const long double shift = 2.0L * p.lambda_mu() - 1.0L;
    const bool overdamped = shift * shift - o.eps_small * o.eps_small <= 0;
    if (overdamped) {
      EXPECT_THROW(derive(p), DomainError);
    } else if (o.alpha_sq > 0 && o.beta_sq > 0) {
      EXPECT_NO_THROW(derive(p));
    }
    EXPECT_EQ(overdamped, !(o.alpha_sq > 0 && o.beta_sq > 0));
  }
}

TEST(DeriveTest, IdentitiesHoldOverRandomParameters) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int accepted = 0;
  for (int i = 0; i < 5000 && accepted < 500; ++i) {
    ParamInputs in;
    in.theta = 0.6 * u(rng);
    in.eta = 0.6 * u(rng);
    in.mass = 0.5 + 1.5 * u(rng);
    in.omega = 0.5 + 1.5 * u(rng);
    in.hbar = 0.5 + u(rng);
    try {
      const NCParams p = NCParams::make(in);
      const DerivedParams d = derive(p);
      ++accepted;
      EXPECT_NEAR(2.0 * d.alpha() * d.beta(), d.big_omega(),
                  1e-10 * d.big_omega());
      const double scale = std::abs(in.theta * in.mass * in.omega * in.omega / (2 * in.hbar)) +
                           std::abs(in.eta / (2 * in.mass * in.hbar));
      EXPECT_LE(std::abs(d.gamma() - in.omega * d.eps_small()), 1e-14 * scale);
    } catch (const DomainError&) {
    }
  }
  EXPECT_GT(accepted, 100);
}

TEST(DeriveTest, OmegaCorrectionIsSecondOrderInEpsilon) {
  // theta = eta with m omega != 1 so epsilon != 0.
  std::vector<double> eps;
  std::vector<double> gap;
  for (double target : {1e-2, 1e-3, 1e-4}) {
    ParamInputs in;
    in.mass = 2.0;
    in.omega = 1.0;
    // epsilon = (m omega - 1/(m omega)) theta / 2 = 0.75 theta.
    in.theta = in.eta = target / 0.75;
    const NCParams p = NCParams::make(in);
    const DerivedParams d = derive(p);
    eps.push_back(d.eps_small());
    gap.push_back(std::abs(d.big_omega() / in.omega -
                           std::abs(2.0 * p.lambda_mu() - 1.0)));
  }
  EXPECT_NEAR(oracle::fitted_order(eps, gap), 2.0, 0.05);
}

TEST(FigureControlsTest, UncoupledLimit) {
  const DerivedParams d = from_figure_controls(0.0, 1.0);
  EXPECT_EQ(d.gamma(), 0.0);
  EXPECT_DOUBLE_EQ(d.alpha(), std::sqrt(0.5));
  EXPECT_DOUBLE_EQ(d.beta(), std::sqrt(0.5));
}

TEST(FigureControlsTest, GammaFromRatio) {
  EXPECT_DOUBLE_EQ(from_figure_controls(0.1, 1.0).gamma(), 0.1);
  const DerivedParams d = from_figure_controls(1e-3, 2.0);
  EXPECT_DOUBLE_EQ(d.gamma(), 0.002);
  EXPECT_DOUBLE_EQ(d.alpha(), 1.0);
  EXPECT_DOUBLE_EQ(d.beta(), 1.0);
  EXPECT_DOUBLE_EQ(2.0 * d.alpha() * d.beta(), d.big_omega());
}

TEST(FigureControlsTest, RejectsInvalidControls) {
  EXPECT_THROW(from_figure_controls(-0.1, 1.0), DomainError);
  EXPECT_THROW(from_figure_controls(0.1, 0.0), DomainError);
  EXPECT_THROW(from_figure_controls(0.1, -2.0), DomainError);
}

}  // namespace
}  // namespace ncsq
