#include "ncsq/audit.hpp"

#include <algorithm>
#include <cmath>

#include "ncsq/dynamics.hpp"
#include "ncsq/errors.hpp"
#include "ncsq/swmap.hpp"

namespace ncsq {
namespace {

constexpr int kPointsPerCase = 10;
constexpr int kTimesPerPeriod = 20;
constexpr double kRk4StepsPerPeriod = 1e4;

enum Check {
  kConstraint,
  kComposition,
  kForwardAlgebra,
  kInverseAlgebra,
  kJacobian,
  kOmegaIdentity,
  kGammaIdentity,
  kHamiltonian,
  kSymplectic,
  kUnitDeterminant,
  kGroup,
  kOracle,
  kClosedFormDrift,
  kRk4Drift,
  kNumChecks
};

std::vector<InvariantCheck> make_checks() {
  std::vector<InvariantCheck> c(kNumChecks);
  c[kConstraint] = {"constraint residual", 0.0, 1e-12};
  c[kComposition] = {"map composition T*S = I", 0.0, 1e-12};
  c[kForwardAlgebra] = {"S J S^T = Omega", 0.0, 1e-12};
  c[kInverseAlgebra] = {"T Omega T^T = J", 0.0, 1e-12};
  c[kJacobian] = {"det S = 1 - theta*eta/hbar^2", 0.0, 1e-12};
  c[kOmegaIdentity] = {"Omega = 2 alpha beta (relative)", 0.0, 1e-10};
  c[kGammaIdentity] = {"Gamma = omega epsilon (relative)", 0.0, 1e-14};
  c[kHamiltonian] = {"hamiltonian equivalence", 0.0, 1e-10};
  c[kSymplectic] = {"propagator symplecticity", 0.0, 1e-10};
  c[kUnitDeterminant] = {"det M(t) = 1", 0.0, 1e-10};
  c[kGroup] = {"M(t+s) = M(t) M(s)", 0.0, 1e-10};
  c[kOracle] = {"closed form vs RK4 (relative)", 0.0, 1e-6};
  c[kClosedFormDrift] = {"closed-form energy drift", 0.0, 1e-10};
  c[kRk4Drift] = {"RK4 energy drift", 0.0, 1e-8};
  return c;
}

void record(std::vector<InvariantCheck>& checks, Check which, double error) {
  auto& c = checks[which];
  // NaN must register as a failure.
  if (std::isnan(error)) {
    c.max_error = error;
  } else if (!std::isnan(c.max_error)) {
    c.max_error = std::max(c.max_error, error);
  }
}

void audit_case(const NCParams& p, std::mt19937_64& rng,
                std::vector<InvariantCheck>& checks) {
  const Mat4 j = standard_symplectic_form();
  const Mat4 s = forward_map(p).matrix;
  const Mat4 t = inverse_map(p).matrix;
  const Mat4 omega = commutator_matrix(p).matrix;

  record(checks, kConstraint,
         std::abs(constraint_residual(p.theta(), p.eta(), p.hbar(),
                                      p.lambda_mu())));
  record(checks, kComposition, max_abs(t * s - Mat4::Identity()));
  record(checks, kForwardAlgebra, max_abs(s * j * s.transpose() - omega));
  record(checks, kInverseAlgebra, max_abs(t * omega * t.transpose() - j));
  record(checks, kJacobian, std::abs(s.determinant() - (1.0 - p.coupling_ratio())));

  const DerivedParams d = derive(p);
  const double two_ab = 2.0 * d.alpha() * d.beta();
  record(checks, kOmegaIdentity, std::abs(two_ab - d.big_omega()) / d.big_omega());
  const double m = p.mass();
  const double w = p.omega();
  const double gamma_scale = std::abs(p.theta() * m * w * w / (2.0 * p.hbar())) +
                             std::abs(p.eta() / (2.0 * m * p.hbar()));
  if (gamma_scale > 0.0) {
    record(checks, kGammaIdentity,
           std::abs(d.gamma() - w * d.eps_small()) / gamma_scale);
  } else {
    record(checks, kGammaIdentity, std::abs(d.gamma() - w * d.eps_small()));
  }

  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const double period = d.period();
  for (int k = 0; k < kPointsPerCase; ++k) {
    const PhasePoint z(unit(rng), unit(rng), unit(rng), unit(rng));
    const double hc = hamiltonian_c(z, d);
    record(checks, kHamiltonian,
           std::abs(hamiltonian_nc(s * z, p) - hc) / (1.0 + std::abs(hc)));
  }

  for (int k = 0; k < kTimesPerPeriod; ++k) {
    const double time = period * k / (kTimesPerPeriod - 1);
    const Mat4 mt = propagator(d, time).matrix();
    record(checks, kSymplectic,
           std::max(max_abs(mt.transpose() * j * mt - j),
                    max_abs(mt * j * mt.transpose() - j)));
    record(checks, kUnitDeterminant, std::abs(mt.determinant() - 1.0));
    const double other = period * (kTimesPerPeriod - 1 - k) / (2.0 * kTimesPerPeriod);
    record(checks, kGroup,
           max_abs(propagator(d, time + other).matrix() -
                   mt * propagator(d, other).matrix()));
  }

  const PhasePoint z0(unit(rng), unit(rng), unit(rng), unit(rng));
  const Trajectory rk4 = integrate(z0, d, period, period / kRk4StepsPerPeriod);
  double scale = 0.0;
  double deviation = 0.0;
  for (std::size_t i = 0; i < rk4.size(); ++i) {
    const PhasePoint exact = propagator(d, rk4.time(i)).apply(z0);
    scale = std::max(scale, exact.cwiseAbs().maxCoeff());
    deviation = std::max(deviation, (exact - rk4.point(i)).cwiseAbs().maxCoeff());
  }
  record(checks, kOracle, scale > 0.0 ? deviation / scale : deviation);
  record(checks, kRk4Drift, energy_drift(rk4, d));
  record(checks, kClosedFormDrift,
         energy_drift(closed_form_samples(z0, d, 0.0, period, 1024), d));
}

}  // namespace

bool AuditReport::passed() const { return first_failure() == nullptr; }

const InvariantCheck* AuditReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed()) return &c;
  }
  return nullptr;
}

NCParams random_valid_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> nc(0.0, 0.5);
  std::uniform_real_distribution<double> scale(0.5, 2.0);
  std::uniform_real_distribution<double> planck(0.5, 1.5);
  std::uniform_real_distribution<double> split(0.8, 1.2);
  for (;;) {
    ParamInputs in;
    in.theta = nc(rng);
    in.eta = nc(rng);
    in.mass = scale(rng);
    in.omega = scale(rng);
    in.hbar = planck(rng);
    const double skew = split(rng);
    if (in.theta * in.eta >= in.hbar * in.hbar) continue;
    const double product = solve_constraint(in.theta, in.eta, in.hbar);
    in.lambda = std::sqrt(product) * skew;
    try {
      NCParams p = NCParams::make(in);
      const DerivedParams d = derive(p);
      if (std::abs(d.eps_ratio()) <= 0.25) return p;
    } catch (const DomainError&) {
      // rejected draw
    }
  }
}

AuditReport run_audit(const NCParams& base, std::uint64_t seed, int n_random) {
  AuditReport report;
  report.checks = make_checks();
  std::mt19937_64 rng(seed);
  audit_case(base, rng, report.checks);
  for (int i = 0; i < n_random; ++i) {
    audit_case(random_valid_params(rng), rng, report.checks);
  }
  report.cases = n_random + 1;
  return report;
}

}  // namespace ncsq
