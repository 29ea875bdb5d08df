#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ncsq/params.hpp"

namespace ncsq {

struct InvariantCheck {
  std::string name;
  double max_error = 0.0;
  double tolerance = 0.0;

  bool passed() const { return max_error < tolerance; }
};

struct AuditReport {
  std::vector<InvariantCheck> checks;
  int cases = 0;

  bool passed() const;
  // Nullptr when everything passed.
  const InvariantCheck* first_failure() const;
};

// Draws parameters with theta, eta in [0, 0.5], mass and omega in [0.5, 2],
// hbar in [0.5, 1.5], and a lambda/mu split within 20% of symmetric, keeping
// only sets that derive() accepts with eps_ratio <= 0.25.
NCParams random_valid_params(std::mt19937_64& rng);

// Runs the invariant suite on `base` and then on n_random seeded random
// parameter sets; each check records the worst error over all cases.
AuditReport run_audit(const NCParams& base, std::uint64_t seed, int n_random);

}  // namespace ncsq
