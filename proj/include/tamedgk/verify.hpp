#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "tamedgk/poisson.hpp"

namespace tgk::verify {

struct IdentityCheck {
  std::string name;
  bool pass = false;
  std::string witness;  // empty when passing
};

// Runs every per-package identity of the library on one tamed package and
// reports one line per identity.  All checks are exact.
std::vector<IdentityCheck> identity_suite(const LieAlgebra& l, const TamedPackage& pkg);
bool all_pass(const std::vector<IdentityCheck>& checks);

// splitmix64; deterministic across platforms.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}
  uint64_t next();
  int uniform(int lo, int hi);  // inclusive bounds
 private:
  uint64_t state_;
};

// Random closed taming form: a perturbation of the base symplectic form by
// a combination of closed 2-forms with small rational coefficients,
// rejection-filtered by exact nondegeneracy and taming.
std::optional<Form> random_taming_form(const LieAlgebra& l, const Form& base, const RatMatrix& j, Rng& rng);

// Random g-skew endomorphism with small integer entries in the lowered slot.
SkewEndo random_skew(const LieAlgebra& l, const Metric& g, Rng& rng);

// Frame / Levi-Civita / direct-bracket routes agree on the bivector of se.
bool schouten_modes_agree(const LieAlgebra& l, const SkewEndo& se);

struct BatchItem {
  uint64_t seed = 0;
  bool pass = false;
  std::vector<std::string> failures;
  bool operator==(const BatchItem&) const = default;
};

enum class Execution { serial, openmp };

// Batch of random tamed packages (one per derived seed), each run through
// the full identity suite.  The OpenMP path shards instances across
// threads with a deterministic per-instance seed and must produce results
// identical to the serial reference.
std::vector<BatchItem> run_identity_batch(const LieAlgebra& l, const Form& omega_base, const RatMatrix& j,
                                          uint64_t seed, int count, Execution exec);

// Batch of random skew endomorphisms checked for three-route Schouten
// agreement (plus the invertible-case twisting identity when Q is
// invertible).
std::vector<BatchItem> run_schouten_batch(const LieAlgebra& l, const Metric& g, uint64_t seed, int count,
                                          Execution exec);

}  // namespace tgk::verify
