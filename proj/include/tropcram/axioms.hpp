#pragma once

#include <string>
#include <vector>

#include "tropcram/semiring.hpp"

namespace tropcram {

enum class CheckMode : uint8_t { Exhaustive, Sampled };

struct PropertyResult {
  std::string id;       // stable identifier, e.g. "thin-unique"
  std::string label;    // one-line statement of the law
  bool pass = false;
  long cases = 0;       // elementary checks performed
  std::string witness;  // counterexample when failed
};

// Outcome of running the law suite on one semiring.  The elimination and
// monotone-algorithm classifications are derived from the individual laws.
struct AxiomReport {
  std::string semiring;
  CheckMode mode = CheckMode::Sampled;
  bool complete = true;  // false when the budget ran out mid-suite
  std::vector<PropertyResult> results;

  bool weak_elimination = false;
  bool strong_elimination = false;
  bool monotone_construction = false;
  bool monotone_convergence = false;
  bool homogeneous_family = false;  // invertible-thin-field + pair + absorb laws

  const PropertyResult* find(const std::string& id) const;
  std::string summary() const;
};

// Runs semiring/symmetry axioms and the elimination & monotonicity laws.
// Exhaustive mode requires a finite carrier; sampled mode draws a seeded
// pool of elements.  `budget` caps the number of elementary checks.
AxiomReport check_axioms(const Semiring& S, CheckMode mode, long budget = 2000000,
                         uint64_t seed = 1);

// Seeded element pool used by the sampled mode (exposed for tests).
std::vector<Elem> sample_elements(const Semiring& S, size_t count, uint64_t seed);

}  // namespace tropcram
