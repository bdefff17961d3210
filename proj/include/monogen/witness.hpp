#pragma once

// Search for a central, alpha^n-fixed element whose differences with its
// alpha^i-images (0 < i < n) are not zero divisors. When one exists, the
// cochain spaces of C_S(A) collapse to K and K x.

#include <optional>
#include <vector>

#include "monogen/monogenic.hpp"

namespace monogen {

struct SeparatingWitness {
  KElem value;
  bool central = false;
  bool fixed = false;
  bool regular_differences = false;
  bool ok() const { return central && fixed && regular_differences; }
};

/// Checks the three conditions for one candidate. Zero divisors are tested on
/// both sides.
SeparatingWitness check_witness(const MonogenicAlgebra& A, const KElem& candidate);

/// Candidates first, then the K-basis, then `extra` (class sums, say).
std::optional<SeparatingWitness> find_witness(const MonogenicAlgebra& A,
                                              const std::vector<KElem>& candidates,
                                              const std::vector<KElem>& extra = {});

}  // namespace monogen
