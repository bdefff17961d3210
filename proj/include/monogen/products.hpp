#pragma once

// Cup product and Gerstenhaber bracket on C_S(A). The reference route goes
// through the normalized bar complex Hom_{K^e}(Abar^{(x)p}, A) and the
// comparison maps psi, phi; the closed formulas are checked against it.

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "monogen/cohomology.hpp"
#include "monogen/witness.hpp"

namespace monogen {

/// Multi-indices (i_1..i_p) with 1 <= i_j <= n-1, i_1 most significant.
std::size_t bar_index_count(int n, int p);
std::vector<int> bar_index_decode(int n, int p, std::size_t idx);
std::size_t bar_index_encode(int n, const std::vector<int>& I);

/// A K^e-linear map Abar^{(x)p} -> A, stored by its values on x^{i_1} (x) ... (x) x^{i_p}.
/// The value at I lies in A^{alpha^{|I|}}.
struct BarCochain {
  int degree = 0;
  std::vector<AElem> values;
  bool operator==(const BarCochain&) const = default;
};

/// An element of A (x)_K Abar^{(x)r} (x)_K A in normal form: entry idx*n + c is
/// the left coefficient a_0 of a_0 (x) x^I (x) x^c.
struct BarChain {
  int degree = 0;
  std::vector<AElem> coef;
  bool operator==(const BarChain&) const = default;
};

struct SmallCochain {
  int degree = 0;
  AElem value;
};

enum class MapSource { Closed, Recursive };

/// Resolution-level comparison maps through degree D:
/// psi[r][idx] = psi'_r(1 (x) x^I (x) 1) in A_{alpha^{t(r)}} (x) A and
/// phi[r] = phi'_r(1 (x) 1).
struct ComparisonMaps {
  int max_degree = 0;
  MapSource source = MapSource::Closed;
  std::vector<std::vector<TensorElem>> psi;
  std::vector<BarChain> phi;
};

ComparisonMaps comparison_maps(const MonogenicAlgebra& A, int max_degree, MapSource source);
/// Degrees where the two families differ (empty when they agree).
std::vector<std::string> comparison_maps_diff(const ComparisonMaps& a, const ComparisonMaps& b);

/// delta_l(mu) = sum_{h<l} alpha^h(mu).
KElem delta_sum(const MonogenicAlgebra& A, const KElem& mu, int l);

class Products {
 public:
  Products(const MonogenicAlgebra& A, int max_degree, MapSource source = MapSource::Closed);

  const MonogenicAlgebra& algebra() const { return *A_; }
  const Bimodule& regular() const { return M_; }
  int max_degree() const { return maps_.max_degree; }
  const ComparisonMaps& maps() const { return maps_; }

  BarCochain bar_zero(int p) const;
  /// Basis of the degree-p bar cochains (values in the twisted invariants).
  std::vector<BarCochain> bar_basis(int p) const;
  /// A^{alpha^s} as columns.
  const Mat& invariants(long s) const;

  BarCochain psi(const SmallCochain& a) const;
  AElem phi(const BarCochain& g) const;
  BarCochain bar_differential(const BarCochain& g) const;
  /// Small differential into degree r+1.
  AElem small_differential(const SmallCochain& a) const;

  BarCochain cup_bar(const BarCochain& g, const BarCochain& h) const;
  BarCochain circle_j(const BarCochain& g, const BarCochain& h, int j) const;
  BarCochain circle(const BarCochain& g, const BarCochain& h) const;
  BarCochain bracket_bar(const BarCochain& g, const BarCochain& h) const;

  /// Closed cup formula: ab unless both degrees are odd, then the double sum.
  AElem cup_small(const SmallCochain& a, const SmallCochain& b) const;
  /// phi(psi(a) cup psi(b)).
  AElem cup_via_bar(const SmallCochain& a, const SmallCochain& b) const;
  AElem circle_j_small(const SmallCochain& a, const SmallCochain& b, int j) const;
  /// phi([psi(a), psi(b)]).
  AElem bracket_small_generic(const SmallCochain& a, const SmallCochain& b) const;

 private:
  const MonogenicAlgebra* A_;
  Bimodule M_;
  ComparisonMaps maps_;
  std::vector<Mat> invariants_;
};

/// Closed bracket for canonical forms lambda (even degree, in K) and lambda x
/// (odd degree). Needs a verified witness; throws InputError when the witness is
/// missing or an input is not in canonical form.
AElem bracket_small_closed(const MonogenicAlgebra& A, const std::optional<SeparatingWitness>& w,
                           const SmallCochain& a, const SmallCochain& b);

/// Coefficient of a canonical-form cochain: lambda for even degree, the x^1
/// coefficient for odd degree; nullopt when the cochain is not canonical.
std::optional<KElem> canonical_coefficient(const MonogenicAlgebra& A, const SmallCochain& a);

}  // namespace monogen
