#pragma once

// Closed-form descriptions of HH*_K(A) under the various structural
// hypotheses (separating witness, alpha = id, group algebras, rank-one Hopf
// algebras, the quaternion rotation), each cross-checked against the generic
// pipeline of cohomology.hpp.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monogen/cohomology.hpp"
#include "monogen/instances.hpp"
#include "monogen/products.hpp"
#include "monogen/witness.hpp"

namespace monogen {

/// The complex C_S(A) of the regular bimodule through degree D+1 and the
/// groups H^0..H^D.
class Pipeline {
 public:
  Pipeline(const MonogenicAlgebra& A, int max_degree);
  Pipeline(const Pipeline&) = delete;
  Pipeline& operator=(const Pipeline&) = delete;
  Pipeline(Pipeline&&) = default;

  const MonogenicAlgebra& algebra() const { return *A_; }
  const Bimodule& bimodule() const { return *M_; }
  const SmallComplex& complex() const { return C_; }
  int max_degree() const { return D_; }
  const CohomologyGroup& group(int r) const { return H_.at(static_cast<std::size_t>(r)); }
  std::vector<std::size_t> dims() const;

  /// Ambient columns of Z^r and B^r.
  Mat cocycles(int r) const;
  Mat coboundaries(int r) const;
  /// Ambient representatives of a basis of H^r.
  std::vector<AElem> representatives(int r) const;
  Vec class_of(int r, const AElem& a) const;
  bool is_coboundary(int r, const AElem& a) const;

 private:
  const MonogenicAlgebra* A_;
  std::unique_ptr<Bimodule> M_;
  int D_;
  SmallComplex C_;
  std::vector<CohomologyGroup> H_;
};

/// A cohomology group described as num / den, both as ambient subspaces of A.
struct ClosedGroup {
  Mat num, den;
  std::size_t dim() const;
};

/// Empty when the inclusion num -> Z^r induces num/den = Z^r/B^r.
std::optional<std::string> compare_with_generic(const ClosedGroup& c, const Pipeline& P, int r);

struct Hypothesis {
  std::string name;
  bool holds = false;
};

struct CheckResult {
  std::string check;
  std::vector<Hypothesis> hypotheses;
  /// Dimension tables, indexed by degree.
  std::vector<std::size_t> closed_table, generic_table;
  bool ran = false;
  bool match = false;
  std::vector<std::string> mismatches;
  /// Free-form key/value facts for the report (case labels, periods, ...).
  std::vector<std::pair<std::string, std::string>> notes;

  bool hypotheses_hold() const;
  bool add_hypothesis(std::string name, bool holds);
  void fail(std::string what) { mismatches.push_back(std::move(what)); }
  void note(std::string key, std::string value) { notes.emplace_back(std::move(key), std::move(value)); }
  /// Sets `match` from the mismatch list and marks the check as run.
  void finish();
  bool passed() const { return ran && match; }
};

// ---- small helpers --------------------------------------------------------

/// K^{alpha^s} = {lambda : lambda mu = alpha^s(mu) lambda}, columns in K coordinates.
Mat k_twisted_invariants(const MonogenicAlgebra& A, long s);
/// ker(alpha - id) in K coordinates.
Mat alpha_fixed(const MonogenicAlgebra& A);
/// Columns lambda of K sent to lambda x^power in A.
Mat embed_columns(const MonogenicAlgebra& A, const Mat& kcols, int power);
/// Matrix on K of lambda -> sum_{l<n} alpha^l(lambda) lambda_n.
Mat norm_times_lambda_n(const MonogenicAlgebra& A);
/// Canonical cochain basis in degree r: K^{alpha^{mn}} for r = 2m, K^{alpha^{mn}} x for r = 2m+1.
std::vector<AElem> canonical_basis(const MonogenicAlgebra& A, int r);

/// Minimal polynomial of a square matrix, constant term first, monic.
std::vector<Scalar> minimal_polynomial(const Mat& m);
/// true / false when diagonalizability of alpha over the ground field can be
/// decided (diagonal matrix; root search over Q and GF(p); roots of unity in
/// extensions), nullopt when it cannot.
std::optional<bool> alpha_diagonalizable(const MonogenicAlgebra& A);

/// Witness search in the documented order: user candidates, instance
/// candidates (g1 first), the K-basis, then class sums for group algebras.
std::optional<SeparatingWitness> witness_for(const Instance& inst,
                                             const std::vector<KElem>& user = {});

// ---- checks needing a separating witness ---------------------------------

using MaybeWitness = std::optional<SeparatingWitness>;

CheckResult witness_check(const MonogenicAlgebra& A, const MaybeWitness& w);
/// C^{2m} = K^{alpha^{mn}} and C^{2m+1} = K^{alpha^{mn}} x as subspaces.
CheckResult cochain_shape_check(const Pipeline& P, const MaybeWitness& w);
/// d^{2m+1}(lambda) = (alpha(lambda) - lambda) x, d^{2m+2}(lambda x) = -sum alpha^l(lambda) lambda_n.
CheckResult differentials_check(const Pipeline& P, const MaybeWitness& w);
/// alpha^n(lambda) lambda_n = lambda lambda_n on K^{alpha^{mn}}.
CheckResult lambda_n_identity_check(const Pipeline& P);
/// HH^0 = ker(alpha - id) cap Z(K) and the odd/even quotients over K and K x.
CheckResult witness_cohomology_check(const Pipeline& P, const MaybeWitness& w);
/// HH* against H*(Z_n, Z(K)) with w acting by alpha.
CheckResult cyclic_group_cohomology_check(const Pipeline& P, const MaybeWitness& w);
/// The diagonalizable-alpha description with Ann(n lambda_n).
CheckResult diagonal_alpha_check(const Pipeline& P, const MaybeWitness& w);
/// lambda x cup lambda' x = -C(n,2) lambda lambda' lambda_n in the diagonal-alpha setting.
CheckResult odd_cup_check(const Pipeline& P, const Products& X, const MaybeWitness& w);

// ---- alpha = id -------------------------------------------------------------

/// C^r = Z(K)[x]/<f>, odd d = 0, even d = multiplication by f'.
CheckResult identity_alpha_complex_check(const Pipeline& P);
/// HH^0 = C, HH^odd = Ann(f'), HH^even = C / f'C.
CheckResult identity_alpha_cohomology_check(const Pipeline& P);

// ---- group algebras ---------------------------------------------------------

struct ClassBasisData {
  long r = 0;
  /// Indices into G.conj_classes of the classes in X(r).
  std::vector<std::size_t> classes;
  /// in_kernel[j]: classes[j] lies in N = ker chi.
  std::vector<bool> in_kernel;
  /// a_j = sum_{g in X_j} gamma_g g, with gamma = 1 on the least element.
  std::vector<KElem> basis;
  /// Classes where the centralizer test and the gamma propagation disagree.
  std::vector<std::size_t> inconsistent;

  Mat span(const Field& F, std::size_t dim) const;
  Mat kernel_span(const Field& F, std::size_t dim) const;
};

ClassBasisData class_basis(const GroupData& G, const Field& F, long r);
/// span(a_j) = K^{alpha^r} for 0 <= r <= bound.
CheckResult class_basis_check(const MonogenicAlgebra& A, const GroupData& G, long bound);
/// HH* from k[N], the class bases and Ann(n lambda_n).
CheckResult group_algebra_check(const Pipeline& P, const GroupData& G, std::optional<std::size_t> g1);

/// Order of chi^n (the v of the periodicity statements), if at most max_order.
std::optional<long> character_power_order(const MonogenicAlgebra& A, long max_order = 64);
/// Least m0 >= 1 with X in X(m0 n), 0 if none up to 2v.
long class_period(const GroupData& G, std::size_t cls, int n, long v);
/// Membership of every class in X(mn) is exactly m0 | m, scanned for m <= 2v.
CheckResult class_period_check(const GroupData& G, int n, long v);
/// dim HH^r = dim HH^{r+2v}; with a witness and n lambda_n = 0 also
/// HH^{2v} = HH^0 and HH^{2m+1} = HH^{2m}.
CheckResult periodicity_check(const Pipeline& P, const MaybeWitness& w = std::nullopt);

struct Generator {
  std::string name;
  int degree = 0;
  AElem value;
};

/// Class-level cup product of two ambient cocycles, in the class coordinates of H^{p+q}.
Vec cup_class(const Pipeline& P, const Products& X, int p, const AElem& a, int q, const AElem& b);
/// The listed classes generate HH^{<=D} under cup, and the last generator of
/// degree 2v (if any) acts bijectively HH^r -> HH^{r+2v} for r >= 1.
CheckResult generators_check(const Pipeline& P, const Products& X, const std::vector<Generator>& gens);
/// Generators read off the group-algebra description (degree 0, odd and even
/// classes below 2v, 1 in degree 2v) and the k[N]^G (x) k[y,x]/<x^2> pattern
/// when no even classes sit strictly between 0 and 2v.
CheckResult presentation_check(const Pipeline& P, const Products& X);

// ---- rank-one Hopf algebras --------------------------------------------------

struct QuotientGroup {
  GroupData G;
  std::vector<std::size_t> projection;
};
/// G / H for a central subgroup H on which the character is trivial.
QuotientGroup quotient_group(const GroupData& G, const std::vector<std::size_t>& subgroup);

/// k[G][x, alpha]/<x^n - xi (g1^n - 1)>: decides whether chi^n is trivial and
/// runs the matching comparison (quotient-group model, or the k[N]^G formulas
/// with the stated bracket).
CheckResult rank_one_hopf_check(const GroupData& G, const Field& F, std::size_t g1, int n,
                                const Scalar& xi, int max_degree);

// ---- quaternions ---------------------------------------------------------------

/// e^{k phi} with phi = s theta/2, as a quaternion (s may be negative).
KElem quaternion_exp(const Field& F, const QuaternionData& q, long s);
/// lambda_u lies in (base field) e^{-k u theta/2}.
bool quaternion_coefficient_eligible(const Field& F, const QuaternionData& q, const KElem& lambda,
                                     int u);
/// Eligibility, A^{alpha^r}, differentials, the commutative companion C and
/// the comparison map, and HH via annihilators in C.
CheckResult quaternion_check(const Pipeline& P, const QuaternionData& q);

// ---- products on classes ----------------------------------------------------------

/// [a, b] = 0 on classes for all even-degree classes a, b.
CheckResult even_bracket_check(const Pipeline& P, const Products& X);
/// Closed bracket = generic bracket modulo coboundaries on canonical basis pairs.
CheckResult bracket_closed_check(const Pipeline& P, const Products& X, const MaybeWitness& w,
                                 int max_m = 1);
/// Graded commutativity of cup on classes and d d = 0.
CheckResult cup_commutativity_check(const Pipeline& P, const Products& X);

struct ProductEntry {
  int deg_a = 0, deg_b = 0;
  std::size_t index_a = 0, index_b = 0;
  Vec result;
  /// "closed" or "generic"; agree = both routes give the same class when both ran.
  std::string source;
  bool agree = true;
};

std::vector<ProductEntry> cup_table(const Pipeline& P, const Products& X);
std::vector<ProductEntry> bracket_table(const Pipeline& P, const Products& X, const MaybeWitness& w);

/// Same dimension, cup and bracket tables for two algebras with the same n and lambda_n.
CheckResult f_independence_check(const Pipeline& P1, const Products& X1, const Pipeline& P2,
                                 const Products& X2, const MaybeWitness& w1,
                                 const MaybeWitness& w2);

}  // namespace monogen
