#pragma once

// The small cochain complex C_S(A, M) with spaces M^{alpha^{t(r)}} and its
// cohomology, computed by exact linear algebra.

#include <cstddef>
#include <optional>
#include <vector>

#include "monogen/monogenic.hpp"

namespace monogen {

/// A finite-dimensional A-bimodule given by the action matrices of the
/// K-basis and of x on both sides. Right actions are matrices of m -> m a.
class Bimodule {
 public:
  Bimodule(const MonogenicAlgebra& A, std::vector<Mat> left_k, std::vector<Mat> right_k,
           Mat left_x, Mat right_x);
  /// M = A with left and right multiplication.
  static Bimodule regular(const MonogenicAlgebra& A);

  const MonogenicAlgebra& algebra() const { return *A_; }
  std::size_t dim() const { return left_x_.rows(); }
  const Field& field() const { return A_->field(); }

  Mat left_k(const KElem& lambda) const;
  Mat right_k(const KElem& lambda) const;
  const Mat& left_x() const { return left_x_; }
  const Mat& right_x() const { return right_x_; }
  Mat left_x_pow(int e) const;
  Mat right_x_pow(int e) const;
  /// Action of an arbitrary element of A.
  Mat left(const AElem& a) const;
  Mat right(const AElem& a) const;

 private:
  const MonogenicAlgebra* A_;
  std::vector<Mat> left_k_, right_k_;
  Mat left_x_, right_x_;
};

/// Commuting actions, the Ore relation on both sides, K acting as an algebra,
/// and f acting as zero.
CheckReport bimodule_validate(const Bimodule& M);

/// Basis (columns, ambient coordinates) of M^{alpha^r} = {m : m lambda = alpha^r(lambda) m}.
Mat twisted_invariants(const Bimodule& M, long r);

/// Ambient map M -> M of the small complex into degree r (r >= 1):
/// odd r: m -> x m - m x; even r: m -> sum_i sum_l lambda_{n-i} x^l m x^{i-l-1}.
Mat small_differential_ambient(const Bimodule& M, int r);

struct SmallComplex {
  const Bimodule* M = nullptr;
  int max_degree = 0;
  std::vector<long> twist;
  /// basis[r]: ambient columns spanning C^r.
  std::vector<Mat> basis;
  /// d[r] : C^{r-1} -> C^r in basis coordinates (d[0] is the zero map from 0).
  std::vector<Mat> d;

  std::size_t dim(int r) const { return basis[static_cast<std::size_t>(r)].cols(); }
  /// Ambient vector of a cochain given in basis coordinates, and back.
  Vec to_ambient(int r, const Vec& coords) const;
  Vec to_coords(int r, const Vec& ambient) const;
  bool contains(int r, const Vec& ambient) const;
};

/// Builds C_S(A, M) through degree D and verifies d d = 0 (MathError otherwise).
SmallComplex build_small_complex(const Bimodule& M, int max_degree);

struct CohomologyGroup {
  int degree = 0;
  std::size_t dim = 0;
  std::size_t rank_in = 0, rank_out = 0;
  /// Columns in C^r coordinates.
  Mat cocycles, coboundaries, representatives;
  /// Representatives as ambient vectors of M.
  Mat ambient_representatives;
};

/// ker d^{r+1} / im d^r; requires r + 1 <= max_degree.
CohomologyGroup cohomology_group(const SmallComplex& C, int r);
std::vector<CohomologyGroup> cohomology_groups(const SmallComplex& C);

bool is_cocycle(const SmallComplex& C, int r, const Vec& ambient);
/// a - b is a coboundary. Throws InputError when either input is not a cocycle.
bool classes_equal(const SmallComplex& C, int r, const Vec& a, const Vec& b);
/// Coordinates of the class of a cocycle in the representatives' basis.
Vec class_coords(const SmallComplex& C, const CohomologyGroup& H, const Vec& ambient);

}  // namespace monogen
