#pragma once

// Ore polynomials over K, division by the monic f, normal-form arithmetic in
// A = K[x, alpha]/<f>, the twisted tensor modules A_{alpha^t} (x)_K A and the
// small two-sided resolution of A with its contracting homotopy.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "monogen/kalgebra.hpp"

namespace monogen {

/// Left coefficients: P = sum_d P[d] x^d.
using OrePoly = std::vector<KElem>;

/// An element of A: coordinate a*dim(K) + b is the coefficient of lambda_b x^a.
using AElem = Vec;

/// Coordinates on A_{alpha^t} (x)_K A, which is free as a left A-module on
/// 1 (x) x^c, 0 <= c < n: coordinate c*dim(A) + j is the coefficient of
/// (basis_j of A) (x) x^c.
using TensorElem = Vec;

/// Checks alpha(lambda_i) = lambda_i and lambda_i lambda_b = alpha^i(lambda_b) lambda_i.
/// `lambdas` holds lambda_1..lambda_n.
CheckReport validate_f(const AlgebraK& K, const Endo& alpha, const std::vector<KElem>& lambdas);

class MonogenicAlgebra {
 public:
  /// Throws MathError when validate_f fails and InputError on shape errors.
  MonogenicAlgebra(AlgebraK K, Endo alpha, std::vector<KElem> lambdas);

  const AlgebraK& K() const { return K_; }
  const Endo& alpha() const { return alpha_; }
  const Field& field() const { return K_.field(); }
  int n() const { return n_; }
  std::size_t dim_k() const { return K_.dim(); }
  std::size_t dim_a() const { return K_.dim() * static_cast<std::size_t>(n_); }
  /// lambda_i for 0 <= i <= n (lambda_0 = 1).
  const KElem& lambda(int i) const { return lambdas_[static_cast<std::size_t>(i)]; }
  /// A as a finite-dimensional algebra on the basis lambda_b x^a.
  const AlgebraK& algebra() const { return A_; }

  KElem alpha_pow(const KElem& v, long r) const { return alpha_.apply_pow(v, r); }

  // Ore extension B = K[x, alpha].
  OrePoly ore_mul(const OrePoly& P, const OrePoly& Q) const;
  OrePoly ore_add(const OrePoly& P, const OrePoly& Q) const;
  /// (Pbar, Pddot) with P = Pbar f + Pddot and deg Pddot < n.
  std::pair<OrePoly, OrePoly> ore_divmod(const OrePoly& P) const;
  OrePoly f_poly() const;
  OrePoly x_pow_poly(int s) const;
  OrePoly to_ore(const AElem& a) const;
  /// Normal form in A of an Ore polynomial.
  AElem from_ore(const OrePoly& P) const;

  // Elements of A.
  AElem zero() const { return zero_vec(field(), dim_a()); }
  AElem one() const { return embed(K_.unit()); }
  AElem embed(const KElem& lambda, int power = 0) const;
  /// Normal form of x^s.
  const AElem& x_pow(int s) const;
  /// The quotient of x^s by f, 0 <= s <= 2n-1 (an element of degree < n).
  const AElem& x_pow_quotient(int s) const;
  /// Coefficient of x^a as an element of K.
  KElem coeff(const AElem& a, int power) const;
  AElem mul(const AElem& a, const AElem& b) const { return A_.mul(a, b); }
  AElem k_mul_left(const KElem& lambda, const AElem& a) const;
  AElem k_mul_right(const AElem& a, const KElem& lambda) const;
  Mat left_mul_matrix(const AElem& a) const { return A_.left_mul_matrix(a); }
  Mat right_mul_matrix(const AElem& a) const { return A_.right_mul_matrix(a); }
  std::string format(const AElem& a) const;

  // Twisted tensor modules A_{alpha^t} (x)_K A.
  std::size_t tensor_dim() const { return dim_a() * static_cast<std::size_t>(n_); }
  TensorElem tensor_zero() const { return zero_vec(field(), tensor_dim()); }
  /// u (x) v in A_{alpha^t} (x)_K A.
  TensorElem pure_tensor(const AElem& u, const AElem& v, long t) const;
  TensorElem tensor_left(const AElem& a, const TensorElem& T) const;
  TensorElem tensor_right(const TensorElem& T, const AElem& a, long t) const;
  /// Tx^i/Tx = sum_{l<i} x^l (x) x^{i-l-1} in A_{alpha^t} (x) A.
  TensorElem derivation_tensor(int i, long t = 1) const;
  /// Tf/Tx = sum_i lambda_{n-i} Tx^i/Tx.
  TensorElem tf_tensor(long t = 1) const;
  /// T(P)/Tx for an Ore polynomial, projected to A_{alpha^t} (x) A.
  TensorElem derivation_of(const OrePoly& P, long t = 1) const;
  /// Multiplication map A (x)_K A -> A (t = 0).
  AElem multiply_tensor(const TensorElem& T) const;

 private:
  AlgebraK K_;
  Endo alpha_;
  int n_ = 0;
  std::vector<KElem> lambdas_;
  AlgebraK A_;
  std::vector<AElem> xpow_;
  std::vector<AElem> xquot_;
};

/// Twist exponent of the resolution module in homological degree r:
/// t(2m) = mn, t(2m+1) = mn + 1.
long resolution_twist(int r, int n);

/// Matrices of the small resolution up to homological degree D.
/// d[0] is the multiplication map P_0 -> A and d[r] : P_r -> P_{r-1};
/// sigma[0] : A -> P_0 and sigma[r] : P_{r-1} -> P_r.
struct ResolutionMaps {
  int max_degree = 0;
  std::vector<Mat> d;
  std::vector<Mat> sigma;
};

ResolutionMaps resolution_maps(const MonogenicAlgebra& A, int max_degree);

/// m sigma_0 = id, sigma_0 m + d_1 sigma_1 = id, d_{r+1} sigma_{r+1} + sigma_r d_r = id,
/// and d d = 0, as exact matrix identities.
CheckReport contraction_check(const MonogenicAlgebra& A, const ResolutionMaps& R);

/// T(f x^i)/Tx = x^i Tf/Tx = Tf/Tx x^i in A_alpha (x) A for 0 <= i < n.
CheckReport tf_commutation_check(const MonogenicAlgebra& A);

/// f x = x f and f lambda_b = alpha^n(lambda_b) f in B.
CheckReport f_normality_check(const MonogenicAlgebra& A);

}  // namespace monogen
