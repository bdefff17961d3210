#pragma once

// Base algebras K given by structure constants, their endomorphisms, and the
// finite-group data (tables, characters, conjugacy classes) used to build
// group algebras.

#include <cstddef>
#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monogen/exactfield.hpp"

namespace monogen {

/// An element of K in coordinates over the K-basis.
using KElem = Vec;

/// Outcome of a validation pass; `failure` names the first violation found.
struct CheckReport {
  bool ok = true;
  std::string failure;

  void fail(std::string what) {
    if (ok) failure = std::move(what);
    ok = false;
  }
};

class AlgebraK {
 public:
  struct Entry {
    std::size_t i, j, k;
    Scalar value;
  };

  AlgebraK() = default;
  /// e_i e_j = sum of value * e_k over the given entries; repeated (i, j, k)
  /// triples accumulate.
  AlgebraK(const Field& F, std::vector<std::string> basis, KElem unit,
           const std::vector<Entry>& entries);

  /// k^d with the coordinate idempotents as basis.
  static AlgebraK split(const Field& F, std::size_t d);

  const Field& field() const { return *field_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<std::string>& basis_names() const { return basis_; }
  const KElem& unit() const { return unit_; }
  KElem zero() const { return zero_vec(*field_, dim()); }
  KElem basis_vec(std::size_t i) const;

  /// Nonzero terms of e_i e_j.
  const std::vector<std::pair<std::size_t, Scalar>>& product(std::size_t i, std::size_t j) const {
    return table_[i * dim() + j];
  }
  std::vector<Entry> entries() const;

  KElem mul(const KElem& a, const KElem& b) const;
  /// Matrix of v -> a v.
  Mat left_mul_matrix(const KElem& a) const;
  /// Matrix of v -> v a.
  Mat right_mul_matrix(const KElem& a) const;
  bool is_commutative() const;
  std::string format(const KElem& a) const;

 private:
  const Field* field_ = nullptr;
  std::vector<std::string> basis_;
  KElem unit_;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> table_;
};

/// Associativity on all basis triples and unit laws on all basis elements.
CheckReport algebra_validate(const AlgebraK& K);

/// Basis (columns) of the center of K.
Mat center(const AlgebraK& K);

class Endo {
 public:
  Endo() = default;
  explicit Endo(Mat matrix);

  static Endo identity(const AlgebraK& K);

  const Mat& matrix() const { return matrix_; }
  bool is_automorphism() const { return automorphism_; }
  bool is_identity() const;

  KElem apply(const KElem& a) const { return matrix_.apply(a); }
  KElem apply_pow(const KElem& a, long r) const { return power(r).apply(a); }
  /// Matrix of alpha^r, r >= 0. Cached; safe to call concurrently.
  const Mat& power(long r) const;
  /// Least r >= 1 with alpha^r = id, if it is at most max_order.
  std::optional<long> order(long max_order = 64) const;
  /// Least r >= 1 with (alpha^step)^r = id, if it is at most max_order.
  std::optional<long> order_of_power(long step, long max_order = 64) const;

 private:
  struct Cache {
    std::mutex mu;
    std::deque<Mat> powers;
  };
  Mat matrix_;
  bool automorphism_ = false;
  std::shared_ptr<Cache> cache_;
};

/// alpha(1) = 1 and alpha(e_i e_j) = alpha(e_i) alpha(e_j) for all basis pairs.
CheckReport endo_validate(const AlgebraK& K, const Endo& alpha);

struct GroupData {
  std::size_t order = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> table;
  std::size_t identity = 0;
  std::vector<std::size_t> inverse;
  /// Character values per element; empty when no character is attached.
  std::vector<Scalar> character;
  /// Conjugacy classes, each sorted, ordered by their least element.
  std::vector<std::vector<std::size_t>> conj_classes;
  std::vector<std::size_t> center;

  /// Validates the table exhaustively; throws InputError if it is not a group.
  static GroupData from_table(std::vector<std::string> labels,
                              std::vector<std::vector<std::size_t>> table);
  /// C_n = <g>, element j is g^j.
  static GroupData cyclic(std::size_t n);
  /// <g, h : g^u = 1 = h^4, hg = g^-1 h>; element l*u + j is g^j h^l.
  static GroupData gh4(std::size_t u);

  std::size_t mul(std::size_t a, std::size_t b) const { return table[a][b]; }
  std::size_t power(std::size_t g, long e) const;
  std::size_t element_order(std::size_t g) const;
  std::size_t index_of(const std::string& label) const;
  std::size_t conjugate(std::size_t h, std::size_t g) const { return mul(mul(h, g), inverse[h]); }
  std::vector<std::size_t> centralizer(std::size_t g) const;
  std::size_t class_of(std::size_t g) const;
  bool has_character() const { return !character.empty(); }
  std::vector<std::size_t> character_kernel() const;

  /// Attaches a character given elementwise; validated exhaustively.
  void set_character(std::vector<Scalar> values);
};

/// Character of C_n determined by chi(g).
std::vector<Scalar> cyclic_character(const GroupData& G, const Scalar& chi_g);
/// Character of the gh4 group determined by chi(g) and chi(h).
std::vector<Scalar> gh4_character(const GroupData& G, std::size_t u, const Scalar& chi_g,
                                  const Scalar& chi_h);

/// The group algebra k[G]; basis element i is the group element i.
AlgebraK group_algebra(const GroupData& G, const Field& F);
/// alpha(g) = chi(g) g.
Endo endo_from_character(const GroupData& G);
/// Class sums as elements of k[G], in conj_classes order.
std::vector<KElem> class_sums(const GroupData& G, const Field& F);

struct QuaternionData {
  Scalar cos, sin, cos_half, sin_half;
};

/// Quaternions over F with basis {1, i, j, k} and alpha the rotation of angle
/// theta about k. Throws InputError when the trigonometric data is inconsistent.
std::pair<AlgebraK, Endo> quaternion_algebra(const Field& F, const QuaternionData& q);

}  // namespace monogen
