#pragma once

// Exact scalars over Q, GF(p) and simple extensions k0[t]/<m(t)>, plus the
// dense linear algebra (echelon forms, kernels, images, quotients) that the
// rest of the library is written against.

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace monogen {

/// Raised for malformed input (bad descriptors, dimension mismatches).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a mathematical consistency check fails.
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class FieldKind { Rationals, PrimeField, Extension };

struct FieldDescriptor {
  FieldKind kind = FieldKind::Rationals;
  /// Characteristic of the prime field, or of the base of an extension (0 = Q).
  long prime = 0;
  /// Extension only: monic minimal polynomial, constant term first.
  std::vector<mpq_class> minpoly;
  std::string symbol = "t";

  static FieldDescriptor rationals() { return {}; }
  static FieldDescriptor prime_field(long p) { return {FieldKind::PrimeField, p, {}, "t"}; }
  static FieldDescriptor extension(std::vector<mpq_class> minpoly, std::string symbol,
                                   long base_prime = 0) {
    return {FieldKind::Extension, base_prime, std::move(minpoly), std::move(symbol)};
  }
};

class Field;

/// An element of an exact field. Coordinates are taken in the power basis
/// 1, t, ..., t^{d-1} of the field (d = 1 for Q and GF(p)). A default
/// constructed Scalar is a zero with no field attached; it adopts the field of
/// the other operand in arithmetic.
class Scalar {
 public:
  Scalar() = default;

  const Field* field() const { return field_; }
  const std::vector<mpq_class>& coords() const { return c_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b);

  Scalar inv() const;
  Scalar pow(long e) const;
  std::string to_string() const;

 private:
  friend class Field;
  Scalar(const Field* f, std::vector<mpq_class> c) : field_(f), c_(std::move(c)) {}

  const Field* field_ = nullptr;
  std::vector<mpq_class> c_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Immutable field context. Instances are interned for the lifetime of the
/// process, so Scalars may hold a plain pointer to their field and two fields
/// are equal iff their addresses are.
class Field {
 public:
  static const Field& make(const FieldDescriptor& desc);
  static const Field& rationals() { return make(FieldDescriptor::rationals()); }
  static const Field& prime_field(long p) { return make(FieldDescriptor::prime_field(p)); }
  static const Field& extension(std::vector<mpq_class> minpoly, std::string symbol,
                                long base_prime = 0) {
    return make(FieldDescriptor::extension(std::move(minpoly), std::move(symbol), base_prime));
  }

  const FieldDescriptor& descriptor() const { return desc_; }
  FieldKind kind() const { return desc_.kind; }
  long characteristic() const { return desc_.prime; }
  int degree() const { return degree_; }
  std::string name() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long v) const;
  Scalar from_rational(const mpq_class& q) const;
  /// Element with the given power-basis coordinates (padded/reduced as needed).
  Scalar element(std::vector<mpq_class> coords) const;
  /// The adjoined root t (for Q and GF(p) this is 1).
  Scalar generator() const;
  /// Evaluates a polynomial with base-field coefficients (constant first) at s.
  Scalar eval_poly(std::span<const mpq_class> coeffs, const Scalar& s) const;

  /// Multiplicative order of s if it is at most max_order, else 0.
  int multiplicative_order(const Scalar& s, int max_order = 256) const;

 private:
  friend class Scalar;
  explicit Field(FieldDescriptor desc);

  void normalize_base(mpq_class& q) const;
  void add_into(std::vector<mpq_class>& a, const std::vector<mpq_class>& b, bool subtract) const;
  std::vector<mpq_class> multiply(const std::vector<mpq_class>& a,
                                  const std::vector<mpq_class>& b) const;
  std::vector<mpq_class> invert(const std::vector<mpq_class>& a) const;

  FieldDescriptor desc_;
  int degree_ = 1;
};

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
std::vector<mpq_class> cyclotomic_minpoly(int n);

/// Irreducibility of a monic polynomial over Q or GF(p), decided for degree <= 4.
/// Returns nullopt when the degree is too large to decide.
std::optional<bool> is_irreducible_small(const std::vector<mpq_class>& monic, long prime);

using Vec = std::vector<Scalar>;

Vec zero_vec(const Field& F, std::size_t n);
bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& s, const Vec& v);
void axpy(Vec& y, const Scalar& a, const Vec& x);

/// Dense matrix of Scalars, row-major.
class Mat {
 public:
  Mat() = default;
  Mat(const Field& F, std::size_t rows, std::size_t cols);

  static Mat identity(const Field& F, std::size_t n);
  static Mat from_columns(const Field& F, std::size_t rows, const std::vector<Vec>& cols);
  static Mat from_rows(const Field& F, std::size_t cols, const std::vector<Vec>& rows);

  const Field& field() const { return *field_; }
  const Field* field_ptr() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec column(std::size_t c) const;
  Vec row(std::size_t r) const;
  std::vector<Vec> columns() const;
  void set_column(std::size_t c, const Vec& v);

  Mat transpose() const;
  Vec apply(const Vec& v) const;
  bool is_zero() const;

  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend bool operator==(const Mat& a, const Mat& b);

  /// Columns of `a` followed by columns of `b`.
  static Mat hstack(const Mat& a, const Mat& b);
  /// Rows of `a` followed by rows of `b`.
  static Mat vstack(const Mat& a, const Mat& b);

 private:
  const Field* field_ = nullptr;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;

  friend struct MatAccess;
};

/// Reduced row echelon form with the pivot columns, in the order found.
struct Echelon {
  Mat reduced;
  std::vector<std::size_t> pivots;
};

Echelon rref(const Mat& m);
std::size_t rank(const Mat& m);
/// Columns form a basis of {v : M v = 0}.
Mat kernel_basis(const Mat& m);
/// A basis of the column span, chosen among the columns of m (first pivots).
Mat image_basis(const Mat& m);
/// Some x with M x = b, if one exists.
std::optional<Vec> solve(const Mat& m, const Vec& b);
bool in_span(const Mat& basis, const Vec& v);
/// Column span of `sub` is contained in the column span of `amb`.
bool span_contains(const Mat& amb, const Mat& sub);
bool same_span(const Mat& a, const Mat& b);
/// Basis of span(a) ∩ span(b), expressed as ambient columns.
Mat intersect(const Mat& a, const Mat& b);
/// Basis of span(a) + span(b).
Mat span_sum(const Mat& a, const Mat& b);
/// Representatives of span(amb) modulo span(sub). Throws MathError when
/// span(sub) is not contained in span(amb).
Mat quotient_basis(const Mat& sub, const Mat& amb);
/// Coordinates of v in the (independent) columns of basis; throws if v is not
/// in the span.
Vec coordinates(const Mat& basis, const Vec& v);

}  // namespace monogen
