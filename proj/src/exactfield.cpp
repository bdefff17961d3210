#include "monogen/exactfield.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "monogen/kernels.hpp"

namespace monogen {

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

bool same_descriptor(const FieldDescriptor& a, const FieldDescriptor& b) {
  return a.kind == b.kind && a.prime == b.prime && a.minpoly == b.minpoly &&
         (a.kind != FieldKind::Extension || a.symbol == b.symbol);
}

// Polynomials over the base field (Q or GF(p)), constant term first.
using BasePoly = std::vector<mpq_class>;

void trim(BasePoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

}  // namespace

// ---------------------------------------------------------------- Field

Field::Field(FieldDescriptor desc) : desc_(std::move(desc)) {
  if (desc_.kind == FieldKind::Extension) degree_ = static_cast<int>(desc_.minpoly.size()) - 1;
}

const Field& Field::make(const FieldDescriptor& in) {
  FieldDescriptor desc = in;
  switch (desc.kind) {
    case FieldKind::Rationals:
      desc.prime = 0;
      desc.minpoly.clear();
      break;
    case FieldKind::PrimeField:
      if (!is_prime(desc.prime))
        throw InputError("prime-field modulus " + std::to_string(desc.prime) + " is not prime");
      desc.minpoly.clear();
      break;
    case FieldKind::Extension: {
      if (desc.prime != 0 && !is_prime(desc.prime))
        throw InputError("extension base modulus " + std::to_string(desc.prime) + " is not prime");
      if (desc.minpoly.size() < 2) throw InputError("extension minpoly must have degree >= 1");
      if (desc.minpoly.back() != 1) throw InputError("extension minpoly must be monic");
      if (desc.prime != 0) {
        for (auto& c : desc.minpoly) {
          mpz_class num = c.get_num(), den = c.get_den(), p = desc.prime, inv;
          if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
            throw InputError("minpoly coefficient has denominator divisible by p");
          mpz_class r = (num * inv) % p;
          if (r < 0) r += p;
          c = mpq_class(r);
        }
      }
      auto irreducible = is_irreducible_small(desc.minpoly, desc.prime);
      if (irreducible && !*irreducible)
        throw InputError("extension minpoly is reducible");
      if (!irreducible)
        spdlog::warn("extension minpoly of degree {} not checked for irreducibility",
                     desc.minpoly.size() - 1);
      break;
    }
  }
  static std::mutex mu;
  static std::vector<std::unique_ptr<Field>> registry;
  std::lock_guard<std::mutex> lock(mu);
  for (const auto& f : registry)
    if (same_descriptor(f->desc_, desc)) return *f;
  registry.emplace_back(new Field(std::move(desc)));
  return *registry.back();
}

std::string Field::name() const {
  switch (desc_.kind) {
    case FieldKind::Rationals:
      return "Q";
    case FieldKind::PrimeField:
      return "GF(" + std::to_string(desc_.prime) + ")";
    case FieldKind::Extension: {
      std::ostringstream os;
      os << (desc_.prime == 0 ? std::string("Q") : "GF(" + std::to_string(desc_.prime) + ")")
         << "[" << desc_.symbol << "]/<";
      bool first = true;
      for (std::size_t i = desc_.minpoly.size(); i-- > 0;) {
        const auto& c = desc_.minpoly[i];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? "+" : "-");
        else if (c < 0) os << "-";
        first = false;
        mpq_class a = abs(c);
        if (i == 0 || a != 1) os << a.get_str();
        if (i > 0 && a != 1) os << "*";
        if (i > 0) os << desc_.symbol;
        if (i > 1) os << "^" << i;
      }
      os << ">";
      return os.str();
    }
  }
  return "?";
}

void Field::normalize_base(mpq_class& q) const {
  if (desc_.prime == 0) {
    q.canonicalize();
    return;
  }
  mpz_class p = desc_.prime;
  mpz_class num = q.get_num() % p;
  mpz_class den = q.get_den();
  if (den != 1) {
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
      throw MathError("division by zero in GF(" + std::to_string(desc_.prime) + ")");
    num = (num * inv) % p;
  }
  if (num < 0) num += p;
  q = mpq_class(num);
}

Scalar Field::zero() const { return Scalar(this, std::vector<mpq_class>(degree_, 0)); }

Scalar Field::one() const {
  std::vector<mpq_class> c(degree_, 0);
  c[0] = 1;
  return Scalar(this, std::move(c));
}

Scalar Field::from_int(long v) const { return from_rational(mpq_class(v)); }

Scalar Field::from_rational(const mpq_class& q) const {
  std::vector<mpq_class> c(degree_, 0);
  c[0] = q;
  normalize_base(c[0]);
  return Scalar(this, std::move(c));
}

Scalar Field::element(std::vector<mpq_class> coords) const {
  for (auto& c : coords) normalize_base(c);
  if (coords.size() > static_cast<std::size_t>(degree_)) {
    // Reduce modulo the minimal polynomial.
    std::vector<mpq_class> one(degree_, 0);
    one[0] = 1;
    std::vector<mpq_class> head(coords.begin(), coords.begin() + degree_);
    std::vector<mpq_class> acc = head;
    std::vector<mpq_class> tpow = one;
    std::vector<mpq_class> t(degree_, 0);
    if (degree_ > 1) t[1] = 1;
    else t[0] = -desc_.minpoly[0];
    for (int i = 0; i < degree_; ++i) tpow = multiply(tpow, t);
    for (std::size_t i = degree_; i < coords.size(); ++i) {
      std::vector<mpq_class> term = tpow;
      for (auto& x : term) {
        x *= coords[i];
        normalize_base(x);
      }
      add_into(acc, term, false);
      tpow = multiply(tpow, t);
    }
    return Scalar(this, std::move(acc));
  }
  coords.resize(degree_, 0);
  return Scalar(this, std::move(coords));
}

Scalar Field::generator() const {
  if (desc_.kind != FieldKind::Extension) return one();
  return element({0, 1});
}

Scalar Field::eval_poly(std::span<const mpq_class> coeffs, const Scalar& s) const {
  Scalar acc = zero();
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * s + from_rational(coeffs[i]);
  return acc;
}

int Field::multiplicative_order(const Scalar& s, int max_order) const {
  if (s.is_zero()) return 0;
  Scalar p = s;
  for (int k = 1; k <= max_order; ++k) {
    if (p.is_one()) return k;
    p *= s;
  }
  return 0;
}

void Field::add_into(std::vector<mpq_class>& a, const std::vector<mpq_class>& b,
                     bool subtract) const {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (subtract) a[i] -= b[i];
    else a[i] += b[i];
    if (desc_.prime != 0) normalize_base(a[i]);
  }
}

std::vector<mpq_class> Field::multiply(const std::vector<mpq_class>& a,
                                       const std::vector<mpq_class>& b) const {
  if (degree_ == 1) {
    std::vector<mpq_class> r{a[0] * b[0]};
    if (desc_.prime != 0) normalize_base(r[0]);
    return r;
  }
  const int d = degree_;
  std::vector<mpq_class> prod(2 * d - 1, 0);
  for (int i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < d; ++j) prod[i + j] += a[i] * b[j];
  }
  const auto& m = desc_.minpoly;
  for (int k = 2 * d - 2; k >= d; --k) {
    if (prod[k] == 0) continue;
    mpq_class c = prod[k];
    for (int j = 0; j < d; ++j) prod[k - d + j] -= c * m[j];
    prod[k] = 0;
  }
  prod.resize(d);
  for (auto& x : prod) normalize_base(x);
  return prod;
}

std::vector<mpq_class> Field::invert(const std::vector<mpq_class>& a) const {
  if (degree_ == 1) {
    if (a[0] == 0) throw MathError("division by zero");
    mpq_class r;
    if (desc_.prime == 0) {
      r = 1 / a[0];
    } else {
      mpz_class inv, v = a[0].get_num(), p = desc_.prime;
      mpz_invert(inv.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
      r = mpq_class(inv);
    }
    return {r};
  }
  // Extended Euclid on (minpoly, a) over the base field.
  auto norm_poly = [&](BasePoly& p) {
    for (auto& c : p) normalize_base(c);
    trim(p);
  };
  auto base_inv = [&](const mpq_class& c) {
    if (desc_.prime == 0) return mpq_class(1 / c);
    mpz_class inv, v = c.get_num(), p = desc_.prime;
    mpz_invert(inv.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
    return mpq_class(inv);
  };
  auto divmod = [&](BasePoly num, const BasePoly& den) {
    BasePoly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, 0);
    mpq_class lead_inv = base_inv(den.back());
    while (!num.empty() && num.size() >= den.size()) {
      std::size_t shift = num.size() - den.size();
      mpq_class c = num.back() * lead_inv;
      normalize_base(c);
      q[shift] = c;
      for (std::size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
      norm_poly(num);
    }
    norm_poly(q);
    return std::pair{q, num};
  };
  auto mul = [&](const BasePoly& x, const BasePoly& y) {
    if (x.empty() || y.empty()) return BasePoly{};
    BasePoly r(x.size() + y.size() - 1, 0);
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
    norm_poly(r);
    return r;
  };
  auto subp = [&](BasePoly x, const BasePoly& y) {
    if (x.size() < y.size()) x.resize(y.size(), 0);
    for (std::size_t i = 0; i < y.size(); ++i) x[i] -= y[i];
    norm_poly(x);
    return x;
  };
  BasePoly r0 = desc_.minpoly, r1 = a;
  norm_poly(r0);
  norm_poly(r1);
  if (r1.empty()) throw MathError("division by zero");
  BasePoly s0{}, s1{mpq_class(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    BasePoly s2 = subp(s0, mul(q, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) throw MathError("element is a zero divisor (minpoly reducible)");
  mpq_class c = base_inv(r0[0]);
  for (auto& x : s0) {
    x *= c;
    normalize_base(x);
  }
  s0.resize(degree_, 0);
  return s0;
}

// ---------------------------------------------------------------- Scalar

namespace {
const Field* common_field(const Scalar& a, const Scalar& b) {
  if (!a.field()) return b.field();
  if (!b.field() || a.field() == b.field()) return a.field();
  throw InputError("scalar arithmetic across different fields");
}
}  // namespace

bool Scalar::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const mpq_class& q) { return q == 0; });
}

bool Scalar::is_one() const {
  if (!field_ || c_.empty() || c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](const mpq_class& q) { return q == 0; });
}

Scalar Scalar::operator-() const {
  if (!field_) return *this;
  Scalar r = field_->zero();
  field_->add_into(r.c_, c_, true);
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  const Field* f = common_field(*this, o);
  if (!f) return *this;
  if (!o.field_) return *this;
  if (!field_) return *this = o;
  f->add_into(c_, o.c_, false);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  const Field* f = common_field(*this, o);
  if (!f || !o.field_) return *this;
  if (!field_) return *this = -o;
  f->add_into(c_, o.c_, true);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  const Field* f = common_field(*this, o);
  if (!f) return *this;
  if (!field_ || !o.field_) return *this = f->zero();
  c_ = f->multiply(c_, o.c_);
  return *this;
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (!a.field_ || !b.field_) return a.is_zero() && b.is_zero();
  if (a.field_ != b.field_) return false;
  return a.c_ == b.c_;
}

Scalar Scalar::inv() const {
  if (!field_ || is_zero()) throw MathError("division by zero");
  return Scalar(field_, field_->invert(c_));
}

Scalar Scalar::pow(long e) const {
  if (!field_) {
    if (e == 0) throw MathError("pow of untyped zero");
    return *this;
  }
  Scalar base = e < 0 ? inv() : *this;
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  Scalar acc = field_->one();
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

std::string Scalar::to_string() const {
  if (!field_ || is_zero()) return "0";
  if (field_->degree() == 1) return c_[0].get_str();
  const std::string& sym = field_->descriptor().symbol;
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const auto& c = c_[i];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? "+" : "-");
    else if (c < 0) os << "-";
    first = false;
    mpq_class a = abs(c);
    if (i == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    os << sym;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

// ---------------------------------------------------------------- polynomials

std::vector<mpq_class> cyclotomic_minpoly(int n) {
  if (n < 1) throw InputError("cyclotomic index must be positive");
  static std::mutex mu;
  static std::map<int, std::vector<mpq_class>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  // t^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<mpq_class> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d) continue;
    auto den = cyclotomic_minpoly(d);
    std::vector<mpq_class> q(num.size() - den.size() + 1, 0);
    for (std::size_t k = num.size(); k-- >= den.size();) {
      mpq_class c = num[k];  // den is monic
      std::size_t shift = k - (den.size() - 1);
      q[shift] = c;
      for (std::size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
      if (k == den.size() - 1) break;
    }
    num = q;
  }
  std::lock_guard<std::mutex> lock(mu);
  cache[n] = num;
  return num;
}

namespace {

std::vector<mpz_class> divisors_of(mpz_class v) {
  std::vector<mpz_class> out;
  v = abs(v);
  for (mpz_class d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      if (d * d != v) out.push_back(v / d);
    }
  }
  return out;
}

mpz_class eval_int(const std::vector<mpz_class>& p, const mpz_class& x) {
  mpz_class acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

}  // namespace

std::optional<bool> is_irreducible_small(const std::vector<mpq_class>& monic, long prime) {
  const int d = static_cast<int>(monic.size()) - 1;
  if (d <= 1) return true;
  if (d > 4) return std::nullopt;
  if (prime != 0) {
    if (prime > 1000) return std::nullopt;
    std::vector<long> c(monic.size());
    for (std::size_t i = 0; i < monic.size(); ++i)
      c[i] = mpz_class(monic[i].get_num() % prime).get_si();
    auto ev = [&](long x) {
      long acc = 0;
      for (std::size_t i = c.size(); i-- > 0;) acc = ((acc * x + c[i]) % prime + prime) % prime;
      return acc;
    };
    for (long x = 0; x < prime; ++x)
      if (ev(x) == 0) return false;
    if (d < 4) return true;
    // Monic quadratic factors x^2 + a x + b.
    for (long a = 0; a < prime; ++a) {
      for (long b = 0; b < prime; ++b) {
        std::vector<long> r(c.begin(), c.end());
        for (int k = 4; k >= 2; --k) {
          long q = r[k];
          r[k] = 0;
          r[k - 1] = ((r[k - 1] - q * a) % prime + prime) % prime;
          r[k - 2] = ((r[k - 2] - q * b) % prime + prime) % prime;
        }
        if (r[0] == 0 && r[1] == 0) return false;
      }
    }
    return true;
  }
  // Over Q: scale to a monic integer polynomial g(x) = L^d f(x/L).
  mpz_class L = 1;
  for (const auto& q : monic) L = lcm(L, mpz_class(q.get_den()));
  std::vector<mpz_class> g(d + 1);
  mpz_class Lp = 1;
  for (int j = d; j >= 0; --j) {
    mpq_class v = monic[j] * mpq_class(Lp);
    g[j] = v.get_num();
    Lp *= L;
  }
  if (g[0] == 0) return false;
  if (abs(g[0]) > mpz_class("1000000000000")) return std::nullopt;
  auto divs = divisors_of(g[0]);
  for (const auto& dv : divs)
    if (eval_int(g, dv) == 0 || eval_int(g, -dv) == 0) return false;
  if (d < 4) return true;
  // (x^2 + a x + b)(x^2 + c x + e) with b e = g0.
  const mpz_class &a3 = g[3], &a2 = g[2], &a1 = g[1], &a0 = g[0];
  for (const auto& dv : divs) {
    for (int sgn : {1, -1}) {
      mpz_class b = dv * sgn, e = a0 / b;
      if (b != e) {
        mpz_class numr = a1 - b * a3, den = e - b;
        if (numr % den != 0) continue;
        mpz_class a = numr / den, c = a3 - a;
        if (b + e + a * c == a2) return false;
      } else {
        if (a1 != b * a3) continue;
        // a + c = a3, a c = a2 - 2b
        mpz_class disc = a3 * a3 - 4 * (a2 - 2 * b);
        if (disc < 0) continue;
        mpz_class s = sqrt(disc);
        if (s * s == disc && (a3 + s) % 2 == 0) return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------- vectors

Vec zero_vec(const Field& F, std::size_t n) { return Vec(n, F.zero()); }

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec add(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scale(const Scalar& s, const Vec& v) {
  Vec r = v;
  for (auto& x : r) x = s * x;
  return r;
}

void axpy(Vec& y, const Scalar& a, const Vec& x) {
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!x[i].is_zero()) y[i] += a * x[i];
}

// ---------------------------------------------------------------- Mat

Mat::Mat(const Field& F, std::size_t rows, std::size_t cols)
    : field_(&F), rows_(rows), cols_(cols), data_(rows * cols, F.zero()) {}

Mat Mat::identity(const Field& F, std::size_t n) {
  Mat m(F, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = F.one();
  return m;
}

Mat Mat::from_columns(const Field& F, std::size_t rows, const std::vector<Vec>& cols) {
  Mat m(F, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw InputError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r)
      m(r, c) = cols[c][r].field() ? cols[c][r] : F.zero();
  }
  return m;
}

Mat Mat::from_rows(const Field& F, std::size_t cols, const std::vector<Vec>& rows) {
  Mat m(F, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = rows[r][c].field() ? rows[r][c] : F.zero();
  }
  return m;
}

Vec Mat::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vec Mat::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<long>(r * cols_),
             data_.begin() + static_cast<long>((r + 1) * cols_));
}

std::vector<Vec> Mat::columns() const {
  std::vector<Vec> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

void Mat::set_column(std::size_t c, const Vec& v) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r].field() ? v[r] : field_->zero();
}

Mat Mat::transpose() const {
  Mat t(*field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vec Mat::apply(const Vec& v) const {
  if (v.size() != cols_) throw InputError("matrix-vector size mismatch");
  Vec out(rows_, field_->zero());
  for (std::size_t r = 0; r < rows_; ++r) {
    Scalar acc = field_->zero();
    for (std::size_t c = 0; c < cols_; ++c) {
      const Scalar& a = (*this)(r, c);
      if (a.is_zero() || v[c].is_zero()) continue;
      acc += a * v[c];
    }
    out[r] = std::move(acc);
  }
  return out;
}

bool Mat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Mat operator*(const Mat& a, const Mat& b) { return kernels::gemm(a, b, kernels::default_exec()); }

Mat operator+(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix sum shape mismatch");
  Mat r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
  return r;
}

Mat operator-(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix difference shape mismatch");
  Mat r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
  return r;
}

bool operator==(const Mat& a, const Mat& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Mat Mat::hstack(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_) throw InputError("hstack row mismatch");
  const Field& F = a.field_ ? *a.field_ : *b.field_;
  Mat m(F, a.rows_, a.cols_ + b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t c = 0; c < a.cols_; ++c) m(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols_; ++c) m(r, a.cols_ + c) = b(r, c);
  }
  return m;
}

Mat Mat::vstack(const Mat& a, const Mat& b) {
  if (a.cols_ != b.cols_) throw InputError("vstack column mismatch");
  const Field& F = a.field_ ? *a.field_ : *b.field_;
  Mat m(F, a.rows_ + b.rows_, a.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t c = 0; c < a.cols_; ++c) m(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows_; ++r)
    for (std::size_t c = 0; c < a.cols_; ++c) m(a.rows_ + r, c) = b(r, c);
  return m;
}

// ---------------------------------------------------------------- linear algebra

Echelon rref(const Mat& m) { return kernels::row_reduce(m, kernels::default_exec()); }

std::size_t rank(const Mat& m) { return rref(m).pivots.size(); }

Mat kernel_basis(const Mat& m) {
  const Field& F = m.field();
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v = zero_vec(F, m.cols());
    v[free] = F.one();
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return Mat::from_columns(F, m.cols(), basis);
}

Mat image_basis(const Mat& m) {
  Echelon e = rref(m);
  std::vector<Vec> cols;
  for (auto p : e.pivots) cols.push_back(m.column(p));
  return Mat::from_columns(m.field(), m.rows(), cols);
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  const Field& F = m.field();
  Mat aug = Mat::hstack(m, Mat::from_columns(F, m.rows(), {b}));
  Echelon e = rref(aug);
  Vec x = zero_vec(F, m.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == m.cols()) return std::nullopt;
    x[e.pivots[i]] = e.reduced(i, m.cols());
  }
  return x;
}

bool in_span(const Mat& basis, const Vec& v) {
  if (basis.cols() == 0) return is_zero(v);
  return solve(basis, v).has_value();
}

bool span_contains(const Mat& amb, const Mat& sub) {
  if (sub.cols() == 0) return true;
  if (amb.cols() == 0) return sub.is_zero();
  return rank(Mat::hstack(amb, sub)) == rank(amb);
}

bool same_span(const Mat& a, const Mat& b) { return span_contains(a, b) && span_contains(b, a); }

Mat intersect(const Mat& a, const Mat& b) {
  const Field& F = a.field_ptr() ? a.field() : b.field();
  if (a.cols() == 0 || b.cols() == 0) return Mat(F, a.rows(), 0);
  Mat ia = image_basis(a), ib = image_basis(b);
  Mat neg_b = ib;
  for (std::size_t r = 0; r < neg_b.rows(); ++r)
    for (std::size_t c = 0; c < neg_b.cols(); ++c) neg_b(r, c) = -neg_b(r, c);
  Mat k = kernel_basis(Mat::hstack(ia, neg_b));
  std::vector<Vec> vecs;
  for (std::size_t c = 0; c < k.cols(); ++c) {
    Vec coeffs(k.rows() - ib.cols() > 0 ? ia.cols() : 0);
    Vec full = k.column(c);
    Vec head(full.begin(), full.begin() + static_cast<long>(ia.cols()));
    vecs.push_back(ia.apply(head));
  }
  return image_basis(Mat::from_columns(F, a.rows(), vecs));
}

Mat span_sum(const Mat& a, const Mat& b) { return image_basis(Mat::hstack(a, b)); }

Mat quotient_basis(const Mat& sub, const Mat& amb) {
  if (!span_contains(amb, sub)) throw MathError("inconsistent-subspace: sub is not contained in amb");
  const Field& F = amb.field();
  Mat sb = image_basis(sub);
  // Append ambient columns after the sub-basis; new pivots are representatives.
  Mat combined = Mat::hstack(sb, amb);
  Echelon e = rref(combined);
  std::vector<Vec> reps;
  for (auto p : e.pivots)
    if (p >= sb.cols()) reps.push_back(combined.column(p));
  return Mat::from_columns(F, amb.rows(), reps);
}

Vec coordinates(const Mat& basis, const Vec& v) {
  if (basis.cols() == 0) {
    if (!is_zero(v)) throw MathError("vector not in span of empty basis");
    return {};
  }
  auto x = solve(basis, v);
  if (!x) throw MathError("vector not in span");
  return *x;
}

}  // namespace monogen
