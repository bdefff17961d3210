#include "monogen/closedforms.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace monogen {
namespace {

std::string vec_str(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].to_string();
  os << ")";
  return os.str();
}

std::size_t span_dim(const Mat& m) { return m.cols() ? rank(m) : 0; }

Mat empty_cols(const Field& F, std::size_t rows) { return Mat(F, rows, 0); }

Mat cols_mat(const Field& F, std::size_t rows, const std::vector<Vec>& v) {
  return Mat::from_columns(F, rows, v);
}

// basis * coords, keeping the row count when there are no columns.
Mat times(const Mat& a, const Mat& b) {
  if (b.cols() == 0 || a.cols() == 0) return empty_cols(a.field(), a.rows());
  return a * b;
}

Mat hcat(const Mat& a, const Mat& b) {
  if (a.cols() == 0) return b;
  if (b.cols() == 0) return a;
  return Mat::hstack(a, b);
}

std::size_t sum_dim(const Mat& a, const Mat& b) { return span_dim(hcat(a, b)); }

// Basis of {v in span(basis) : map v = 0}, as columns of the ambient space.
Mat kernel_within(const Mat& map, const Mat& basis) {
  if (basis.cols() == 0) return basis;
  Mat k = kernel_basis(map * basis);
  return times(basis, k);
}

Scalar binomial2(const Field& F, int n) { return F.from_int(static_cast<long>(n) * (n - 1) / 2); }

std::string deg_str(int r) { return "H^" + std::to_string(r); }

// Compares num/den with the generic group in every degree 0..D.
void compare_all(CheckResult& res, const Pipeline& P, const std::vector<ClosedGroup>& closed) {
  for (int r = 0; r <= P.max_degree(); ++r) {
    const ClosedGroup& c = closed[static_cast<std::size_t>(r)];
    res.closed_table.push_back(c.dim());
    res.generic_table.push_back(P.group(r).dim);
    if (auto err = compare_with_generic(c, P, r)) res.fail(deg_str(r) + ": " + *err);
  }
}

AElem combine(const std::vector<AElem>& reps, const Vec& coords, const AElem& zero) {
  AElem out = zero;
  for (std::size_t i = 0; i < reps.size(); ++i)
    if (!coords[i].is_zero()) axpy(out, coords[i], reps[i]);
  return out;
}

}  // namespace

// ---- Pipeline -------------------------------------------------------------

Pipeline::Pipeline(const MonogenicAlgebra& A, int max_degree)
    : A_(&A), M_(std::make_unique<Bimodule>(Bimodule::regular(A))), D_(max_degree) {
  if (max_degree < 0) throw InputError("max degree must be non-negative");
  C_ = build_small_complex(*M_, max_degree + 1);
  H_ = cohomology_groups(C_);
}

std::vector<std::size_t> Pipeline::dims() const {
  std::vector<std::size_t> out;
  for (const auto& H : H_) out.push_back(H.dim);
  return out;
}

Mat Pipeline::cocycles(int r) const {
  return times(C_.basis[static_cast<std::size_t>(r)], group(r).cocycles);
}

Mat Pipeline::coboundaries(int r) const {
  return times(C_.basis[static_cast<std::size_t>(r)], group(r).coboundaries);
}

std::vector<AElem> Pipeline::representatives(int r) const {
  return group(r).ambient_representatives.columns();
}

Vec Pipeline::class_of(int r, const AElem& a) const { return class_coords(C_, group(r), a); }

bool Pipeline::is_coboundary(int r, const AElem& a) const {
  if (is_zero(a)) return true;
  const Mat B = coboundaries(r);
  return B.cols() && in_span(B, a);
}

std::size_t ClosedGroup::dim() const { return span_dim(num) - span_dim(den); }

std::optional<std::string> compare_with_generic(const ClosedGroup& c, const Pipeline& P, int r) {
  const Mat Z = P.cocycles(r), B = P.coboundaries(r);
  if (!span_contains(Z, c.num)) return "closed classes are not all cocycles";
  if (!span_contains(c.num, c.den)) return "closed relations are not inside the closed classes";
  if (!span_contains(B, c.den)) return "closed relations are not coboundaries";
  if (sum_dim(c.num, B) != span_dim(Z))
    return "closed classes miss part of H (dim " + std::to_string(c.dim()) + " vs " +
           std::to_string(P.group(r).dim) + ")";
  const std::size_t inter = span_dim(c.num) + span_dim(B) - sum_dim(c.num, B);
  if (inter != span_dim(c.den))
    return "closed relations miss coboundaries inside the closed classes (dim " +
           std::to_string(c.dim()) + " vs " + std::to_string(P.group(r).dim) + ")";
  return std::nullopt;
}

bool CheckResult::hypotheses_hold() const {
  return std::all_of(hypotheses.begin(), hypotheses.end(), [](const Hypothesis& h) { return h.holds; });
}

bool CheckResult::add_hypothesis(std::string name, bool holds) {
  hypotheses.push_back({std::move(name), holds});
  return holds;
}

void CheckResult::finish() {
  ran = true;
  match = mismatches.empty();
}

// ---- helpers --------------------------------------------------------------

Mat k_twisted_invariants(const MonogenicAlgebra& A, long s) {
  const AlgebraK& K = A.K();
  const std::size_t d = K.dim();
  Mat stacked(A.field(), 0, d);
  bool first = true;
  for (std::size_t b = 0; b < d; ++b) {
    const KElem e = K.basis_vec(b);
    Mat block = K.right_mul_matrix(e) - K.left_mul_matrix(A.alpha_pow(e, s));
    stacked = first ? block : Mat::vstack(stacked, block);
    first = false;
  }
  return kernel_basis(stacked);
}

Mat alpha_fixed(const MonogenicAlgebra& A) {
  return kernel_basis(A.alpha().matrix() - Mat::identity(A.field(), A.dim_k()));
}

Mat embed_columns(const MonogenicAlgebra& A, const Mat& kcols, int power) {
  std::vector<Vec> out;
  for (std::size_t c = 0; c < kcols.cols(); ++c) out.push_back(A.embed(kcols.column(c), power));
  return cols_mat(A.field(), A.dim_a(), out);
}

Mat norm_times_lambda_n(const MonogenicAlgebra& A) {
  const Mat R = A.K().right_mul_matrix(A.lambda(A.n()));
  Mat sum(A.field(), A.dim_k(), A.dim_k());
  for (int l = 0; l < A.n(); ++l) sum = sum + R * A.alpha().power(l);
  return sum;
}

std::vector<AElem> canonical_basis(const MonogenicAlgebra& A, int r) {
  if (r % 2 == 1 && A.n() < 2) return {};
  const Mat V = k_twisted_invariants(A, static_cast<long>(r / 2) * A.n());
  return embed_columns(A, V, r % 2).columns();
}

std::vector<Scalar> minimal_polynomial(const Mat& m) {
  const Field& F = m.field();
  const std::size_t d = m.rows();
  auto flat = [&](const Mat& x) {
    Vec v;
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) v.push_back(x(r, c));
    return v;
  };
  std::vector<Vec> powers;
  Mat cur = Mat::identity(F, d);
  for (std::size_t k = 0; k <= d; ++k) {
    Vec v = flat(cur);
    if (!powers.empty()) {
      Mat basis = cols_mat(F, d * d, powers);
      if (auto c = solve(basis, v)) {
        std::vector<Scalar> mu;
        for (const auto& s : *c) mu.push_back(-s);
        mu.push_back(F.one());
        return mu;
      }
    }
    powers.push_back(std::move(v));
    cur = cur * m;
  }
  throw MathError("minimal polynomial search exceeded the dimension");
}

namespace {

Scalar eval_poly(const std::vector<Scalar>& p, const Scalar& x) {
  Scalar acc = x.field()->zero();
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::optional<std::vector<mpz_class>> divisors(mpz_class a) {
  if (a < 0) a = -a;
  if (a > mpz_class("1000000000000")) return std::nullopt;
  std::vector<mpz_class> out;
  for (mpz_class q = 1; q * q <= a; ++q)
    if (a % q == 0) {
      out.push_back(q);
      if (q * q != a) out.push_back(a / q);
    }
  return out;
}

// Distinct roots of p in F, nullopt when the search is not supported.
std::optional<std::size_t> count_distinct_roots(const std::vector<Scalar>& p, const Field& F) {
  if (F.kind() == FieldKind::PrimeField) {
    if (F.characteristic() > 200000) return std::nullopt;
    std::size_t count = 0;
    for (long c = 0; c < F.characteristic(); ++c)
      if (eval_poly(p, F.from_int(c)).is_zero()) ++count;
    return count;
  }
  if (F.kind() != FieldKind::Rationals) return std::nullopt;
  mpz_class lcm = 1;
  for (const auto& s : p) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), s.coords()[0].get_den_mpz_t());
  std::vector<mpz_class> a;
  for (const auto& s : p) a.push_back(mpz_class(s.coords()[0] * lcm));
  std::size_t low = 0;
  while (low < a.size() && a[low] == 0) ++low;
  std::set<mpq_class> roots;
  if (low > 0) roots.insert(0);
  auto pd = divisors(a[low]);
  auto qd = divisors(a.back());
  if (!pd || !qd) return std::nullopt;
  for (const auto& num : *pd)
    for (const auto& den : *qd)
      for (int sign : {1, -1}) {
        mpq_class cand(sign * num, den);
        cand.canonicalize();
        if (eval_poly(p, F.from_rational(cand)).is_zero()) roots.insert(cand);
      }
  return roots.size();
}

}  // namespace

std::optional<bool> alpha_diagonalizable(const MonogenicAlgebra& A) {
  const Mat& M = A.alpha().matrix();
  const Field& F = A.field();
  bool diagonal = true;
  for (std::size_t r = 0; r < M.rows() && diagonal; ++r)
    for (std::size_t c = 0; c < M.cols() && diagonal; ++c)
      if (r != c && !M(r, c).is_zero()) diagonal = false;
  if (diagonal) return true;
  const std::vector<Scalar> mu = minimal_polynomial(M);
  const std::size_t deg = mu.size() - 1;
  if (auto roots = count_distinct_roots(mu, F)) return *roots == deg;
  // Extensions: try roots of unity built from the generator.
  std::vector<Scalar> cands{F.zero(), F.one(), -F.one()};
  Scalar t = F.generator();
  Scalar p = F.one();
  for (int j = 1; j < 64; ++j) {
    p = p * t;
    cands.push_back(p);
    cands.push_back(-p);
  }
  std::vector<Scalar> distinct;
  for (const auto& c : cands)
    if (eval_poly(mu, c).is_zero() &&
        std::find(distinct.begin(), distinct.end(), c) == distinct.end())
      distinct.push_back(c);
  if (distinct.size() == deg) return true;
  return std::nullopt;
}

std::optional<SeparatingWitness> witness_for(const Instance& inst, const std::vector<KElem>& user) {
  const MonogenicAlgebra& A = inst.alg();
  std::vector<KElem> cands = user;
  cands.insert(cands.end(), inst.witness_candidates.begin(), inst.witness_candidates.end());
  std::vector<KElem> extra;
  if (inst.group) {
    for (auto z : inst.group->center) cands.push_back(A.K().basis_vec(z));
    extra = class_sums(*inst.group, A.field());
  }
  return find_witness(A, cands, extra);
}

// ---- witness checks --------------------------------------------------------

namespace {

bool witness_ok(const MaybeWitness& w) { return w && w->ok(); }

}  // namespace

CheckResult witness_check(const MonogenicAlgebra& A, const MaybeWitness& w) {
  CheckResult res;
  res.check = "witness";
  res.note("witness", witness_ok(w) ? A.K().format(w->value) : "none");
  if (!res.add_hypothesis("separating witness", witness_ok(w))) return res;
  res.finish();
  return res;
}

CheckResult cochain_shape_check(const Pipeline& P, const MaybeWitness& w) {
  CheckResult res;
  res.check = "cochains";
  if (!res.add_hypothesis("separating witness", witness_ok(w))) return res;
  const MonogenicAlgebra& A = P.algebra();
  for (int r = 0; r <= P.max_degree(); ++r) {
    const Mat closed = embed_columns(A, k_twisted_invariants(A, static_cast<long>(r / 2) * A.n()), r % 2);
    const Mat& generic = P.complex().basis[static_cast<std::size_t>(r)];
    res.closed_table.push_back(span_dim(closed));
    res.generic_table.push_back(generic.cols());
    if (!same_span(closed, generic)) res.fail("C^" + std::to_string(r) + " is not the K or K x shape");
  }
  res.finish();
  return res;
}

CheckResult differentials_check(const Pipeline& P, const MaybeWitness& w) {
  CheckResult res;
  res.check = "differentials";
  if (!res.add_hypothesis("separating witness", witness_ok(w))) return res;
  const MonogenicAlgebra& A = P.algebra();
  const Mat id = Mat::identity(A.field(), A.dim_k());
  const Mat T = norm_times_lambda_n(A);
  for (int r = 1; r <= P.max_degree() + 1; ++r) {
    const int s = r - 1;
    const Mat V = k_twisted_invariants(A, static_cast<long>(s / 2) * A.n());
    if (V.cols() == 0) continue;
    Mat closed = s % 2 == 0 ? embed_columns(A, (A.alpha().matrix() - id) * V, 1)
                            : embed_columns(A, (Mat(A.field(), A.dim_k(), A.dim_k()) - T) * V, 0);
    Mat generic = small_differential_ambient(P.bimodule(), r) * embed_columns(A, V, s % 2);
    if (!(closed == generic)) res.fail("d^" + std::to_string(r) + " differs from the closed form");
  }
  if (is_zero(A.lambda(A.n()))) res.note("even differentials", "zero (lambda_n = 0)");
  res.finish();
  return res;
}

CheckResult lambda_n_identity_check(const Pipeline& P) {
  CheckResult res;
  res.check = "lambda-n-identity";
  const MonogenicAlgebra& A = P.algebra();
  const KElem& ln = A.lambda(A.n());
  for (int m = 0; 2 * m <= P.max_degree(); ++m) {
    const Mat V = k_twisted_invariants(A, static_cast<long>(m) * A.n());
    for (const auto& lam : V.columns())
      if (!(A.K().mul(A.alpha_pow(lam, A.n()), ln) == A.K().mul(lam, ln)))
        res.fail("alpha^n(l) l_n != l l_n for l = " + A.K().format(lam) + " in degree " +
                 std::to_string(2 * m));
  }
  res.finish();
  return res;
}

CheckResult witness_cohomology_check(const Pipeline& P, const MaybeWitness& w) {
  CheckResult res;
  res.check = "witness-cohomology";
  if (!res.add_hypothesis("separating witness", witness_ok(w))) return res;
  const MonogenicAlgebra& A = P.algebra();
  const Field& F = A.field();
  const Mat id = Mat::identity(F, A.dim_k());
  const Mat T = norm_times_lambda_n(A);
  std::vector<ClosedGroup> closed;
  for (int r = 0; r <= P.max_degree(); ++r) {
    ClosedGroup c;
    if (r == 0) {
      c.num = embed_columns(A, intersect(alpha_fixed(A), center(A.K())), 0);
    } else if (r % 2 == 1) {
      const Mat V = k_twisted_invariants(A, static_cast<long>(r / 2) * A.n());
      c.num = embed_columns(A, kernel_within(T, V), 1);
      c.den = embed_columns(A, times(A.alpha().matrix() - id, V), 1);
    } else {
      const int m = (r - 2) / 2;
      c.num = embed_columns(A, intersect(alpha_fixed(A), k_twisted_invariants(A, static_cast<long>(m + 1) * A.n())), 0);
      c.den = embed_columns(A, times(T, k_twisted_invariants(A, static_cast<long>(m) * A.n())), 0);
    }
    if (c.den.rows() == 0) c.den = empty_cols(F, A.dim_a());
    closed.push_back(std::move(c));
  }
  compare_all(res, P, closed);
  res.finish();
  return res;
}

CheckResult cyclic_group_cohomology_check(const Pipeline& P, const MaybeWitness& w) {
  CheckResult res;
  res.check = "cyclic-group-cohomology";
  const MonogenicAlgebra& A = P.algebra();
  const Field& F = A.field();
  const std::size_t d = A.dim_k();
  res.add_hypothesis("separating witness", witness_ok(w));
  res.add_hypothesis("lambda_n invertible", rank(A.K().left_mul_matrix(A.lambda(A.n()))) == d);
  res.add_hypothesis("alpha^n = id", A.alpha().power(A.n()) == Mat::identity(F, d));
  const Mat Z = image_basis(center(A.K()));
  const Mat aZ = A.alpha().matrix() * Z;
  bool preserved = span_contains(Z, aZ);
  res.add_hypothesis("alpha preserves Z(K)", preserved);
  if (!res.hypotheses_hold()) return res;
  // alpha restricted to Z(K) in the basis Z.
  std::vector<Vec> cols;
  for (const auto& v : aZ.columns()) cols.push_back(coordinates(Z, v));
  const std::size_t z = Z.cols();
  const Mat a = cols_mat(F, z, cols);
  const Mat idz = Mat::identity(F, z);
  Mat norm(F, z, z);
  Mat pw = idz;
  for (int h = 0; h < A.n(); ++h) {
    norm = norm + pw;
    pw = pw * a;
  }
  const std::size_t ker_fix = z - rank(a - idz), rk_fix = rank(a - idz);
  const std::size_t ker_norm = z - rank(norm), rk_norm = rank(norm);
  const auto gen = P.dims();
  for (int r = 0; r <= P.max_degree(); ++r) {
    std::size_t h = r == 0 ? ker_fix : (r % 2 ? ker_norm - rk_fix : ker_fix - rk_norm);
    res.closed_table.push_back(h);
    res.generic_table.push_back(gen[static_cast<std::size_t>(r)]);
    if (h != gen[static_cast<std::size_t>(r)])
      res.fail(deg_str(r) + ": group cohomology dim " + std::to_string(h) + " vs " +
               std::to_string(gen[static_cast<std::size_t>(r)]));
  }
  res.finish();
  return res;
}

namespace {

void diagonal_hypotheses(CheckResult& res, const MonogenicAlgebra& A, const MaybeWitness& w) {
  res.add_hypothesis("separating witness", witness_ok(w));
  res.add_hypothesis("alpha is an automorphism", A.alpha().is_automorphism());
  const auto diag = alpha_diagonalizable(A);
  res.add_hypothesis("alpha diagonalizable over the ground field", diag.value_or(false));
  if (!diag) res.note("diagonalizability", "not certifiable over this field");
}

// ker(alpha - id) cap K^{alpha^{mn}} cap Ann(n lambda_n), the odd closed classes.
Mat odd_diagonal_classes(const MonogenicAlgebra& A, int m) {
  const Scalar nn = A.field().from_int(A.n());
  const Mat ann = kernel_basis(A.K().right_mul_matrix(scale(nn, A.lambda(A.n()))));
  return intersect(intersect(alpha_fixed(A), k_twisted_invariants(A, static_cast<long>(m) * A.n())), ann);
}

}  // namespace

CheckResult diagonal_alpha_check(const Pipeline& P, const MaybeWitness& w) {
  CheckResult res;
  res.check = "diagonal-alpha";
  const MonogenicAlgebra& A = P.algebra();
  diagonal_hypotheses(res, A, w);
  if (!res.hypotheses_hold()) return res;
  const Field& F = A.field();
  const Mat fixed = alpha_fixed(A);
  const Mat nR = A.K().right_mul_matrix(scale(F.from_int(A.n()), A.lambda(A.n())));
  std::vector<ClosedGroup> closed;
  for (int r = 0; r <= P.max_degree(); ++r) {
    ClosedGroup c;
    c.den = empty_cols(F, A.dim_a());
    if (r == 0) {
      c.num = embed_columns(A, intersect(fixed, center(A.K())), 0);
    } else if (r % 2 == 1) {
      c.num = embed_columns(A, odd_diagonal_classes(A, r / 2), 1);
    } else {
      const int m = (r - 2) / 2;
      c.num = embed_columns(A, intersect(fixed, k_twisted_invariants(A, static_cast<long>(m + 1) * A.n())), 0);
      c.den = embed_columns(A, times(nR, intersect(fixed, k_twisted_invariants(A, static_cast<long>(m) * A.n()))), 0);
    }
    closed.push_back(std::move(c));
  }
  compare_all(res, P, closed);
  res.finish();
  return res;
}

CheckResult odd_cup_check(const Pipeline& P, const Products& X, const MaybeWitness& w) {
  CheckResult res;
  res.check = "odd-cups";
  const MonogenicAlgebra& A = P.algebra();
  diagonal_hypotheses(res, A, w);
  if (!res.hypotheses_hold()) return res;
  const Scalar c = -binomial2(A.field(), A.n());
  const KElem& ln = A.lambda(A.n());
  for (int m = 0; 2 * m + 1 <= P.max_degree(); ++m)
    for (int m2 = 0; 2 * m + 2 * m2 + 2 <= P.max_degree(); ++m2) {
      const int p = 2 * m + 1, q = 2 * m2 + 1;
      for (const auto& l1 : odd_diagonal_classes(A, m).columns())
        for (const auto& l2 : odd_diagonal_classes(A, m2).columns()) {
          const SmallCochain a{p, A.embed(l1, 1)}, b{q, A.embed(l2, 1)};
          const AElem got = X.cup_small(a, b);
          const AElem want = A.embed(scale(c, A.K().mul(A.K().mul(l1, l2), ln)));
          if (!(got == want))
            res.fail("cup in degrees " + std::to_string(p) + "," + std::to_string(q) + " gives " +
                     A.format(got) + ", expected " + A.format(want));
          if (p + q <= X.max_degree() && !P.is_coboundary(p + q, sub(got, X.cup_via_bar(a, b))))
            res.fail("closed odd cup differs from the bar route in degree " + std::to_string(p + q));
        }
    }
  res.finish();
  return res;
}

// ---- alpha = id ------------------------------------------------------------

namespace {

Mat commutative_model(const MonogenicAlgebra& A) {
  const Mat Z = image_basis(center(A.K()));
  Mat out = empty_cols(A.field(), A.dim_a());
  for (int u = 0; u < A.n(); ++u) out = hcat(out, embed_columns(A, Z, u));
  return out;
}

AElem derivative_of_f(const MonogenicAlgebra& A) {
  const int n = A.n();
  const Field& F = A.field();
  AElem out = A.zero();
  for (int i = 0; i < n; ++i) {
    const KElem li = i == 0 ? A.K().unit() : A.lambda(i);
    out = add(out, A.embed(scale(F.from_int(n - i), li), n - i - 1));
  }
  return out;
}

}  // namespace

CheckResult identity_alpha_complex_check(const Pipeline& P) {
  CheckResult res;
  res.check = "identity-alpha-complex";
  const MonogenicAlgebra& A = P.algebra();
  if (!res.add_hypothesis("alpha = id", A.alpha().is_identity())) return res;
  const Mat C = commutative_model(A);
  const Mat Fp = A.left_mul_matrix(derivative_of_f(A));
  for (int r = 0; r <= P.max_degree() + 1; ++r) {
    const Mat& B = P.complex().basis[static_cast<std::size_t>(r)];
    res.closed_table.push_back(span_dim(C));
    res.generic_table.push_back(B.cols());
    if (!same_span(C, B)) res.fail("C^" + std::to_string(r) + " is not Z(K)[x]/<f>");
    if (r == 0) continue;
    const Mat& S = P.complex().basis[static_cast<std::size_t>(r - 1)];
    const Mat generic = times(small_differential_ambient(P.bimodule(), r), S);
    const Mat closed = r % 2 ? Mat(A.field(), A.dim_a(), S.cols()) : times(Fp, S);
    if (!(generic == closed))
      res.fail("d^" + std::to_string(r) + (r % 2 ? " is not zero" : " is not multiplication by f'"));
  }
  res.finish();
  return res;
}

CheckResult identity_alpha_cohomology_check(const Pipeline& P) {
  CheckResult res;
  res.check = "identity-alpha-cohomology";
  const MonogenicAlgebra& A = P.algebra();
  if (!res.add_hypothesis("alpha = id", A.alpha().is_identity())) return res;
  const Mat C = commutative_model(A);
  const Mat Fp = A.left_mul_matrix(derivative_of_f(A));
  std::vector<ClosedGroup> closed;
  for (int r = 0; r <= P.max_degree(); ++r) {
    ClosedGroup c;
    c.den = empty_cols(A.field(), A.dim_a());
    if (r == 0) {
      c.num = C;
    } else if (r % 2) {
      c.num = kernel_within(Fp, C);
    } else {
      c.num = C;
      c.den = times(Fp, C);
    }
    closed.push_back(std::move(c));
  }
  compare_all(res, P, closed);
  res.finish();
  return res;
}

// ---- group algebras ----------------------------------------------------------

namespace {

bool centralizer_condition(const GroupData& G, std::size_t g, long r) {
  for (auto h : G.centralizer(g))
    if (!G.character[h].pow(r).is_one()) return false;
  return true;
}

}  // namespace

Mat ClassBasisData::span(const Field& F, std::size_t dim) const { return cols_mat(F, dim, basis); }

Mat ClassBasisData::kernel_span(const Field& F, std::size_t dim) const {
  std::vector<Vec> v;
  for (std::size_t j = 0; j < basis.size(); ++j)
    if (in_kernel[j]) v.push_back(basis[j]);
  return cols_mat(F, dim, v);
}

ClassBasisData class_basis(const GroupData& G, const Field& F, long r) {
  if (!G.has_character()) throw InputError("class bases need a character");
  ClassBasisData out;
  out.r = r;
  for (std::size_t c = 0; c < G.conj_classes.size(); ++c) {
    const auto& cls = G.conj_classes[c];
    const std::size_t g = cls.front();
    const bool member = centralizer_condition(G, g, r);
    // gamma_{h g h^-1} = chi^r(h) gamma_g, starting from gamma_g = 1.
    std::vector<std::optional<Scalar>> gamma(G.order);
    gamma[g] = F.one();
    bool consistent = true;
    for (std::size_t h = 0; h < G.order; ++h) {
      const std::size_t k = G.conjugate(h, g);
      const Scalar val = G.character[h].pow(r);
      if (!gamma[k]) gamma[k] = val;
      else if (!(*gamma[k] == val)) consistent = false;
    }
    if (member != consistent) out.inconsistent.push_back(c);
    if (!member) continue;
    KElem a = zero_vec(F, G.order);
    bool kernel = true;
    for (auto e : cls) {
      a[e] = *gamma[e];
      if (!G.character[e].is_one()) kernel = false;
    }
    out.classes.push_back(c);
    out.in_kernel.push_back(kernel);
    out.basis.push_back(std::move(a));
  }
  return out;
}

CheckResult class_basis_check(const MonogenicAlgebra& A, const GroupData& G, long bound) {
  CheckResult res;
  res.check = "class-basis";
  if (!res.add_hypothesis("group algebra with character", G.has_character() && G.order == A.dim_k()))
    return res;
  for (long r = 0; r <= bound; ++r) {
    const ClassBasisData cb = class_basis(G, A.field(), r);
    const Mat inv = k_twisted_invariants(A, r);
    res.closed_table.push_back(cb.basis.size());
    res.generic_table.push_back(inv.cols());
    if (!same_span(cb.span(A.field(), A.dim_k()), inv))
      res.fail("class basis differs from K^{alpha^" + std::to_string(r) + "}");
    for (auto c : cb.inconsistent)
      res.fail("class " + std::to_string(c) + " at r = " + std::to_string(r) +
               ": centralizer test and gamma propagation disagree");
  }
  res.finish();
  return res;
}

CheckResult group_algebra_check(const Pipeline& P, const GroupData& G, std::optional<std::size_t> g1) {
  CheckResult res;
  res.check = "group-algebra";
  const MonogenicAlgebra& A = P.algebra();
  const Field& F = A.field();
  if (!res.add_hypothesis("group algebra with character", G.has_character() && G.order == A.dim_k()))
    return res;
  if (!res.add_hypothesis("g1 given", g1.has_value())) return res;
  res.add_hypothesis("g1 central", std::find(G.center.begin(), G.center.end(), *g1) != G.center.end());
  res.add_hypothesis("chi(g1) primitive n-th root of unity",
                     F.multiplicative_order(G.character[*g1]) == A.n());
  if (!res.hypotheses_hold()) return res;
  const std::size_t d = A.dim_k();
  auto kN = [&](long s) { return class_basis(G, F, s).kernel_span(F, d); };
  const Mat nR = A.K().right_mul_matrix(scale(F.from_int(A.n()), A.lambda(A.n())));
  const Mat ann = kernel_basis(nR);
  std::vector<ClosedGroup> closed;
  for (int r = 0; r <= P.max_degree(); ++r) {
    ClosedGroup c;
    c.den = empty_cols(F, A.dim_a());
    const long m = r == 0 ? 0 : (r % 2 ? r / 2 : (r - 2) / 2);
    if (r == 0) {
      c.num = embed_columns(A, kN(0), 0);
    } else if (r % 2) {
      c.num = embed_columns(A, intersect(kN(m * A.n()), ann), 1);
    } else {
      c.num = embed_columns(A, kN((m + 1) * A.n()), 0);
      c.den = embed_columns(A, times(nR, kN(m * A.n())), 0);
    }
    closed.push_back(std::move(c));
  }
  compare_all(res, P, closed);
  res.finish();
  return res;
}

std::optional<long> character_power_order(const MonogenicAlgebra& A, long max_order) {
  return A.alpha().order_of_power(A.n(), max_order);
}

long class_period(const GroupData& G, std::size_t cls, int n, long v) {
  const std::size_t g = G.conj_classes.at(cls).front();
  for (long m = 1; m <= 2 * v; ++m)
    if (centralizer_condition(G, g, m * n)) return m;
  return 0;
}

CheckResult class_period_check(const GroupData& G, int n, long v) {
  CheckResult res;
  res.check = "class-periods";
  if (!res.add_hypothesis("character attached", G.has_character())) return res;
  for (std::size_t c = 0; c < G.conj_classes.size(); ++c) {
    const long m0 = class_period(G, c, n, v);
    res.note(G.labels[G.conj_classes[c].front()], std::to_string(m0));
    const std::size_t g = G.conj_classes[c].front();
    for (long m = 1; m <= 2 * v; ++m) {
      const bool in = centralizer_condition(G, g, m * n);
      if (in != (m0 != 0 && m % m0 == 0))
        res.fail("class of " + G.labels[g] + ": membership at m = " + std::to_string(m) +
                 " breaks divisibility by " + std::to_string(m0));
    }
  }
  res.finish();
  return res;
}

CheckResult periodicity_check(const Pipeline& P, const MaybeWitness& w) {
  CheckResult res;
  res.check = "periodicity";
  const MonogenicAlgebra& A = P.algebra();
  const auto v = character_power_order(A);
  if (!res.add_hypothesis("alpha^n has finite order", v.has_value())) return res;
  const long per = 2 * *v;
  res.note("v", std::to_string(*v));
  res.note("period", std::to_string(per));
  const auto dims = P.dims();
  res.generic_table = dims;
  const int D = P.max_degree();
  for (long r = 1; r + per <= D; ++r)
    if (dims[static_cast<std::size_t>(r)] != dims[static_cast<std::size_t>(r + per)])
      res.fail("dim H^" + std::to_string(r) + " != dim H^" + std::to_string(r + per));
  const bool degenerate = is_zero(scale(A.field().from_int(A.n()), A.lambda(A.n())));
  if (degenerate && !witness_ok(w)) res.note("n lambda_n = 0 clause", "skipped without a witness");
  if (degenerate && witness_ok(w)) {
    if (per <= D && dims[static_cast<std::size_t>(per)] != dims[0])
      res.fail("dim H^" + std::to_string(per) + " != dim H^0");
    for (int m = 0; 2 * m + 1 <= D; ++m)
      if (dims[static_cast<std::size_t>(2 * m + 1)] != dims[static_cast<std::size_t>(2 * m)])
        res.fail("dim H^" + std::to_string(2 * m + 1) + " != dim H^" + std::to_string(2 * m));
  }
  if (per > D) res.note("coverage", "max degree below one period");
  res.finish();
  return res;
}

Vec cup_class(const Pipeline& P, const Products& X, int p, const AElem& a, int q, const AElem& b) {
  return P.class_of(p + q, X.cup_small({p, a}, {q, b}));
}

namespace {

// Subalgebra of HH^{<=D} generated by gens (plus 1) and bijectivity of the
// last generator when it has positive even degree.
void generation_checks(CheckResult& res, const Pipeline& P, const Products& X,
                       const std::vector<Generator>& gens) {
  const MonogenicAlgebra& A = P.algebra();
  const Field& F = A.field();
  const int D = P.max_degree();
  for (const auto& g : gens) {
    bool ok = g.degree >= 0 && g.degree <= D && P.complex().contains(g.degree, g.value) &&
              is_cocycle(P.complex(), g.degree, g.value);
    res.add_hypothesis("generator " + g.name + " is a cocycle", ok);
  }
  if (!res.hypotheses_hold()) return;
  std::vector<std::vector<AElem>> reps(static_cast<std::size_t>(D + 1));
  std::vector<Mat> spans(static_cast<std::size_t>(D + 1));
  for (int r = 0; r <= D; ++r) {
    reps[static_cast<std::size_t>(r)] = P.representatives(r);
    spans[static_cast<std::size_t>(r)] = Mat(F, P.group(r).dim, 0);
  }
  auto add_class = [&](int r, const Vec& c) {
    Mat& S = spans[static_cast<std::size_t>(r)];
    if (c.empty() || is_zero(c)) return false;
    Mat cand = hcat(S, cols_mat(F, c.size(), {c}));
    if (span_dim(cand) == span_dim(S)) return false;
    S = cand;
    return true;
  };
  if (P.group(0).dim) add_class(0, P.class_of(0, A.one()));
  for (const auto& g : gens) add_class(g.degree, P.class_of(g.degree, g.value));
  bool changed = true;
  while (changed) {
    changed = false;
    for (int r = 0; r <= D; ++r)
      for (const auto& g : gens) {
        const int t = r + g.degree;
        if (t > D) continue;
        const Mat S = spans[static_cast<std::size_t>(r)];
        for (const auto& c : S.columns()) {
          const AElem a = combine(reps[static_cast<std::size_t>(r)], c, A.zero());
          if (add_class(t, cup_class(P, X, r, a, g.degree, g.value))) changed = true;
        }
      }
  }
  for (int r = 0; r <= D; ++r) {
    const std::size_t got = span_dim(spans[static_cast<std::size_t>(r)]);
    res.closed_table.push_back(got);
    res.generic_table.push_back(P.group(r).dim);
    if (got != P.group(r).dim)
      res.fail("generators reach dim " + std::to_string(got) + " of " + deg_str(r) + " (dim " +
               std::to_string(P.group(r).dim) + ")");
  }
  if (gens.empty()) return;
  const Generator& per = gens.back();
  if (per.degree <= 0 || per.degree % 2) return;
  for (int r = 1; r + per.degree <= D; ++r) {
    const auto& R = reps[static_cast<std::size_t>(r)];
    std::vector<Vec> img;
    for (const auto& a : R) img.push_back(cup_class(P, X, r, a, per.degree, per.value));
    const std::size_t target = P.group(r + per.degree).dim;
    const std::size_t rk = img.empty() ? 0 : span_dim(cols_mat(F, target, img));
    if (R.size() != target || rk != target)
      res.fail("cup with " + per.name + " is not bijective " + deg_str(r) + " -> " +
               deg_str(r + per.degree));
  }
}

}  // namespace

CheckResult generators_check(const Pipeline& P, const Products& X, const std::vector<Generator>& gens) {
  CheckResult res;
  res.check = "generators";
  generation_checks(res, P, X, gens);
  if (res.hypotheses_hold()) res.finish();
  return res;
}

CheckResult presentation_check(const Pipeline& P, const Products& X) {
  CheckResult res;
  res.check = "presentation";
  const MonogenicAlgebra& A = P.algebra();
  const auto v = character_power_order(A);
  if (!res.add_hypothesis("alpha^n has finite order", v.has_value())) return res;
  const int per = static_cast<int>(2 * *v);
  const int D = P.max_degree();
  if (!res.add_hypothesis("max degree covers one period", per <= D)) return res;
  std::vector<Generator> gens;
  for (int r = 0; r < per; ++r) {
    const auto reps = P.representatives(r);
    for (std::size_t i = 0; i < reps.size(); ++i)
      gens.push_back({"h" + std::to_string(r) + "_" + std::to_string(i), r, reps[i]});
  }
  gens.push_back({"periodicity", per, A.one()});
  std::string names;
  for (const auto& g : gens) names += (names.empty() ? "" : " ") + g.name + "@" + std::to_string(g.degree);
  res.note("generators", names);
  generation_checks(res, P, X, gens);
  if (!res.hypotheses_hold()) return res;
  const auto dims = P.dims();
  bool quiet = is_zero(scale(A.field().from_int(A.n()), A.lambda(A.n())));
  for (int m = 1; m < *v; ++m) quiet = quiet && dims[static_cast<std::size_t>(2 * m)] == 0;
  if (quiet) {
    res.note("pattern", "k[N]^G (x) k[y,x]/<x^2>, deg x = 1, deg y = " + std::to_string(per));
    for (int r = 0; r <= D; ++r) {
      const std::size_t want = (r % per == 0 || r % per == 1) ? dims[0] : 0;
      if (dims[static_cast<std::size_t>(r)] != want)
        res.fail("pattern predicts dim " + std::to_string(want) + " for " + deg_str(r));
    }
    const AElem x = A.embed(A.K().unit(), 1);
    if (D >= 2 && is_cocycle(P.complex(), 1, x)) {
      const Vec xx = cup_class(P, X, 1, x, 1, x);
      if (!is_zero(xx)) res.fail("x cup x is not zero in cohomology");
      std::vector<Vec> img;
      for (const auto& a : P.representatives(0)) img.push_back(cup_class(P, X, 0, a, 1, x));
      if (dims[1] != dims[0] || (!img.empty() && span_dim(cols_mat(A.field(), dims[1], img)) != dims[1]))
        res.fail("cup with x is not bijective H^0 -> H^1");
    } else if (D >= 2) {
      res.fail("x is not a cocycle");
    }
  } else {
    res.note("pattern", "not applicable");
  }
  res.finish();
  return res;
}

// ---- rank-one Hopf algebras --------------------------------------------------

QuotientGroup quotient_group(const GroupData& G, const std::vector<std::size_t>& subgroup) {
  std::vector<std::size_t> key(G.order);
  for (std::size_t g = 0; g < G.order; ++g) {
    std::size_t best = G.order;
    for (auto h : subgroup) best = std::min(best, G.mul(g, h));
    key[g] = best;
  }
  std::vector<std::size_t> reps(key.begin(), key.end());
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  QuotientGroup Q;
  Q.projection.resize(G.order);
  for (std::size_t g = 0; g < G.order; ++g)
    Q.projection[g] = static_cast<std::size_t>(std::lower_bound(reps.begin(), reps.end(), key[g]) - reps.begin());
  std::vector<std::string> labels;
  for (auto r : reps) labels.push_back("[" + G.labels[r] + "]");
  std::vector<std::vector<std::size_t>> table(reps.size(), std::vector<std::size_t>(reps.size()));
  for (std::size_t a = 0; a < reps.size(); ++a)
    for (std::size_t b = 0; b < reps.size(); ++b) table[a][b] = Q.projection[G.mul(reps[a], reps[b])];
  Q.G = GroupData::from_table(std::move(labels), std::move(table));
  if (G.has_character()) {
    for (auto h : subgroup)
      if (!G.character[h].is_one()) throw InputError("character is not trivial on the subgroup");
    std::vector<Scalar> chi;
    for (auto r : reps) chi.push_back(G.character[r]);
    Q.G.set_character(std::move(chi));
  }
  return Q;
}

namespace {

std::vector<std::size_t> cyclic_subgroup(const GroupData& G, std::size_t g) {
  std::vector<std::size_t> out{G.identity};
  for (std::size_t x = g; x != G.identity; x = G.mul(x, g)) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

OrePoly trim(OrePoly P) {
  while (!P.empty() && is_zero(P.back())) P.pop_back();
  return P;
}

}  // namespace

CheckResult rank_one_hopf_check(const GroupData& G, const Field& F, std::size_t g1, int n,
                                const Scalar& xi, int D) {
  CheckResult res;
  res.check = "hopf-rank-one";
  if (!res.add_hypothesis("character attached", G.has_character())) return res;
  res.add_hypothesis("g1 central", std::find(G.center.begin(), G.center.end(), g1) != G.center.end());
  res.add_hypothesis("chi(g1) primitive n-th root of unity", F.multiplicative_order(G.character[g1]) == n);
  res.add_hypothesis("xi nonzero", !xi.is_zero());
  if (!res.hypotheses_hold()) return res;
  const bool separable = F.characteristic() == 0 || G.order % static_cast<std::size_t>(F.characteristic()) != 0;
  res.note("absolute = relative (K separable)", separable ? "yes" : "not asserted");
  const std::size_t g1n = G.power(g1, n);
  std::optional<std::size_t> twisted;
  for (std::size_t g = 0; g < G.order && !twisted; ++g)
    if (!G.character[g].pow(n).is_one()) twisted = g;

  // Quotient model k[G/<g1^n>][x]/<x^n>.
  const QuotientGroup Q = quotient_group(G, cyclic_subgroup(G, g1n));
  std::vector<KElem> zeros(static_cast<std::size_t>(n), zero_vec(F, Q.G.order));
  Instance tilde = group_instance("quotient_model", Q.G, F, zeros, Q.projection[g1]);
  Pipeline Pt(tilde.alg(), D);
  res.note("quotient group order", std::to_string(Q.G.order));

  if (twisted) {
    res.note("case", "chi^n nontrivial");
    // <x^n - xi(g1^n - 1)> contains g1^n - 1: g^-1 F g - chi^n(g) F = (chi^n(g) - 1) xi (g1^n - 1).
    std::vector<KElem> fz(static_cast<std::size_t>(n), zero_vec(F, G.order));
    const MonogenicAlgebra aux(group_algebra(G, F), endo_from_character(G), fz);
    KElem u = zero_vec(F, G.order);
    u[g1n] += F.one();
    u[G.identity] -= F.one();
    OrePoly Fp(static_cast<std::size_t>(n + 1), zero_vec(F, G.order));
    Fp[0] = scale(-xi, u);
    Fp[static_cast<std::size_t>(n)] = aux.K().unit();
    const std::size_t g = *twisted;
    const OrePoly gi{aux.K().basis_vec(G.inverse[g])}, gg{aux.K().basis_vec(g)};
    const Scalar cn = G.character[g].pow(n);
    OrePoly lhs = aux.ore_mul(aux.ore_mul(gi, Fp), gg);
    OrePoly scaled;
    for (const auto& c : Fp) scaled.push_back(scale(-cn, c));
    lhs = trim(aux.ore_add(lhs, scaled));
    const OrePoly rhs = trim({scale((cn - F.one()) * xi, u)});
    if (!(lhs == rhs)) res.fail("ideal identity g^-1 f g - chi^n(g) f = (chi^n(g)-1) xi (g1^n - 1) fails");
    else res.note("ideal", "<x^n - xi(g1^n - 1)> = <x^n, g1^n - 1>");
    CheckResult inner = group_algebra_check(Pt, Q.G, Q.projection[g1]);
    for (const auto& h : inner.hypotheses) res.add_hypothesis("quotient model: " + h.name, h.holds);
    for (const auto& m : inner.mismatches) res.fail("quotient model: " + m);
    res.closed_table = inner.closed_table;
    res.generic_table = inner.generic_table;
    if (!inner.ran) res.fail("quotient model closed form did not run");
    res.finish();
    return res;
  }

  res.note("case", "chi^n trivial");
  Instance inst = rank_one("rank_one", G, F, g1, n, xi);
  const MonogenicAlgebra& A = inst.alg();
  Pipeline P(A, D);
  const std::size_t d = A.dim_k();
  const Mat kNG = class_basis(G, F, 0).kernel_span(F, d);
  KElem u = zero_vec(F, d);
  u[g1n] += F.one();
  u[G.identity] -= F.one();
  const Mat Ru = A.K().right_mul_matrix(u);
  const Mat annNG = kernel_within(Ru, kNG);
  std::vector<ClosedGroup> closed;
  for (int r = 0; r <= D; ++r) {
    ClosedGroup c;
    c.den = empty_cols(F, A.dim_a());
    if (r == 0) {
      c.num = embed_columns(A, kNG, 0);
    } else if (r % 2) {
      c.num = embed_columns(A, annNG, 1);
    } else {
      c.num = embed_columns(A, kNG, 0);
      c.den = embed_columns(A, times(Ru, kNG), 0);
    }
    closed.push_back(std::move(c));
  }
  compare_all(res, P, closed);

  Products X(A, D);
  // odd cup odd vanishes on classes
  for (int p = 1; p <= D; p += 2)
    for (int q = 1; p + q <= D; q += 2)
      for (const auto& a : P.representatives(p))
        for (const auto& b : P.representatives(q))
          if (!is_zero(cup_class(P, X, p, a, q, b)))
            res.fail("odd cup odd nonzero in degrees " + std::to_string(p) + "," + std::to_string(q));

  // stated bracket: [l, m] = 0, [l, m x] = 0, [l x, m x] = (l m - m l) x
  auto canonical = [&](int r) {
    return r % 2 ? embed_columns(A, annNG, 1).columns() : embed_columns(A, kNG, 0).columns();
  };
  std::size_t bracket_fail = 0;
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q) {
      const int t = p + q - 1;
      if (t < 0 || t > std::min(D, X.max_degree())) continue;
      for (const auto& a : canonical(p))
        for (const auto& b : canonical(q)) {
          AElem stated = A.zero();
          if (p % 2 && q % 2) {
            const KElem l = A.coeff(a, 1), m = A.coeff(b, 1);
            stated = A.embed(sub(A.K().mul(l, m), A.K().mul(m, l)), 1);
          }
          const AElem generic = X.bracket_small_generic({p, a}, {q, b});
          if (!P.is_coboundary(t, sub(stated, generic))) {
            ++bracket_fail;
            res.fail("stated bracket in degrees " + std::to_string(p) + "," + std::to_string(q) +
                     " is " + A.format(stated) + ", oracle class " + vec_str(P.class_of(t, generic)));
          }
        }
    }
  res.note("stated bracket mismatches", std::to_string(bracket_fail));

  const auto da = P.dims(), dt = Pt.dims();
  for (int m = 1; m <= D; ++m)
    if (da[static_cast<std::size_t>(m)] != dt[static_cast<std::size_t>(m)])
      res.fail("dim HH^" + std::to_string(m) + " differs from the quotient model");
  res.finish();
  return res;
}

// ---- quaternions ------------------------------------------------------------------

namespace {

KElem qmul(const Field& F, const KElem& a, const KElem& b) {
  // basis 1, i, j, k
  KElem c = zero_vec(F, 4);
  c[0] = a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3];
  c[1] = a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2];
  c[2] = a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1];
  c[3] = a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0];
  return c;
}

}  // namespace

KElem quaternion_exp(const Field& F, const QuaternionData& q, long s) {
  KElem base{q.cos_half, F.zero(), F.zero(), s >= 0 ? q.sin_half : -q.sin_half};
  KElem out{F.one(), F.zero(), F.zero(), F.zero()};
  for (long i = 0; i < (s >= 0 ? s : -s); ++i) out = qmul(F, out, base);
  return out;
}

bool quaternion_coefficient_eligible(const Field& F, const QuaternionData& q, const KElem& lambda, int u) {
  const KElem rho = qmul(F, lambda, quaternion_exp(F, q, u));
  return rho[1].is_zero() && rho[2].is_zero() && rho[3].is_zero();
}

CheckResult quaternion_check(const Pipeline& P, const QuaternionData& q) {
  CheckResult res;
  res.check = "quaternion";
  const MonogenicAlgebra& A = P.algebra();
  const Field& F = A.field();
  const int n = A.n();
  bool shape = A.dim_k() == 4;
  if (shape) {
    for (std::size_t a = 0; a < 4 && shape; ++a)
      for (std::size_t b = 0; b < 4 && shape; ++b)
        shape = A.K().mul(A.K().basis_vec(a), A.K().basis_vec(b)) ==
                qmul(F, A.K().basis_vec(a), A.K().basis_vec(b));
    shape = shape && A.alpha().matrix() == quaternion_algebra(F, q).second.matrix();
  }
  if (!res.add_hypothesis("K is the quaternion algebra with the rotation", shape)) return res;
  bool eligible = true;
  std::vector<Scalar> varsigma;
  for (int u = 1; u <= n; ++u) {
    const bool ok = quaternion_coefficient_eligible(F, q, A.lambda(u), u);
    eligible = eligible && ok;
    varsigma.push_back(qmul(F, A.lambda(u), quaternion_exp(F, q, u))[0]);
  }
  if (!res.add_hypothesis("every lambda_u is real times e^{-k u theta/2}", eligible)) return res;
  res.note("field", "over the supplied exact subfield " + F.name());
  res.note("absolute = relative (K separable)", F.characteristic() == 0 ? "yes" : "not asserted");

  // A^{alpha^t} and the comparison map from the commutative companion.
  auto theta_map = [&](int r) {
    const long t = resolution_twist(r, n);
    std::vector<Vec> cols;
    for (int u = 0; u < n; ++u) cols.push_back(A.embed(quaternion_exp(F, q, u - t), u));
    return cols_mat(F, A.dim_a(), cols);
  };
  AlgebraK base(F, {"1"}, {F.one()}, {{0, 0, 0, F.one()}});
  std::vector<KElem> sig;
  for (const auto& s : varsigma) sig.push_back({s});
  const MonogenicAlgebra C(base, Endo::identity(base), sig);
  Pipeline PC(C, P.max_degree());
  std::string poly = "x^" + std::to_string(n);
  for (int u = 1; u <= n; ++u) poly += " + (" + varsigma[static_cast<std::size_t>(u - 1)].to_string() + ")x^" + std::to_string(n - u);
  res.note("companion", poly);

  AElem S = A.zero();
  for (int i = 1; i <= n; ++i) {
    const KElem l = i == n ? A.K().unit() : A.lambda(n - i);
    S = add(S, A.embed(scale(F.from_int(i), l), i - 1));
  }
  const Mat LS = A.left_mul_matrix(S);
  for (int r = 0; r <= P.max_degree() + 1; ++r) {
    const Mat Th = theta_map(r);
    const Mat& B = P.complex().basis[static_cast<std::size_t>(r)];
    if (!same_span(Th, B) || span_dim(Th) != static_cast<std::size_t>(n))
      res.fail("A^{alpha^t} closed form differs in degree " + std::to_string(r));
    if (PC.complex().dim(r) != static_cast<std::size_t>(n))
      res.fail("companion cochains are not all of C in degree " + std::to_string(r));
    if (r == 0) continue;
    const Mat& Bp = P.complex().basis[static_cast<std::size_t>(r - 1)];
    const Mat dA = small_differential_ambient(P.bimodule(), r);
    const Mat closed = r % 2 ? Mat(F, A.dim_a(), Bp.cols()) : times(LS, Bp);
    if (!(times(dA, Bp) == closed)) res.fail("d^" + std::to_string(r) + " differs from the closed form");
    const Mat dC = small_differential_ambient(PC.bimodule(), r);
    if (!(dA * theta_map(r - 1) == Th * dC))
      res.fail("comparison map does not commute with d^" + std::to_string(r));
  }
  CheckResult ann = identity_alpha_cohomology_check(PC);
  res.closed_table = ann.closed_table;
  res.generic_table = P.dims();
  for (const auto& m : ann.mismatches) res.fail("companion: " + m);
  for (int r = 0; r <= P.max_degree(); ++r)
    if (ann.closed_table[static_cast<std::size_t>(r)] != res.generic_table[static_cast<std::size_t>(r)])
      res.fail(deg_str(r) + ": companion dim " + std::to_string(ann.closed_table[static_cast<std::size_t>(r)]) +
               " vs " + std::to_string(res.generic_table[static_cast<std::size_t>(r)]));
  res.finish();
  return res;
}

// ---- products on classes ---------------------------------------------------------

CheckResult even_bracket_check(const Pipeline& P, const Products& X) {
  CheckResult res;
  res.check = "even-brackets";
  const int top = std::min(P.max_degree(), X.max_degree());
  for (int p = 0; p <= top; p += 2)
    for (int q = 0; q <= top && p + q - 1 <= top; q += 2) {
      if (p + q == 0) continue;
      for (const auto& a : P.representatives(p))
        for (const auto& b : P.representatives(q))
          if (!P.is_coboundary(p + q - 1, X.bracket_small_generic({p, a}, {q, b})))
            res.fail("bracket of even classes nonzero in degrees " + std::to_string(p) + "," +
                     std::to_string(q));
    }
  res.finish();
  return res;
}

CheckResult bracket_closed_check(const Pipeline& P, const Products& X, const MaybeWitness& w, int max_m) {
  CheckResult res;
  res.check = "bracket-closed";
  if (!res.add_hypothesis("separating witness", witness_ok(w))) return res;
  const MonogenicAlgebra& A = P.algebra();
  const int top = std::min(P.max_degree(), X.max_degree());
  std::size_t pairs = 0;
  for (int p = 0; p <= 2 * max_m + 1; ++p)
    for (int q = 0; q <= 2 * max_m + 1; ++q) {
      const int t = p + q - 1;
      if (t < 0 || t > top) continue;
      const auto Ba = canonical_basis(A, p), Bb = canonical_basis(A, q);
      for (std::size_t i = 0; i < Ba.size(); ++i)
        for (std::size_t j = 0; j < Bb.size(); ++j) {
          const SmallCochain a{p, Ba[i]}, b{q, Bb[j]};
          ++pairs;
          const AElem closed = bracket_small_closed(A, w, a, b);
          const AElem generic = X.bracket_small_generic(a, b);
          if (!P.is_coboundary(t, sub(closed, generic)))
            res.fail("degrees " + std::to_string(p) + "," + std::to_string(q) + " basis " +
                     std::to_string(i) + "," + std::to_string(j) + ": closed " + A.format(closed) +
                     " vs generic " + A.format(generic));
        }
    }
  res.note("pairs", std::to_string(pairs));
  res.finish();
  return res;
}

CheckResult cup_commutativity_check(const Pipeline& P, const Products& X) {
  CheckResult res;
  res.check = "cup-commutativity";
  const SmallComplex& C = P.complex();
  for (int r = 1; r + 1 <= C.max_degree; ++r) {
    const Mat& d1 = C.d[static_cast<std::size_t>(r)];
    const Mat& d2 = C.d[static_cast<std::size_t>(r + 1)];
    if (d1.cols() && d2.cols() && !(d2 * d1).is_zero()) res.fail("d d != 0 at degree " + std::to_string(r));
  }
  const Field& F = P.algebra().field();
  for (int p = 0; p <= P.max_degree(); ++p)
    for (int q = 0; p + q <= P.max_degree(); ++q)
      for (const auto& a : P.representatives(p))
        for (const auto& b : P.representatives(q)) {
          Vec ab = cup_class(P, X, p, a, q, b);
          Vec ba = cup_class(P, X, q, b, p, a);
          if ((p * q) % 2) ba = scale(-F.one(), ba);
          if (!(ab == ba))
            res.fail("cup not graded commutative in degrees " + std::to_string(p) + "," + std::to_string(q));
        }
  res.finish();
  return res;
}

std::vector<ProductEntry> cup_table(const Pipeline& P, const Products& X) {
  std::vector<ProductEntry> out;
  for (int p = 0; p <= P.max_degree(); ++p)
    for (int q = 0; p + q <= P.max_degree(); ++q) {
      const auto Ra = P.representatives(p), Rb = P.representatives(q);
      for (std::size_t i = 0; i < Ra.size(); ++i)
        for (std::size_t j = 0; j < Rb.size(); ++j) {
          ProductEntry e{p, q, i, j, {}, "closed", true};
          const AElem v = X.cup_small({p, Ra[i]}, {q, Rb[j]});
          e.result = P.class_of(p + q, v);
          if (p + q <= X.max_degree()) {
            e.source = "closed+bar";
            e.agree = P.is_coboundary(p + q, sub(v, X.cup_via_bar({p, Ra[i]}, {q, Rb[j]})));
          }
          out.push_back(std::move(e));
        }
    }
  return out;
}

std::vector<ProductEntry> bracket_table(const Pipeline& P, const Products& X, const MaybeWitness& w) {
  std::vector<ProductEntry> out;
  const MonogenicAlgebra& A = P.algebra();
  const int top = std::min(P.max_degree(), X.max_degree());
  for (int p = 0; p <= top; ++p)
    for (int q = 0; q <= top && p + q - 1 <= top; ++q) {
      if (p + q == 0) continue;
      const auto Ra = P.representatives(p), Rb = P.representatives(q);
      for (std::size_t i = 0; i < Ra.size(); ++i)
        for (std::size_t j = 0; j < Rb.size(); ++j) {
          const SmallCochain a{p, Ra[i]}, b{q, Rb[j]};
          ProductEntry e{p, q, i, j, {}, "generic", true};
          const AElem v = X.bracket_small_generic(a, b);
          e.result = P.class_of(p + q - 1, v);
          if (witness_ok(w) && canonical_coefficient(A, a) && canonical_coefficient(A, b)) {
            e.source = "generic+closed";
            e.agree = P.is_coboundary(p + q - 1, sub(v, bracket_small_closed(A, w, a, b)));
          }
          out.push_back(std::move(e));
        }
    }
  return out;
}

CheckResult f_independence_check(const Pipeline& P1, const Products& X1, const Pipeline& P2,
                                 const Products& X2, const MaybeWitness& w1, const MaybeWitness& w2) {
  CheckResult res;
  res.check = "f-independence";
  const MonogenicAlgebra& A1 = P1.algebra();
  const MonogenicAlgebra& A2 = P2.algebra();
  res.add_hypothesis("same n", A1.n() == A2.n());
  if (!res.hypotheses_hold()) return res;
  res.add_hypothesis("same K and alpha",
                     A1.dim_k() == A2.dim_k() && A1.alpha().matrix() == A2.alpha().matrix());
  if (!res.hypotheses_hold()) return res;
  res.add_hypothesis("same lambda_n", A1.lambda(A1.n()) == A2.lambda(A2.n()));
  bool differ = false;
  for (int i = 1; i < A1.n(); ++i) differ = differ || !(A1.lambda(i) == A2.lambda(i));
  res.add_hypothesis("middle coefficients differ", differ);
  res.add_hypothesis("separating witness for both", witness_ok(w1) && witness_ok(w2));
  if (!res.hypotheses_hold()) return res;
  res.closed_table = P1.dims();
  res.generic_table = P2.dims();
  if (res.closed_table != res.generic_table) res.fail("dimension tables differ");
  auto same = [](const std::vector<ProductEntry>& a, const std::vector<ProductEntry>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i].deg_a != b[i].deg_a || a[i].deg_b != b[i].deg_b || !(a[i].result == b[i].result))
        return false;
    return true;
  };
  if (res.mismatches.empty()) {
    if (!same(cup_table(P1, X1), cup_table(P2, X2))) res.fail("cup tables differ");
    if (!same(bracket_table(P1, X1, w1), bracket_table(P2, X2, w2))) res.fail("bracket tables differ");
  }
  res.finish();
  return res;
}

}  // namespace monogen
