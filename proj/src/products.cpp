#include "monogen/products.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace monogen {

namespace {

std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

int index_sum(const std::vector<int>& I) {
  int s = 0;
  for (int i : I) s += i;
  return s;
}

void add_into(AElem& acc, const AElem& v) {
  for (std::size_t i = 0; i < acc.size(); ++i)
    if (!v[i].is_zero()) acc[i] += v[i];
}

void add_scaled(AElem& acc, const Scalar& s, const AElem& v) {
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < acc.size(); ++i)
    if (!v[i].is_zero()) acc[i] += s * v[i];
}

// Left factor of the x^c block of a tensor.
AElem tensor_block(const MonogenicAlgebra& A, const TensorElem& T, int c) {
  const std::size_t da = A.dim_a();
  return AElem(T.begin() + static_cast<long>(c * da), T.begin() + static_cast<long>((c + 1) * da));
}

// u (x) w (x) x^c -> u.T.x^c where T = psi'(1 (x) w (x) 1) sits at twist t.
TensorElem act_on_tensor(const MonogenicAlgebra& A, const AElem& u, const TensorElem& T, int c, long t) {
  TensorElem r = c == 0 ? T : A.tensor_right(T, A.x_pow(c), t);
  return A.tensor_left(u, r);
}

class ChainBuilder {
 public:
  ChainBuilder(const MonogenicAlgebra& A, int r) : A_(A) {
    chain_.degree = r;
    chain_.coef.assign(bar_index_count(A.n(), r) * static_cast<std::size_t>(A.n()), A.zero());
  }
  // a_0 (x) x^I (x) x^c.
  void add(const AElem& a0, const std::vector<int>& I, int c) {
    add_into(chain_.coef[bar_index_encode(A_.n(), I) * static_cast<std::size_t>(A_.n()) +
                         static_cast<std::size_t>(c)],
             a0);
  }
  // a_0 (x) x^I (x) a with a arbitrary: K-coefficients move left through x^I.
  void add_right(const AElem& a0, const std::vector<int>& I, const AElem& a) {
    const long s = index_sum(I);
    for (int e = 0; e < A_.n(); ++e) {
      KElem k = A_.coeff(a, e);
      if (is_zero(k)) continue;
      add(A_.mul(a0, A_.embed(A_.alpha_pow(k, s))), I, e);
    }
  }
  BarChain take() { return std::move(chain_); }

 private:
  const MonogenicAlgebra& A_;
  BarChain chain_;
};

}  // namespace

std::size_t bar_index_count(int n, int p) {
  if (n < 2) throw InputError("bar complex needs n >= 2");
  return ipow(static_cast<std::size_t>(n - 1), p);
}

std::vector<int> bar_index_decode(int n, int p, std::size_t idx) {
  std::vector<int> I(static_cast<std::size_t>(p));
  const auto b = static_cast<std::size_t>(n - 1);
  for (int j = p - 1; j >= 0; --j) {
    I[static_cast<std::size_t>(j)] = static_cast<int>(idx % b) + 1;
    idx /= b;
  }
  return I;
}

std::size_t bar_index_encode(int n, const std::vector<int>& I) {
  std::size_t idx = 0;
  for (int i : I) {
    if (i < 1 || i > n - 1) throw InputError("bar index out of range");
    idx = idx * static_cast<std::size_t>(n - 1) + static_cast<std::size_t>(i - 1);
  }
  return idx;
}

KElem delta_sum(const MonogenicAlgebra& A, const KElem& mu, int l) {
  if (l < 0) throw InputError("delta_sum needs l >= 0");
  KElem out = A.K().zero();
  for (int h = 0; h < l; ++h) out = add(out, A.alpha_pow(mu, h));
  return out;
}

// ---------------------------------------------------------------- comparison maps

namespace {

std::vector<TensorElem> psi_closed(const MonogenicAlgebra& A, int r) {
  const int n = A.n();
  const long t = resolution_twist(r, n);
  std::vector<TensorElem> out;
  for (std::size_t idx = 0; idx < bar_index_count(n, r); ++idx) {
    const auto I = bar_index_decode(n, r, idx);
    AElem q = A.one();
    for (int k = 0; k + 1 < r; k += 2)
      q = A.mul(q, A.x_pow_quotient(I[static_cast<std::size_t>(k)] + I[static_cast<std::size_t>(k + 1)]));
    if (r % 2 == 0)
      out.push_back(A.pure_tensor(q, A.one(), t));
    else
      out.push_back(A.tensor_left(q, A.derivation_tensor(I.back(), t)));
  }
  return out;
}

BarChain phi_closed(const MonogenicAlgebra& A, int r) {
  const int n = A.n();
  const int m = r / 2;
  ChainBuilder out(A, r);
  // i in [1,n]^m, l_j in [1, i_j - 1]
  std::vector<int> i(static_cast<std::size_t>(m), 1), l(static_cast<std::size_t>(m), 1);
  auto emit = [&]() {
    KElem lam = A.K().unit();
    int exp = -m;
    for (int j = 0; j < m; ++j) {
      lam = A.K().mul(lam, A.lambda(n - i[static_cast<std::size_t>(j)]));
      exp += i[static_cast<std::size_t>(j)] - l[static_cast<std::size_t>(j)];
    }
    if (is_zero(lam)) return;
    std::vector<int> I;
    for (int j = m - 1; j >= 0; --j) {
      I.push_back(1);
      I.push_back(l[static_cast<std::size_t>(j)]);
    }
    if (r % 2 == 1) I.push_back(1);
    out.add(A.mul(A.embed(lam), A.x_pow(exp)), I, 0);
  };
  // odometer over (i, l) pairs
  std::function<void(int)> rec = [&](int j) {
    if (j == m) {
      emit();
      return;
    }
    for (int a = 2; a <= n; ++a)
      for (int b = 1; b < a; ++b) {
        i[static_cast<std::size_t>(j)] = a;
        l[static_cast<std::size_t>(j)] = b;
        rec(j + 1);
      }
  };
  rec(0);
  return out.take();
}

}  // namespace

ComparisonMaps comparison_maps(const MonogenicAlgebra& A, int max_degree, MapSource source) {
  if (max_degree < 0) throw InputError("negative degree");
  const int n = A.n();
  ComparisonMaps C;
  C.max_degree = max_degree;
  C.source = source;
  if (source == MapSource::Closed) {
    for (int r = 0; r <= max_degree; ++r) {
      C.psi.push_back(psi_closed(A, r));
      C.phi.push_back(phi_closed(A, r));
    }
    return C;
  }
  const ResolutionMaps R = resolution_maps(A, max_degree);
  C.psi.push_back({A.pure_tensor(A.one(), A.one(), 0)});
  {
    ChainBuilder b(A, 0);
    b.add(A.one(), {}, 0);
    C.phi.push_back(b.take());
  }
  for (int r = 0; r < max_degree; ++r) {
    const long t = resolution_twist(r, n);
    // psi'_{r+1} = sigma psi'_r b'
    std::vector<TensorElem> next;
    for (std::size_t idx = 0; idx < bar_index_count(n, r + 1); ++idx) {
      const auto I = bar_index_decode(n, r + 1, idx);
      TensorElem acc = A.tensor_zero();
      auto apply_psi = [&](const AElem& a0, const std::vector<int>& J, int c, const Scalar& sign) {
        const TensorElem& T = C.psi[static_cast<std::size_t>(r)][bar_index_encode(n, J)];
        acc = add(acc, scale(sign, act_on_tensor(A, a0, T, c, t)));
      };
      const Scalar one = A.field().one(), minus = -A.field().one();
      apply_psi(A.x_pow(I[0]), std::vector<int>(I.begin() + 1, I.end()), 0, one);
      for (int j = 1; j <= r; ++j) {
        const auto uj = static_cast<std::size_t>(j);
        const AElem prod = A.x_pow(I[uj - 1] + I[uj]);
        const long s = index_sum(std::vector<int>(I.begin(), I.begin() + j - 1));
        for (int e = 1; e < n; ++e) {
          KElem k = A.coeff(prod, e);
          if (is_zero(k)) continue;
          std::vector<int> J(I.begin(), I.begin() + j - 1);
          J.push_back(e);
          J.insert(J.end(), I.begin() + j + 1, I.end());
          apply_psi(A.embed(A.alpha_pow(k, s)), J, 0, j % 2 ? minus : one);
        }
      }
      apply_psi(A.one(), std::vector<int>(I.begin(), I.end() - 1), I.back(), (r + 1) % 2 ? minus : one);
      next.push_back(R.sigma[static_cast<std::size_t>(r + 1)].apply(acc));
    }
    C.psi.push_back(std::move(next));

    // phi'_{r+1}(1 (x) 1) = zeta phi'_r d'_{r+1}(1 (x) 1)
    const TensorElem dd = R.d[static_cast<std::size_t>(r + 1)].apply(
        A.pure_tensor(A.one(), A.one(), resolution_twist(r + 1, n)));
    const BarChain& prev = C.phi[static_cast<std::size_t>(r)];
    ChainBuilder mid(A, r);
    for (int c = 0; c < n; ++c) {
      const AElem u = tensor_block(A, dd, c);
      if (is_zero(u)) continue;
      for (std::size_t e = 0; e < prev.coef.size(); ++e) {
        if (is_zero(prev.coef[e])) continue;
        const auto J = bar_index_decode(n, r, e / static_cast<std::size_t>(n));
        const int c0 = static_cast<int>(e % static_cast<std::size_t>(n));
        mid.add_right(A.mul(u, prev.coef[e]), J, A.x_pow(c0 + c));
      }
    }
    const BarChain m = mid.take();
    ChainBuilder zeta(A, r + 1);
    const Scalar sign = (r + 1) % 2 ? -A.field().one() : A.field().one();
    for (std::size_t e = 0; e < m.coef.size(); ++e) {
      const int c = static_cast<int>(e % static_cast<std::size_t>(n));
      if (c == 0 || is_zero(m.coef[e])) continue;
      auto J = bar_index_decode(n, r, e / static_cast<std::size_t>(n));
      J.push_back(c);
      zeta.add(scale(sign, m.coef[e]), J, 0);
    }
    C.phi.push_back(zeta.take());
  }
  return C;
}

std::vector<std::string> comparison_maps_diff(const ComparisonMaps& a, const ComparisonMaps& b) {
  std::vector<std::string> out;
  const int D = std::min(a.max_degree, b.max_degree);
  for (int r = 0; r <= D; ++r) {
    const auto ur = static_cast<std::size_t>(r);
    if (a.psi[ur] != b.psi[ur]) out.push_back("psi degree " + std::to_string(r));
    if (a.phi[ur] != b.phi[ur]) out.push_back("phi degree " + std::to_string(r));
  }
  return out;
}

// ---------------------------------------------------------------- Products

Products::Products(const MonogenicAlgebra& A, int max_degree, MapSource source)
    : A_(&A), M_(Bimodule::regular(A)), maps_(comparison_maps(A, max_degree, source)) {
  const long top = static_cast<long>(max_degree) * (A.n() - 1);
  for (long s = 0; s <= std::max<long>(top, resolution_twist(max_degree, A.n())); ++s)
    invariants_.push_back(twisted_invariants(M_, s));
}

const Mat& Products::invariants(long s) const {
  if (s < 0 || static_cast<std::size_t>(s) >= invariants_.size())
    throw InputError("twist exponent beyond the precomputed range");
  return invariants_[static_cast<std::size_t>(s)];
}

BarCochain Products::bar_zero(int p) const {
  return BarCochain{p, std::vector<AElem>(bar_index_count(A_->n(), p), A_->zero())};
}

std::vector<BarCochain> Products::bar_basis(int p) const {
  std::vector<BarCochain> out;
  const int n = A_->n();
  for (std::size_t idx = 0; idx < bar_index_count(n, p); ++idx) {
    const Mat& inv = invariants(index_sum(bar_index_decode(n, p, idx)));
    for (std::size_t c = 0; c < inv.cols(); ++c) {
      BarCochain g = bar_zero(p);
      g.values[idx] = inv.column(c);
      out.push_back(std::move(g));
    }
  }
  return out;
}

BarCochain Products::psi(const SmallCochain& a) const {
  if (a.degree < 0 || a.degree > max_degree()) throw InputError("psi degree out of range");
  const auto& A = *A_;
  const auto& table = maps_.psi[static_cast<std::size_t>(a.degree)];
  BarCochain g = bar_zero(a.degree);
  for (std::size_t idx = 0; idx < table.size(); ++idx) {
    AElem v = A.zero();
    for (int c = 0; c < A.n(); ++c) {
      const AElem u = tensor_block(A, table[idx], c);
      if (is_zero(u)) continue;
      add_into(v, A.mul(A.mul(u, a.value), A.x_pow(c)));
    }
    g.values[idx] = std::move(v);
  }
  return g;
}

AElem Products::phi(const BarCochain& g) const {
  if (g.degree < 0 || g.degree > max_degree()) throw InputError("phi degree out of range");
  const auto& A = *A_;
  const auto n = static_cast<std::size_t>(A.n());
  const BarChain& P = maps_.phi[static_cast<std::size_t>(g.degree)];
  AElem out = A.zero();
  for (std::size_t e = 0; e < P.coef.size(); ++e) {
    if (is_zero(P.coef[e])) continue;
    const AElem& v = g.values[e / n];
    if (is_zero(v)) continue;
    add_into(out, A.mul(A.mul(P.coef[e], v), A.x_pow(static_cast<int>(e % n))));
  }
  return out;
}

BarCochain Products::bar_differential(const BarCochain& g) const {
  const auto& A = *A_;
  const int n = A.n(), p = g.degree;
  BarCochain out = bar_zero(p + 1);
  const Scalar one = A.field().one();
  for (std::size_t idx = 0; idx < out.values.size(); ++idx) {
    const auto I = bar_index_decode(n, p + 1, idx);
    AElem v = A.mul(A.x_pow(I[0]), g.values[bar_index_encode(n, std::vector<int>(I.begin() + 1, I.end()))]);
    for (int j = 1; j <= p; ++j) {
      const auto uj = static_cast<std::size_t>(j);
      const AElem prod = A.x_pow(I[uj - 1] + I[uj]);
      const long s = index_sum(std::vector<int>(I.begin(), I.begin() + j - 1));
      for (int e = 1; e < n; ++e) {
        KElem k = A.coeff(prod, e);
        if (is_zero(k)) continue;
        std::vector<int> J(I.begin(), I.begin() + j - 1);
        J.push_back(e);
        J.insert(J.end(), I.begin() + j + 1, I.end());
        AElem term = A.k_mul_left(A.alpha_pow(k, s), g.values[bar_index_encode(n, J)]);
        add_scaled(v, j % 2 ? -one : one, term);
      }
    }
    AElem last = A.mul(g.values[bar_index_encode(n, std::vector<int>(I.begin(), I.end() - 1))], A.x_pow(I.back()));
    add_scaled(v, (p + 1) % 2 ? -one : one, last);
    out.values[idx] = std::move(v);
  }
  return out;
}

AElem Products::small_differential(const SmallCochain& a) const {
  return small_differential_ambient(M_, a.degree + 1).apply(a.value);
}

BarCochain Products::cup_bar(const BarCochain& g, const BarCochain& h) const {
  const int n = A_->n();
  BarCochain out = bar_zero(g.degree + h.degree);
  const std::size_t nh = bar_index_count(n, h.degree);
  for (std::size_t a = 0; a < g.values.size(); ++a)
    for (std::size_t b = 0; b < nh; ++b) out.values[a * nh + b] = A_->mul(g.values[a], h.values[b]);
  return out;
}

BarCochain Products::circle_j(const BarCochain& g, const BarCochain& h, int j) const {
  const int r = g.degree, rp = h.degree;
  if (j < 1 || j > r) throw InputError("composition slot out of range");
  const auto& A = *A_;
  const int n = A.n();
  BarCochain out = bar_zero(r + rp - 1);
  for (std::size_t idx = 0; idx < out.values.size(); ++idx) {
    const auto I = bar_index_decode(n, r + rp - 1, idx);
    const auto uj = static_cast<std::size_t>(j - 1);
    const std::vector<int> inner(I.begin() + static_cast<long>(uj), I.begin() + static_cast<long>(uj) + rp);
    const AElem& hv = h.values[bar_index_encode(n, inner)];
    if (is_zero(hv)) continue;
    const long s = index_sum(std::vector<int>(I.begin(), I.begin() + static_cast<long>(uj)));
    AElem v = A.zero();
    // the K-part of h's value is killed by normalization
    for (int e = 1; e < n; ++e) {
      KElem k = A.coeff(hv, e);
      if (is_zero(k)) continue;
      std::vector<int> J(I.begin(), I.begin() + static_cast<long>(uj));
      J.push_back(e);
      J.insert(J.end(), I.begin() + static_cast<long>(uj) + rp, I.end());
      add_into(v, A.k_mul_left(A.alpha_pow(k, s), g.values[bar_index_encode(n, J)]));
    }
    out.values[idx] = std::move(v);
  }
  return out;
}

BarCochain Products::circle(const BarCochain& g, const BarCochain& h) const {
  const auto& F = A_->field();
  BarCochain out = bar_zero(std::max(0, g.degree + h.degree - 1));
  if (g.degree == 0) return out;
  for (int j = 1; j <= g.degree; ++j) {
    BarCochain c = circle_j(g, h, j);
    const bool neg = ((j + 1) * (h.degree + 1)) % 2 != 0;
    for (std::size_t i = 0; i < out.values.size(); ++i) add_scaled(out.values[i], neg ? -F.one() : F.one(), c.values[i]);
  }
  return out;
}

BarCochain Products::bracket_bar(const BarCochain& g, const BarCochain& h) const {
  if (g.degree + h.degree == 0) return bar_zero(0);
  BarCochain a = circle(g, h), b = circle(h, g);
  const bool neg = ((g.degree + 1) * (h.degree + 1)) % 2 != 0;
  const auto& F = A_->field();
  // [g,h] = g o h - (-1)^{(r+1)(r'+1)} h o g
  for (std::size_t i = 0; i < a.values.size(); ++i) add_scaled(a.values[i], neg ? F.one() : -F.one(), b.values[i]);
  return a;
}

AElem Products::cup_small(const SmallCochain& a, const SmallCochain& b) const {
  const auto& A = *A_;
  if (a.degree % 2 == 0 || b.degree % 2 == 0) return A.mul(a.value, b.value);
  const int n = A.n();
  AElem out = A.zero();
  for (int i = 2; i <= n; ++i) {
    const KElem& l = A.lambda(n - i);
    if (is_zero(l)) continue;
    const AElem L = A.embed(l);
    for (int j1 = 0; j1 <= i - 2; ++j1)
      for (int j2 = 0; j1 + j2 <= i - 2; ++j2) {
        const int j3 = i - 2 - j1 - j2;
        AElem t = A.mul(A.mul(L, A.x_pow(j1)), a.value);
        t = A.mul(A.mul(A.mul(t, A.x_pow(j2)), b.value), A.x_pow(j3));
        add_into(out, t);
      }
  }
  return out;
}

AElem Products::cup_via_bar(const SmallCochain& a, const SmallCochain& b) const {
  return phi(cup_bar(psi(a), psi(b)));
}

AElem Products::circle_j_small(const SmallCochain& a, const SmallCochain& b, int j) const {
  return phi(circle_j(psi(a), psi(b), j));
}

AElem Products::bracket_small_generic(const SmallCochain& a, const SmallCochain& b) const {
  if (a.degree + b.degree - 1 > max_degree()) throw InputError("bracket degree beyond the bound");
  if (a.degree + b.degree == 0) return A_->zero();
  return phi(bracket_bar(psi(a), psi(b)));
}

// ---------------------------------------------------------------- closed bracket

std::optional<KElem> canonical_coefficient(const MonogenicAlgebra& A, const SmallCochain& a) {
  const int keep = a.degree % 2 == 0 ? 0 : 1;
  for (int p = 0; p < A.n(); ++p)
    if (p != keep && !is_zero(A.coeff(a.value, p))) return std::nullopt;
  return A.coeff(a.value, keep);
}

AElem bracket_small_closed(const MonogenicAlgebra& A, const std::optional<SeparatingWitness>& w,
                           const SmallCochain& a, const SmallCochain& b) {
  if (!w || !w->ok()) throw InputError("closed bracket needs a verified witness");
  auto la = canonical_coefficient(A, a), lb = canonical_coefficient(A, b);
  if (!la || !lb) throw InputError("closed bracket needs canonical-form cochains");
  const int n = A.n();
  const AlgebraK& K = A.K();
  auto orbit_times = [&](const KElem& mu, long upto, const KElem& lam) {
    // sum_{h=0}^{upto} alpha^h(mu) lam
    KElem s = K.zero();
    for (long h = 0; h <= upto; ++h) s = add(s, K.mul(A.alpha_pow(mu, h), lam));
    return s;
  };
  const bool ea = a.degree % 2 == 0, eb = b.degree % 2 == 0;
  const long ma = a.degree / 2, mb = b.degree / 2;
  if (ea && eb) return A.zero();
  if (ea && !eb) return A.embed(orbit_times(*lb, ma * n - 1, *la));
  if (!ea && eb) {
    // graded antisymmetry with both shifted degrees of opposite parity
    AElem v = A.embed(orbit_times(*la, mb * n - 1, *lb));
    return scale(-A.field().one(), v);
  }
  KElem v = sub(orbit_times(*lb, ma * n, *la), orbit_times(*la, mb * n, *lb));
  return A.embed(v, 1);
}

}  // namespace monogen
