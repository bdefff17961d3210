#include "monogen/monogenic.hpp"

#include <string>

namespace monogen {

namespace {

std::string pos(std::size_t i) { return std::to_string(i + 1); }

}  // namespace

CheckReport validate_f(const AlgebraK& K, const Endo& alpha, const std::vector<KElem>& lambdas) {
  CheckReport rep;
  for (std::size_t i = 1; i <= lambdas.size() && rep.ok; ++i) {
    const KElem& li = lambdas[i - 1];
    if (li.size() != K.dim()) {
      rep.fail("lambda_" + std::to_string(i) + " has wrong length");
      break;
    }
    if (is_zero(li)) continue;
    if (alpha.apply(li) != li) {
      rep.fail("alpha(lambda_" + std::to_string(i) + ") != lambda_" + std::to_string(i));
      break;
    }
    for (std::size_t b = 0; b < K.dim() && rep.ok; ++b) {
      KElem eb = K.basis_vec(b);
      if (K.mul(li, eb) != K.mul(alpha.apply_pow(eb, static_cast<long>(i)), li))
        rep.fail("lambda_" + std::to_string(i) + " * " + K.basis_names()[b] + " != alpha^" +
                 std::to_string(i) + "(" + K.basis_names()[b] + ") * lambda_" +
                 std::to_string(i) + " (i = " + std::to_string(i) + ", basis index " + pos(b) +
                 ")");
    }
  }
  return rep;
}

// ---------------------------------------------------------------- construction

MonogenicAlgebra::MonogenicAlgebra(AlgebraK K, Endo alpha, std::vector<KElem> lambdas)
    : K_(std::move(K)), alpha_(std::move(alpha)), n_(static_cast<int>(lambdas.size())) {
  if (n_ < 2) throw InputError("f must have degree n >= 2");
  if (alpha_.matrix().rows() != K_.dim()) throw InputError("alpha has the wrong size");
  for (auto& l : lambdas) {
    if (l.size() != K_.dim()) throw InputError("coefficient of f has the wrong length");
    for (auto& c : l)
      if (!c.field()) c = field().zero();
  }
  auto rep = validate_f(K_, alpha_, lambdas);
  if (!rep.ok) throw MathError("validate_f: " + rep.failure);
  lambdas_.push_back(K_.unit());
  for (auto& l : lambdas) lambdas_.push_back(std::move(l));

  const int top = 4 * n_;
  for (int s = 0; s <= top; ++s) {
    auto [q, r] = ore_divmod(x_pow_poly(s));
    xpow_.push_back(from_ore(r));
    if (s <= 2 * n_ - 1) xquot_.push_back(from_ore(q));
  }

  const std::size_t dk = K_.dim(), da = dim_a();
  std::vector<std::string> names;
  for (int a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < dk; ++b) {
      const std::string& kb = K_.basis_names()[b];
      std::string xs = a == 0 ? "" : a == 1 ? "x" : "x^" + std::to_string(a);
      names.push_back(a == 0 ? kb : (kb == "1" ? xs : kb + xs));
    }
  std::vector<AlgebraK::Entry> entries;
  for (int a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < dk; ++b)
      for (int p = 0; p < n_; ++p)
        for (std::size_t c = 0; c < dk; ++c) {
          // (lambda_b x^a)(lambda_c x^p) = lambda_b alpha^a(lambda_c) x^{a+p}
          KElem coef = K_.mul(K_.basis_vec(b), alpha_pow(K_.basis_vec(c), a));
          AElem prod = k_mul_left(coef, xpow_[static_cast<std::size_t>(a + p)]);
          for (std::size_t k = 0; k < da; ++k)
            if (!prod[k].is_zero())
              entries.push_back({static_cast<std::size_t>(a) * dk + b,
                                 static_cast<std::size_t>(p) * dk + c, k, prod[k]});
        }
  A_ = AlgebraK(field(), names, embed(K_.unit()), entries);
}

// ---------------------------------------------------------------- Ore arithmetic

OrePoly MonogenicAlgebra::ore_mul(const OrePoly& P, const OrePoly& Q) const {
  if (P.empty() || Q.empty()) return {};
  OrePoly out(P.size() + Q.size() - 1, K_.zero());
  for (std::size_t d = 0; d < P.size(); ++d) {
    if (is_zero(P[d])) continue;
    for (std::size_t e = 0; e < Q.size(); ++e) {
      if (is_zero(Q[e])) continue;
      out[d + e] = add(out[d + e], K_.mul(P[d], alpha_pow(Q[e], static_cast<long>(d))));
    }
  }
  while (!out.empty() && is_zero(out.back())) out.pop_back();
  return out;
}

OrePoly MonogenicAlgebra::ore_add(const OrePoly& P, const OrePoly& Q) const {
  OrePoly out(std::max(P.size(), Q.size()), K_.zero());
  for (std::size_t d = 0; d < P.size(); ++d) out[d] = add(out[d], P[d]);
  for (std::size_t d = 0; d < Q.size(); ++d) out[d] = add(out[d], Q[d]);
  while (!out.empty() && is_zero(out.back())) out.pop_back();
  return out;
}

std::pair<OrePoly, OrePoly> MonogenicAlgebra::ore_divmod(const OrePoly& P) const {
  OrePoly rem = P;
  while (!rem.empty() && is_zero(rem.back())) rem.pop_back();
  OrePoly quot;
  if (static_cast<int>(rem.size()) > n_)
    quot.assign(rem.size() - static_cast<std::size_t>(n_), K_.zero());
  for (int d = static_cast<int>(rem.size()) - 1; d >= n_; --d) {
    KElem c = rem[static_cast<std::size_t>(d)];
    if (is_zero(c)) continue;
    quot[static_cast<std::size_t>(d - n_)] = c;
    // subtract c x^{d-n} f = sum_i c alpha^{d-n}(lambda_i) x^{d-i}
    for (int i = 0; i <= n_; ++i) {
      const KElem& li = lambdas_[static_cast<std::size_t>(i)];
      auto& slot = rem[static_cast<std::size_t>(d - i)];
      slot = sub(slot, K_.mul(c, alpha_pow(li, d - n_)));
    }
  }
  while (!rem.empty() && is_zero(rem.back())) rem.pop_back();
  while (!quot.empty() && is_zero(quot.back())) quot.pop_back();
  return {quot, rem};
}

OrePoly MonogenicAlgebra::f_poly() const {
  OrePoly f(static_cast<std::size_t>(n_) + 1);
  for (int i = 0; i <= n_; ++i) f[static_cast<std::size_t>(n_ - i)] = lambdas_[static_cast<std::size_t>(i)];
  return f;
}

OrePoly MonogenicAlgebra::x_pow_poly(int s) const {
  OrePoly p(static_cast<std::size_t>(s) + 1, K_.zero());
  p.back() = K_.unit();
  return p;
}

OrePoly MonogenicAlgebra::to_ore(const AElem& a) const {
  OrePoly p;
  for (int d = 0; d < n_; ++d) p.push_back(coeff(a, d));
  while (!p.empty() && is_zero(p.back())) p.pop_back();
  return p;
}

AElem MonogenicAlgebra::from_ore(const OrePoly& P) const {
  OrePoly r = P;
  if (static_cast<int>(r.size()) > n_) r = ore_divmod(P).second;
  AElem out = zero_vec(field(), dim_a());
  const std::size_t dk = K_.dim();
  for (std::size_t d = 0; d < r.size(); ++d)
    for (std::size_t b = 0; b < dk; ++b) out[d * dk + b] = r[d][b];
  return out;
}

// ---------------------------------------------------------------- elements of A

AElem MonogenicAlgebra::embed(const KElem& lambda, int power) const {
  AElem out = zero_vec(field(), dim_a());
  const std::size_t dk = K_.dim();
  if (power < n_) {
    for (std::size_t b = 0; b < dk; ++b) out[static_cast<std::size_t>(power) * dk + b] = lambda[b];
    return out;
  }
  return k_mul_left(lambda, x_pow(power));
}

const AElem& MonogenicAlgebra::x_pow(int s) const {
  if (s < 0 || static_cast<std::size_t>(s) >= xpow_.size())
    throw InputError("x^" + std::to_string(s) + " is beyond the precomputed range");
  return xpow_[static_cast<std::size_t>(s)];
}

const AElem& MonogenicAlgebra::x_pow_quotient(int s) const {
  if (s < 0 || static_cast<std::size_t>(s) >= xquot_.size())
    throw InputError("quotient of x^" + std::to_string(s) + " is beyond the precomputed range");
  return xquot_[static_cast<std::size_t>(s)];
}

KElem MonogenicAlgebra::coeff(const AElem& a, int power) const {
  const std::size_t dk = K_.dim(), off = static_cast<std::size_t>(power) * dk;
  return KElem(a.begin() + static_cast<long>(off), a.begin() + static_cast<long>(off + dk));
}

AElem MonogenicAlgebra::k_mul_left(const KElem& lambda, const AElem& a) const {
  AElem out = zero_vec(field(), dim_a());
  const std::size_t dk = K_.dim();
  for (int d = 0; d < n_; ++d) {
    KElem c = coeff(a, d);
    if (is_zero(c)) continue;
    KElem p = K_.mul(lambda, c);
    for (std::size_t b = 0; b < dk; ++b) out[static_cast<std::size_t>(d) * dk + b] = p[b];
  }
  return out;
}

AElem MonogenicAlgebra::k_mul_right(const AElem& a, const KElem& lambda) const {
  AElem out = zero_vec(field(), dim_a());
  const std::size_t dk = K_.dim();
  for (int d = 0; d < n_; ++d) {
    KElem c = coeff(a, d);
    if (is_zero(c)) continue;
    KElem p = K_.mul(c, alpha_pow(lambda, d));
    for (std::size_t b = 0; b < dk; ++b) out[static_cast<std::size_t>(d) * dk + b] = p[b];
  }
  return out;
}

std::string MonogenicAlgebra::format(const AElem& a) const { return A_.format(a); }

// ---------------------------------------------------------------- tensors

TensorElem MonogenicAlgebra::pure_tensor(const AElem& u, const AElem& v, long t) const {
  TensorElem out = tensor_zero();
  const std::size_t dk = K_.dim(), da = dim_a();
  for (int e = 0; e < n_; ++e) {
    AElem block = zero_vec(field(), da);
    bool any = false;
    for (std::size_t b = 0; b < dk; ++b) {
      const Scalar& c = v[static_cast<std::size_t>(e) * dk + b];
      if (c.is_zero()) continue;
      any = true;
      // u (x) c lambda_b x^e = u alpha^t(c lambda_b) (x) x^e
      AElem w = mul(u, embed(alpha_pow(scale(c, K_.basis_vec(b)), t)));
      block = add(block, w);
    }
    if (!any) continue;
    for (std::size_t j = 0; j < da; ++j) out[static_cast<std::size_t>(e) * da + j] = block[j];
  }
  return out;
}

TensorElem MonogenicAlgebra::tensor_left(const AElem& a, const TensorElem& T) const {
  TensorElem out = tensor_zero();
  const std::size_t da = dim_a();
  for (int c = 0; c < n_; ++c) {
    AElem block(T.begin() + static_cast<long>(c * da), T.begin() + static_cast<long>((c + 1) * da));
    if (is_zero(block)) continue;
    AElem p = mul(a, block);
    for (std::size_t j = 0; j < da; ++j) out[static_cast<std::size_t>(c) * da + j] = p[j];
  }
  return out;
}

TensorElem MonogenicAlgebra::tensor_right(const TensorElem& T, const AElem& a, long t) const {
  TensorElem out = tensor_zero();
  const std::size_t da = dim_a();
  for (int c = 0; c < n_; ++c) {
    AElem u(T.begin() + static_cast<long>(c * da), T.begin() + static_cast<long>((c + 1) * da));
    if (is_zero(u)) continue;
    for (int d = 0; d < n_; ++d) {
      KElem mu = coeff(a, d);
      if (is_zero(mu)) continue;
      // (u (x) x^c) mu x^d = u alpha^{t+c}(mu) (x) x^{c+d}
      AElem w = mul(u, embed(alpha_pow(mu, t + c)));
      out = add(out, pure_tensor(w, x_pow(c + d), t));
    }
  }
  return out;
}

TensorElem MonogenicAlgebra::derivation_tensor(int i, long t) const {
  TensorElem out = tensor_zero();
  for (int l = 0; l < i; ++l) out = add(out, pure_tensor(x_pow(l), x_pow(i - l - 1), t));
  return out;
}

TensorElem MonogenicAlgebra::tf_tensor(long t) const {
  TensorElem out = tensor_zero();
  for (int i = 1; i <= n_; ++i) {
    const KElem& l = lambda(n_ - i);
    if (is_zero(l)) continue;
    out = add(out, tensor_left(embed(l), derivation_tensor(i, t)));
  }
  return out;
}

TensorElem MonogenicAlgebra::derivation_of(const OrePoly& P, long t) const {
  TensorElem out = tensor_zero();
  for (std::size_t d = 1; d < P.size(); ++d) {
    if (is_zero(P[d])) continue;
    out = add(out, tensor_left(embed(P[d]), derivation_tensor(static_cast<int>(d), t)));
  }
  return out;
}

AElem MonogenicAlgebra::multiply_tensor(const TensorElem& T) const {
  AElem out = zero();
  const std::size_t da = dim_a();
  for (int c = 0; c < n_; ++c) {
    AElem u(T.begin() + static_cast<long>(c * da), T.begin() + static_cast<long>((c + 1) * da));
    if (is_zero(u)) continue;
    out = add(out, mul(u, x_pow(c)));
  }
  return out;
}

// ---------------------------------------------------------------- resolution

long resolution_twist(int r, int n) {
  const long m = r / 2;
  return r % 2 == 0 ? m * n : m * n + 1;
}

ResolutionMaps resolution_maps(const MonogenicAlgebra& A, int max_degree) {
  if (max_degree < 0) throw InputError("negative resolution degree");
  const Field& F = A.field();
  const int n = A.n();
  const std::size_t da = A.dim_a(), dt = A.tensor_dim();
  ResolutionMaps R;
  R.max_degree = max_degree;

  auto basis_tensor = [&](std::size_t col) {
    TensorElem T = A.tensor_zero();
    T[col] = F.one();
    return T;
  };

  Mat m(F, da, dt), s0(F, dt, da);
  for (std::size_t col = 0; col < dt; ++col) m.set_column(col, A.multiply_tensor(basis_tensor(col)));
  for (std::size_t j = 0; j < da; ++j) s0.set_column(j, A.pure_tensor(A.algebra().basis_vec(j), A.one(), 0));
  R.d.push_back(std::move(m));
  R.sigma.push_back(std::move(s0));

  const AElem x = A.x_pow(1);
  for (int r = 1; r <= max_degree; ++r) {
    const long t_src = resolution_twist(r, n), t_dst = resolution_twist(r - 1, n);
    TensorElem D = (r % 2 == 1)
                       ? sub(A.pure_tensor(x, A.one(), t_dst), A.pure_tensor(A.one(), x, t_dst))
                       : A.tf_tensor(t_dst);
    Mat d(F, dt, dt), s(F, dt, dt);
    for (int c = 0; c < n; ++c) {
      for (std::size_t j = 0; j < da; ++j) {
        const AElem ej = A.algebra().basis_vec(j);
        const std::size_t col = static_cast<std::size_t>(c) * da + j;
        d.set_column(col, A.tensor_right(A.tensor_left(ej, D), A.x_pow(c), t_dst));
        TensorElem sv = A.tensor_zero();
        if (r % 2 == 1) {
          sv = scale(-F.one(), A.tensor_left(ej, A.derivation_tensor(c, t_src)));
        } else if (c == n - 1) {
          sv = A.pure_tensor(ej, A.one(), t_src);
        }
        s.set_column(col, sv);
      }
    }
    R.d.push_back(std::move(d));
    R.sigma.push_back(std::move(s));
  }
  return R;
}

CheckReport contraction_check(const MonogenicAlgebra& A, const ResolutionMaps& R) {
  CheckReport rep;
  const Field& F = A.field();
  const Mat Ia = Mat::identity(F, A.dim_a()), It = Mat::identity(F, A.tensor_dim());
  if (R.d[0] * R.sigma[0] != Ia) rep.fail("m sigma_0 != id");
  if (R.max_degree >= 1 && R.sigma[0] * R.d[0] + R.d[1] * R.sigma[1] != It)
    rep.fail("sigma_0 m + d'_1 sigma_1 != id");
  for (int r = 1; r + 1 <= R.max_degree; ++r) {
    const auto ur = static_cast<std::size_t>(r);
    if (R.d[ur + 1] * R.sigma[ur + 1] + R.sigma[ur] * R.d[ur] != It)
      rep.fail("d'_" + std::to_string(r + 1) + " sigma_" + std::to_string(r + 1) + " + sigma_" +
               std::to_string(r) + " d'_" + std::to_string(r) + " != id");
  }
  for (int r = 0; r + 1 <= R.max_degree; ++r) {
    const auto ur = static_cast<std::size_t>(r);
    if (!(R.d[ur] * R.d[ur + 1]).is_zero())
      rep.fail("d'_" + std::to_string(r) + " d'_" + std::to_string(r + 1) + " != 0");
  }
  return rep;
}

CheckReport tf_commutation_check(const MonogenicAlgebra& A) {
  CheckReport rep;
  const OrePoly f = A.f_poly();
  const TensorElem tf = A.tf_tensor(1);
  if (A.derivation_of(f, 1) != tf) rep.fail("T(f)/Tx differs from the displayed Tf/Tx");
  for (int i = 0; i < A.n(); ++i) {
    const TensorElem lhs = A.derivation_of(A.ore_mul(f, A.x_pow_poly(i)), 1);
    const AElem xi = A.x_pow(i);
    if (lhs != A.tensor_left(xi, tf))
      rep.fail("T(f x^" + std::to_string(i) + ")/Tx != x^" + std::to_string(i) + " Tf/Tx");
    if (lhs != A.tensor_right(tf, xi, 1))
      rep.fail("T(f x^" + std::to_string(i) + ")/Tx != Tf/Tx x^" + std::to_string(i));
  }
  return rep;
}

CheckReport f_normality_check(const MonogenicAlgebra& A) {
  CheckReport rep;
  const OrePoly f = A.f_poly(), x = A.x_pow_poly(1);
  if (A.ore_mul(f, x) != A.ore_mul(x, f)) rep.fail("f x != x f");
  for (std::size_t b = 0; b < A.dim_k() && rep.ok; ++b) {
    const KElem eb = A.K().basis_vec(b);
    if (A.ore_mul(f, OrePoly{eb}) != A.ore_mul(OrePoly{A.alpha_pow(eb, A.n())}, f))
      rep.fail("f lambda != alpha^n(lambda) f at basis index " + std::to_string(b + 1));
  }
  return rep;
}

}  // namespace monogen
