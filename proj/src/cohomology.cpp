#include "monogen/cohomology.hpp"

#include <string>

namespace monogen {

// ---------------------------------------------------------------- Bimodule

Bimodule::Bimodule(const MonogenicAlgebra& A, std::vector<Mat> left_k, std::vector<Mat> right_k,
                   Mat left_x, Mat right_x)
    : A_(&A),
      left_k_(std::move(left_k)),
      right_k_(std::move(right_k)),
      left_x_(std::move(left_x)),
      right_x_(std::move(right_x)) {
  const std::size_t d = left_x_.rows();
  if (left_k_.size() != A.dim_k() || right_k_.size() != A.dim_k())
    throw InputError("bimodule needs one action matrix per K-basis element");
  auto square = [d](const Mat& m) { return m.rows() == d && m.cols() == d; };
  bool ok = square(left_x_) && square(right_x_);
  for (const auto& m : left_k_) ok = ok && square(m);
  for (const auto& m : right_k_) ok = ok && square(m);
  if (!ok) throw InputError("bimodule action matrices have inconsistent sizes");
}

Bimodule Bimodule::regular(const MonogenicAlgebra& A) {
  std::vector<Mat> lk, rk;
  for (std::size_t b = 0; b < A.dim_k(); ++b) {
    const AElem e = A.embed(A.K().basis_vec(b));
    lk.push_back(A.left_mul_matrix(e));
    rk.push_back(A.right_mul_matrix(e));
  }
  return Bimodule(A, std::move(lk), std::move(rk), A.left_mul_matrix(A.x_pow(1)),
                  A.right_mul_matrix(A.x_pow(1)));
}

Mat Bimodule::left_k(const KElem& lambda) const {
  Mat out(field(), dim(), dim());
  for (std::size_t b = 0; b < lambda.size(); ++b)
    if (!lambda[b].is_zero()) {
      Mat t = left_k_[b];
      for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j) t(i, j) = lambda[b] * t(i, j);
      out = out + t;
    }
  return out;
}

Mat Bimodule::right_k(const KElem& lambda) const {
  Mat out(field(), dim(), dim());
  for (std::size_t b = 0; b < lambda.size(); ++b)
    if (!lambda[b].is_zero()) {
      Mat t = right_k_[b];
      for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j) t(i, j) = lambda[b] * t(i, j);
      out = out + t;
    }
  return out;
}

Mat Bimodule::left_x_pow(int e) const {
  Mat out = Mat::identity(field(), dim());
  for (int i = 0; i < e; ++i) out = left_x_ * out;
  return out;
}

Mat Bimodule::right_x_pow(int e) const {
  Mat out = Mat::identity(field(), dim());
  for (int i = 0; i < e; ++i) out = right_x_ * out;
  return out;
}

Mat Bimodule::left(const AElem& a) const {
  Mat out(field(), dim(), dim());
  for (int p = 0; p < A_->n(); ++p) {
    KElem c = A_->coeff(a, p);
    if (is_zero(c)) continue;
    out = out + left_k(c) * left_x_pow(p);
  }
  return out;
}

Mat Bimodule::right(const AElem& a) const {
  Mat out(field(), dim(), dim());
  for (int p = 0; p < A_->n(); ++p) {
    KElem c = A_->coeff(a, p);
    if (is_zero(c)) continue;
    // m (c x^p) = (m c) x^p
    out = out + right_x_pow(p) * right_k(c);
  }
  return out;
}

CheckReport bimodule_validate(const Bimodule& M) {
  CheckReport rep;
  const auto& A = M.algebra();
  const auto& K = A.K();
  const Mat I = Mat::identity(M.field(), M.dim());
  if (M.left_k(K.unit()) != I || M.right_k(K.unit()) != I) rep.fail("unit does not act as identity");
  std::vector<Mat> L, R;
  for (std::size_t b = 0; b < K.dim(); ++b) {
    L.push_back(M.left_k(K.basis_vec(b)));
    R.push_back(M.right_k(K.basis_vec(b)));
  }
  L.push_back(M.left_x());
  R.push_back(M.right_x());
  for (std::size_t i = 0; i < L.size() && rep.ok; ++i)
    for (std::size_t j = 0; j < R.size() && rep.ok; ++j)
      if (L[i] * R[j] != R[j] * L[i])
        rep.fail("left and right actions do not commute (" + std::to_string(i + 1) + "," +
                 std::to_string(j + 1) + ")");
  for (std::size_t b = 0; b < K.dim() && rep.ok; ++b) {
    const KElem eb = K.basis_vec(b), ab = A.alpha_pow(eb, 1);
    if (M.left_x() * L[b] != M.left_k(ab) * M.left_x()) rep.fail("left action violates x lambda = alpha(lambda) x");
    if (R[b] * M.right_x() != M.right_x() * M.right_k(ab))
      rep.fail("right action violates x lambda = alpha(lambda) x");
    for (std::size_t c = 0; c < K.dim() && rep.ok; ++c) {
      const KElem bc = K.mul(eb, K.basis_vec(c));
      if (M.left_k(bc) != L[b] * L[c]) rep.fail("left K-action is not multiplicative");
      if (M.right_k(bc) != R[c] * R[b]) rep.fail("right K-action is not multiplicative");
    }
  }
  Mat lf(M.field(), M.dim(), M.dim()), rf(M.field(), M.dim(), M.dim());
  for (int i = 0; i <= A.n(); ++i) {
    lf = lf + M.left_k(A.lambda(i)) * M.left_x_pow(A.n() - i);
    rf = rf + M.right_x_pow(A.n() - i) * M.right_k(A.lambda(i));
  }
  if (!lf.is_zero() || !rf.is_zero()) rep.fail("f does not act as zero");
  return rep;
}

Mat twisted_invariants(const Bimodule& M, long r) {
  const auto& A = M.algebra();
  Mat stacked(M.field(), 0, M.dim());
  for (std::size_t b = 0; b < A.dim_k(); ++b) {
    const KElem eb = A.K().basis_vec(b);
    stacked = Mat::vstack(stacked, M.right_k(eb) - M.left_k(A.alpha_pow(eb, r)));
  }
  return kernel_basis(stacked);
}

Mat small_differential_ambient(const Bimodule& M, int r) {
  if (r < 1) throw InputError("small differential degree must be >= 1");
  if (r % 2 == 1) return M.left_x() - M.right_x();
  const auto& A = M.algebra();
  const int n = A.n();
  Mat out(M.field(), M.dim(), M.dim());
  for (int i = 1; i <= n; ++i) {
    const KElem& l = A.lambda(n - i);
    if (is_zero(l)) continue;
    const Mat Ll = M.left_k(l);
    for (int e = 0; e < i; ++e) out = out + Ll * M.left_x_pow(e) * M.right_x_pow(i - e - 1);
  }
  return out;
}

// ---------------------------------------------------------------- SmallComplex

Vec SmallComplex::to_ambient(int r, const Vec& coords) const {
  return basis[static_cast<std::size_t>(r)].apply(coords);
}

Vec SmallComplex::to_coords(int r, const Vec& ambient) const {
  return coordinates(basis[static_cast<std::size_t>(r)], ambient);
}

bool SmallComplex::contains(int r, const Vec& ambient) const {
  return in_span(basis[static_cast<std::size_t>(r)], ambient);
}

SmallComplex build_small_complex(const Bimodule& M, int max_degree) {
  if (max_degree < 0) throw InputError("negative complex degree");
  SmallComplex C;
  C.M = &M;
  C.max_degree = max_degree;
  const int n = M.algebra().n();
  for (int r = 0; r <= max_degree; ++r) {
    C.twist.push_back(resolution_twist(r, n));
    C.basis.push_back(twisted_invariants(M, C.twist.back()));
  }
  C.d.push_back(Mat(M.field(), C.basis[0].cols(), 0));
  for (int r = 1; r <= max_degree; ++r) {
    const auto ur = static_cast<std::size_t>(r);
    const Mat image = small_differential_ambient(M, r) * C.basis[ur - 1];
    Mat d(M.field(), C.basis[ur].cols(), image.cols());
    for (std::size_t c = 0; c < image.cols(); ++c) {
      auto x = C.basis[ur].cols() ? solve(C.basis[ur], image.column(c)) : std::nullopt;
      if (!x) {
        if (is_zero(image.column(c)) && C.basis[ur].cols() == 0) continue;
        throw MathError("differential into degree " + std::to_string(r) +
                        " leaves the twisted invariants");
      }
      d.set_column(c, *x);
    }
    C.d.push_back(std::move(d));
  }
  for (int r = 1; r + 1 <= max_degree; ++r) {
    const auto ur = static_cast<std::size_t>(r);
    if (!(C.d[ur + 1] * C.d[ur]).is_zero())
      throw MathError("d^" + std::to_string(r + 1) + " d^" + std::to_string(r) + " != 0");
  }
  return C;
}

CohomologyGroup cohomology_group(const SmallComplex& C, int r) {
  if (r < 0 || r + 1 > C.max_degree) throw InputError("cohomology degree out of range");
  const auto ur = static_cast<std::size_t>(r);
  CohomologyGroup H;
  H.degree = r;
  H.cocycles = kernel_basis(C.d[ur + 1]);
  H.coboundaries = C.d[ur].cols() ? image_basis(C.d[ur]) : Mat(C.M->field(), C.dim(r), 0);
  H.rank_in = H.coboundaries.cols();
  H.rank_out = rank(C.d[ur + 1]);
  H.representatives = quotient_basis(H.coboundaries, H.cocycles);
  H.dim = H.representatives.cols();
  H.ambient_representatives = C.basis[ur] * H.representatives;
  if (H.ambient_representatives.cols() == 0)
    H.ambient_representatives = Mat(C.M->field(), C.M->dim(), 0);
  return H;
}

std::vector<CohomologyGroup> cohomology_groups(const SmallComplex& C) {
  std::vector<CohomologyGroup> out;
  for (int r = 0; r + 1 <= C.max_degree; ++r) out.push_back(cohomology_group(C, r));
  return out;
}

bool is_cocycle(const SmallComplex& C, int r, const Vec& ambient) {
  if (!C.contains(r, ambient)) return false;
  if (r + 1 > C.max_degree) throw InputError("degree beyond the complex");
  return is_zero(small_differential_ambient(*C.M, r + 1).apply(ambient));
}

bool classes_equal(const SmallComplex& C, int r, const Vec& a, const Vec& b) {
  if (!is_cocycle(C, r, a) || !is_cocycle(C, r, b)) throw InputError("classes_equal needs cocycles");
  const Vec diff = C.to_coords(r, sub(a, b));
  const Mat& d = C.d[static_cast<std::size_t>(r)];
  if (d.cols() == 0) return is_zero(diff);
  return in_span(d, diff);
}

Vec class_coords(const SmallComplex& C, const CohomologyGroup& H, const Vec& ambient) {
  const Vec v = C.to_coords(H.degree, ambient);
  if (H.dim == 0) return {};
  Mat both = Mat::hstack(H.representatives, H.coboundaries);
  auto x = solve(both, v);
  if (!x) throw InputError("vector is not a cocycle");
  return Vec(x->begin(), x->begin() + static_cast<long>(H.dim));
}

}  // namespace monogen
