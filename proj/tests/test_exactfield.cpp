#include <catch_amalgamated.hpp>

#include <random>

#include "monogen/exactfield.hpp"
#include "monogen/kernels.hpp"

using namespace monogen;

namespace {

Scalar random_scalar(const Field& F, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  std::vector<mpq_class> c;
  for (int i = 0; i < F.degree(); ++i) c.emplace_back(num(rng), den(rng));
  return F.element(c);
}

Mat random_mat(const Field& F, std::size_t r, std::size_t c, std::mt19937& rng, int zero_bias = 2) {
  Mat m(F, r, c);
  std::uniform_int_distribution<int> z(0, zero_bias);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (z(rng) == 0) m(i, j) = random_scalar(F, rng);
  return m;
}

}  // namespace

TEST_CASE("rationals and prime fields") {
  const Field& Q = Field::rationals();
  CHECK((Q.from_rational(mpq_class(1, 2)) * Q.from_int(2)).is_one());
  CHECK(Q.from_int(2).inv() == Q.from_rational(mpq_class(1, 2)));
  const Field& F7 = Field::prime_field(7);
  CHECK((F7.from_int(3) * F7.from_int(5)).is_one());
  CHECK(F7.from_int(3).inv() == F7.from_int(5));
  CHECK(F7.from_int(-1) == F7.from_int(6));
  CHECK_THROWS_AS(Field::prime_field(9), InputError);
  CHECK_THROWS_AS(Q.zero().inv(), MathError);
}

TEST_CASE("quadratic extension") {
  const Field& Qi = Field::extension({1, 0, 1}, "i");
  Scalar i = Qi.generator();
  CHECK(i * i == Qi.from_int(-1));
  Scalar a = Qi.one() + i;
  CHECK(a.inv() == Qi.element({mpq_class(1, 2), mpq_class(-1, 2)}));
  CHECK(i.to_string() == "i");
  CHECK(Qi.multiplicative_order(i) == 4);
  CHECK(&Qi == &Field::extension({1, 0, 1}, "i"));
  CHECK_THROWS_AS(Field::extension({1, 0, 2}, "i"), InputError);
  CHECK_THROWS_AS(Field::extension({-1, 0, 1}, "s"), InputError);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_minpoly(1) == std::vector<mpq_class>{-1, 1});
  CHECK(cyclotomic_minpoly(2) == std::vector<mpq_class>{1, 1});
  CHECK(cyclotomic_minpoly(4) == std::vector<mpq_class>{1, 0, 1});
  CHECK(cyclotomic_minpoly(6) == std::vector<mpq_class>{1, -1, 1});
  CHECK(cyclotomic_minpoly(12) == std::vector<mpq_class>{1, 0, -1, 0, 1});
  for (int n : {3, 5, 8, 12}) {
    auto phi = cyclotomic_minpoly(n);
    const Field& F = Field::extension(phi, "z");
    Scalar z = F.generator();
    CHECK(F.eval_poly(phi, z).is_zero());
    CHECK(F.multiplicative_order(z) == n);
  }
}

TEST_CASE("irreducibility for small degrees") {
  CHECK(is_irreducible_small({1, 0, 1}, 0) == true);
  CHECK(is_irreducible_small({-1, 0, 1}, 0) == false);
  CHECK(is_irreducible_small({1, 0, 1}, 2) == false);
  CHECK(is_irreducible_small({1, 0, 1}, 3) == true);
  // (x^2+1)(x^2+2) has no rational roots.
  CHECK(is_irreducible_small({2, 0, 3, 0, 1}, 0) == false);
  CHECK(is_irreducible_small({1, 0, 0, 0, 1}, 0) == true);
  CHECK(is_irreducible_small({-2, 0, 1}, 0) == true);
}

TEST_CASE("field axioms on random samples") {
  std::mt19937 rng(7);
  for (const Field* F : {&Field::rationals(), &Field::prime_field(7),
                         &Field::extension({1, 0, 1}, "i"),
                         &Field::extension(cyclotomic_minpoly(5), "z")}) {
    for (int s = 0; s < 1000; ++s) {
      Scalar a = random_scalar(*F, rng), b = random_scalar(*F, rng), c = random_scalar(*F, rng);
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE(a + b == b + a);
      if (!a.is_zero()) REQUIRE((a * a.inv()).is_one());
    }
    if (F->kind() == FieldKind::Extension)
      CHECK(F->eval_poly(F->descriptor().minpoly, F->generator()).is_zero());
  }
}

TEST_CASE("kernels, images and quotients") {
  const Field& Q = Field::rationals();
  CHECK(kernel_basis(Mat::identity(Q, 2)).cols() == 0);
  CHECK(kernel_basis(Mat(Q, 2, 2)).cols() == 2);
  Mat ones = Mat::from_rows(Q, 2, {{Q.one(), Q.one()}, {Q.one(), Q.one()}});
  Mat k = kernel_basis(ones);
  REQUIRE(k.cols() == 1);
  CHECK((ones * k).is_zero());
  CHECK(same_span(k, Mat::from_columns(Q, 2, {{Q.one(), Q.from_int(-1)}})));

  Mat I2 = Mat::identity(Q, 2);
  CHECK(quotient_basis(Mat(Q, 2, 0), I2).cols() == 2);
  CHECK(quotient_basis(I2, I2).cols() == 0);
  Mat diag = Mat::from_columns(Q, 2, {{Q.one(), Q.one()}});
  Mat rep = quotient_basis(diag, I2);
  REQUIRE(rep.cols() == 1);
  CHECK(rank(Mat::hstack(diag, rep)) == 2);
  CHECK_THROWS_AS(quotient_basis(I2, diag), MathError);

  std::mt19937 rng(11);
  for (int t = 0; t < 50; ++t) {
    Mat m = random_mat(Q, 1 + t % 5, 1 + (t * 7) % 6, rng);
    Mat kb = kernel_basis(m);
    CHECK(rank(m) + kb.cols() == m.cols());
    CHECK((m * kb).is_zero());
    CHECK(rank(kb) == kb.cols());
  }
}

TEST_CASE("intersections and sums") {
  const Field& Q = Field::rationals();
  Mat a = Mat::from_columns(Q, 3, {{Q.one(), Q.zero(), Q.zero()}, {Q.zero(), Q.one(), Q.zero()}});
  Mat b = Mat::from_columns(Q, 3, {{Q.zero(), Q.one(), Q.zero()}, {Q.zero(), Q.zero(), Q.one()}});
  Mat i = intersect(a, b);
  CHECK(i.cols() == 1);
  CHECK(same_span(i, Mat::from_columns(Q, 3, {{Q.zero(), Q.one(), Q.zero()}})));
  CHECK(span_sum(a, b).cols() == 3);
  auto x = solve(a, {Q.from_int(2), Q.from_int(3), Q.zero()});
  REQUIRE(x);
  CHECK((*x)[0] == Q.from_int(2));
  CHECK_FALSE(solve(a, {Q.zero(), Q.zero(), Q.one()}));
}

TEST_CASE("serial and parallel kernels agree") {
  std::mt19937 rng(3);
  const Field& Qi = Field::extension({1, 0, 1}, "i");
  for (int t = 0; t < 4; ++t) {
    Mat a = random_mat(Qi, 24, 20, rng), b = random_mat(Qi, 20, 22, rng);
    CHECK(kernels::gemm(a, b, kernels::Exec::Serial) == kernels::gemm(a, b, kernels::Exec::Parallel));
    Mat c = random_mat(Qi, 30, 40, rng, 3);
    auto s = kernels::row_reduce(c, kernels::Exec::Serial);
    auto p = kernels::row_reduce(c, kernels::Exec::Parallel);
    CHECK(s.pivots == p.pivots);
    CHECK(s.reduced == p.reduced);
  }
}
