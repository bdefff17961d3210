#include <catch_amalgamated.hpp>

#include <random>

#include "monogen/instances.hpp"

using namespace monogen;

namespace {

const Field& Q() { return Field::rationals(); }

OrePoly random_poly(const MonogenicAlgebra& A, int deg, std::mt19937& rng) {
  std::uniform_int_distribution<int> v(-3, 3);
  OrePoly p;
  for (int d = 0; d <= deg; ++d) {
    KElem c = A.K().zero();
    for (auto& s : c) s = A.field().from_int(v(rng));
    p.push_back(c);
  }
  return p;
}

AElem random_a(const MonogenicAlgebra& A, std::mt19937& rng) {
  std::uniform_int_distribution<int> v(-3, 3);
  AElem a = A.zero();
  for (auto& s : a) s = A.field().from_int(v(rng));
  return a;
}

}  // namespace

TEST_CASE("Ore multiplication") {
  Instance sw = sweedler();
  const auto& A = sw.alg();
  const KElem g = A.K().basis_vec(1);
  OrePoly x = A.x_pow_poly(1);
  auto xg = A.ore_mul(x, OrePoly{g});
  REQUIRE(xg.size() == 2);
  CHECK(is_zero(xg[0]));
  CHECK(xg[1] == scale(Q().from_int(-1), g));
  CHECK(A.ore_mul(x, x) == A.x_pow_poly(2));
  OrePoly one{A.K().unit()};
  std::mt19937 rng(5);
  auto P = random_poly(A, 3, rng);
  while (!P.empty() && is_zero(P.back())) P.pop_back();
  CHECK(A.ore_mul(P, one) == P);
}

TEST_CASE("division by f") {
  Instance t = truncated(Q(), {0, 0});
  const auto& A = t.alg();
  auto [q1, r1] = A.ore_divmod(A.x_pow_poly(3));
  CHECK(q1 == A.x_pow_poly(1));
  CHECK(r1.empty());
  OrePoly p{A.K().unit(), A.K().zero(), A.K().unit()};
  auto [q2, r2] = A.ore_divmod(p);
  CHECK(q2 == OrePoly{A.K().unit()});
  CHECK(r2 == OrePoly{A.K().unit()});

  Instance t2 = truncated(Q(), {0, -1});
  const auto& B = t2.alg();
  auto [q3, r3] = B.ore_divmod(B.x_pow_poly(3));
  CHECK(q3 == B.x_pow_poly(1));
  CHECK(r3 == B.x_pow_poly(1));

  std::mt19937 rng(9);
  for (Instance inst : {sweedler(), gh4_instance(3), quaternion_pi(mpq_class(1))}) {
    const auto& M = inst.alg();
    for (int trial = 0; trial < 20; ++trial) {
      auto P = random_poly(M, 2 * M.n(), rng);
      auto [qq, rr] = M.ore_divmod(P);
      CHECK(static_cast<int>(rr.size()) <= M.n() - 1 + 1);
      CHECK(static_cast<int>(rr.size()) < M.n() + 1);
      auto rebuilt = M.ore_add(M.ore_mul(qq, M.f_poly()), rr);
      while (!P.empty() && is_zero(P.back())) P.pop_back();
      CHECK(rebuilt == P);
      CHECK(static_cast<int>(rr.size()) <= M.n());
    }
    CHECK(f_normality_check(M).ok);
  }
}

TEST_CASE("validate_f") {
  Instance sw = sweedler();
  const auto& K = sw.alg().K();
  CHECK(validate_f(K, sw.alg().alpha(), {K.zero(), K.zero()}).ok);
  auto rep = validate_f(K, sw.alg().alpha(), {K.basis_vec(1), K.zero()});
  CHECK_FALSE(rep.ok);
  CHECK(rep.failure.find("alpha(lambda_1)") != std::string::npos);

  GroupData C4 = GroupData::cyclic(4);
  C4.set_character(cyclic_character(C4, Q().from_int(-1)));
  Instance r1 = rank_one("c4", C4, Q(), 1, 2, Q().one());
  CHECK(f_normality_check(r1.alg()).ok);
}

TEST_CASE("multiplication in A") {
  Instance sw = sweedler();
  const auto& A = sw.alg();
  const AElem x = A.x_pow(1), g = A.embed(A.K().basis_vec(1));
  CHECK(is_zero(A.mul(x, x)));
  CHECK(A.mul(g, x) == A.embed(A.K().basis_vec(1), 1));
  CHECK(A.mul(x, g) == scale(Q().from_int(-1), A.embed(A.K().basis_vec(1), 1)));
  CHECK(algebra_validate(A.algebra()).ok);

  GroupData C4 = GroupData::cyclic(4);
  C4.set_character(cyclic_character(C4, Q().from_int(-1)));
  Instance r1 = rank_one("c4", C4, Q(), 1, 2, Q().one());
  const auto& B = r1.alg();
  KElem expect = B.K().zero();
  expect[2] = Q().one();
  expect[0] = Q().from_int(-1);
  CHECK(B.mul(B.x_pow(1), B.x_pow(1)) == B.embed(expect));

  std::mt19937 rng(2);
  for (Instance inst : {gh4_instance(2), quaternion_pi(mpq_class(1)), r1}) {
    const auto& M = inst.alg();
    CHECK(algebra_validate(M.algebra()).ok);
    for (std::size_t b = 0; b < M.dim_k(); ++b) {
      const KElem eb = M.K().basis_vec(b);
      CHECK(M.mul(M.x_pow(1), M.embed(eb)) == M.embed(M.alpha_pow(eb, 1), 1));
    }
    for (int trial = 0; trial < 50; ++trial) {
      AElem a = random_a(M, rng), c = random_a(M, rng);
      CHECK(M.mul(a, c) == M.from_ore(M.ore_mul(M.to_ore(a), M.to_ore(c))));
    }
  }
}

TEST_CASE("Tf/Tx commutes with powers of x") {
  Instance sw = sweedler();
  const auto& A = sw.alg();
  CHECK(is_zero(A.derivation_tensor(0)));
  CHECK(A.derivation_tensor(1) == A.pure_tensor(A.one(), A.one(), 1));
  CHECK(A.derivation_tensor(2) ==
        add(A.pure_tensor(A.x_pow(1), A.one(), 1), A.pure_tensor(A.one(), A.x_pow(1), 1)));
  for (Instance inst : {sweedler(), taft(3), gh4_instance(3), quaternion_pi(mpq_class(1)),
                        truncated(Q(), {0, -1})}) {
    INFO(inst.name);
    CHECK(tf_commutation_check(inst.alg()).ok);
  }
  GroupData C4 = GroupData::cyclic(4);
  C4.set_character(cyclic_character(C4, Q().from_int(-1)));
  CHECK(tf_commutation_check(rank_one("c4", C4, Q(), 1, 2, Q().one()).alg()).ok);
}

TEST_CASE("resolution is contractible") {
  for (Instance inst : {sweedler(), taft(3), quaternion_pi(mpq_class(1)), truncated(Q(), {2, 3}),
                        split_swap()}) {
    INFO(inst.name);
    auto R = resolution_maps(inst.alg(), 6);
    auto rep = contraction_check(inst.alg(), R);
    INFO(rep.failure);
    CHECK(rep.ok);
  }
  Instance sw = sweedler();
  const auto& A = sw.alg();
  auto R = resolution_maps(A, 4);
  // sigma_{2m}(1 (x) x^{n-1}) = 1 (x) 1
  TensorElem e = A.tensor_zero();
  e[static_cast<std::size_t>(A.n() - 1) * A.dim_a()] = Q().one();
  CHECK(R.sigma[2].apply(e) == A.pure_tensor(A.one(), A.one(), resolution_twist(2, A.n())));
}
