#include <catch_amalgamated.hpp>

#include "monogen/kalgebra.hpp"

using namespace monogen;

namespace {
const Field& Q() { return Field::rationals(); }
const Field& Qi() { return Field::extension({1, 0, 1}, "i"); }
}  // namespace

TEST_CASE("structure-constant validation") {
  AlgebraK k1(Q(), {"1"}, {Q().one()}, {{0, 0, 0, Q().one()}});
  CHECK(algebra_validate(k1).ok);

  auto C2 = GroupData::cyclic(2);
  AlgebraK K = group_algebra(C2, Q());
  CHECK(K.dim() == 2);
  CHECK(algebra_validate(K).ok);
  CHECK(K.mul(K.basis_vec(1), K.basis_vec(1)) == K.unit());

  AlgebraK broken(Q(), {"1"}, {Q().one()}, {{0, 0, 0, Q().from_int(2)}});
  auto rep = algebra_validate(broken);
  CHECK_FALSE(rep.ok);
  CHECK(rep.failure.find("unit law") != std::string::npos);

  auto entries = K.entries();
  for (auto& e : entries)
    if (e.i == 0 && e.j == 0) e.value = Q().from_int(2);
  AlgebraK corrupted(Q(), K.basis_names(), K.unit(), entries);
  rep = algebra_validate(corrupted);
  CHECK_FALSE(rep.ok);
  CHECK(rep.failure == "associativity fails at triple (1,1,2)");
}

TEST_CASE("gh4 groups") {
  auto C4 = GroupData::gh4(1);
  CHECK(C4.order == 4);
  CHECK(C4.conj_classes.size() == 4);

  auto G = GroupData::gh4(3);
  CHECK(G.order == 12);
  std::size_t g = G.index_of("g"), h = G.index_of("h");
  CHECK(G.conjugate(h, g) == G.inverse[g]);
  auto cls = G.conj_classes[G.class_of(g)];
  CHECK(cls == std::vector<std::size_t>{g, G.index_of("g^2")});
  CHECK(G.conj_classes[G.class_of(G.identity)].size() == 1);
  CHECK(GroupData::gh4(2).order == 8);

  AlgebraK K = group_algebra(G, Q());
  CHECK(K.dim() == 12);
  CHECK(center(K).cols() == G.conj_classes.size());
  for (const auto& s : class_sums(G, Q()))
    for (std::size_t b = 0; b < K.dim(); ++b)
      CHECK(K.mul(s, K.basis_vec(b)) == K.mul(K.basis_vec(b), s));
}

TEST_CASE("characters and endomorphisms") {
  auto C2 = GroupData::cyclic(2);
  C2.set_character(cyclic_character(C2, Q().from_int(-1)));
  Endo a = endo_from_character(C2);
  CHECK(a.matrix()(0, 0) == Q().one());
  CHECK(a.matrix()(1, 1) == Q().from_int(-1));
  CHECK(a.is_automorphism());
  CHECK(endo_validate(group_algebra(C2, Q()), a).ok);
  CHECK(a.order() == 2);

  auto triv = GroupData::cyclic(3);
  triv.set_character(cyclic_character(triv, Q().one()));
  CHECK(endo_from_character(triv).is_identity());

  auto G = GroupData::gh4(3);
  Scalar i = Qi().generator();
  G.set_character(gh4_character(G, 3, Qi().one(), i));
  Endo alpha = endo_from_character(G);
  CHECK(alpha.matrix()(G.index_of("h"), G.index_of("h")) == i);
  CHECK(alpha.matrix()(G.index_of("gh^2"), G.index_of("gh^2")) == Qi().from_int(-1));
  CHECK(endo_validate(group_algebra(G, Qi()), alpha).ok);

  // alpha^r is the endomorphism of chi^r.
  for (long r = 0; r < 5; ++r) {
    auto Gr = G;
    std::vector<Scalar> chir;
    for (const auto& c : G.character) chir.push_back(c.pow(r));
    Gr.set_character(chir);
    CHECK(alpha.power(r) == endo_from_character(Gr).matrix());
  }
  CHECK_THROWS_AS(G.set_character(std::vector<Scalar>(12, Qi().from_int(2))), InputError);
}

TEST_CASE("quaternions") {
  auto [H, alpha] = quaternion_algebra(Q(), {Q().from_int(-1), Q().zero(), Q().zero(), Q().one()});
  CHECK(algebra_validate(H).ok);
  CHECK(endo_validate(H, alpha).ok);
  CHECK(alpha.apply(H.basis_vec(1)) == scale(Q().from_int(-1), H.basis_vec(1)));
  CHECK(alpha.apply(H.basis_vec(2)) == scale(Q().from_int(-1), H.basis_vec(2)));
  CHECK(center(H).cols() == 1);

  const Field& F = Field::extension({-2, 0, 1}, "s");
  Scalar h = F.generator() * F.from_rational(mpq_class(1, 2));
  auto [H2, a2] = quaternion_algebra(F, {F.zero(), F.one(), h, h});
  CHECK(endo_validate(H2, a2).ok);
  CHECK(a2.order() == 4);

  CHECK_THROWS_AS(quaternion_algebra(Q(), {Q().one(), Q().one(), Q().one(), Q().zero()}),
                  InputError);
}

TEST_CASE("split algebra") {
  AlgebraK K = AlgebraK::split(Q(), 2);
  CHECK(algebra_validate(K).ok);
  CHECK(K.is_commutative());
  Mat swap(Q(), 2, 2);
  swap(0, 1) = Q().one();
  swap(1, 0) = Q().one();
  CHECK(endo_validate(K, Endo(swap)).ok);
}
