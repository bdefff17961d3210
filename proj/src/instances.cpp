#include "monogen/instances.hpp"

namespace monogen {

Instance group_instance(std::string name, GroupData G, const Field& F, std::vector<KElem> lambdas,
                        std::optional<std::size_t> g1) {
  AlgebraK K = group_algebra(G, F);
  Endo alpha = endo_from_character(G);
  Instance inst;
  inst.name = std::move(name);
  inst.A = std::make_shared<const MonogenicAlgebra>(std::move(K), std::move(alpha), std::move(lambdas));
  if (g1) inst.witness_candidates.push_back(inst.A->K().basis_vec(*g1));
  inst.group = std::move(G);
  inst.g1 = g1;
  return inst;
}

Instance sweedler() {
  const Field& Q = Field::rationals();
  GroupData G = GroupData::cyclic(2);
  G.set_character(cyclic_character(G, Q.from_int(-1)));
  std::vector<KElem> lambdas(2, zero_vec(Q, 2));
  return group_instance("sweedler", std::move(G), Q, std::move(lambdas), 1);
}

Instance taft(int n) {
  if (n < 2) throw InputError("Taft algebra needs n >= 2");
  const Field& F = n == 2 ? Field::rationals() : Field::extension(cyclotomic_minpoly(n), "z");
  GroupData G = GroupData::cyclic(static_cast<std::size_t>(n));
  G.set_character(cyclic_character(G, n == 2 ? F.from_int(-1) : F.generator()));
  std::vector<KElem> lambdas(static_cast<std::size_t>(n), zero_vec(F, static_cast<std::size_t>(n)));
  return group_instance("taft" + std::to_string(n), std::move(G), F, std::move(lambdas), 1);
}

Instance gh4_instance(std::size_t u) {
  const Field& F = Field::extension({1, 0, 1}, "i");
  GroupData G = GroupData::gh4(u);
  G.set_character(gh4_character(G, u, F.one(), F.generator()));
  const std::size_t h2 = 2 * u;
  std::vector<KElem> lambdas(2, zero_vec(F, G.order));
  // The central elements with primitive square-root character value are g^j h^2
  // for g^j central; h^2 always qualifies.
  return group_instance("gh4_u" + std::to_string(u), std::move(G), F, std::move(lambdas), h2);
}

Instance quaternion_pi(const KElem& lambda1, const KElem& lambda2) {
  const Field& Q = Field::rationals();
  QuaternionData q{Q.from_int(-1), Q.zero(), Q.zero(), Q.one()};
  auto [H, alpha] = quaternion_algebra(Q, q);
  Instance inst;
  inst.name = "quaternion_pi";
  inst.A = std::make_shared<const MonogenicAlgebra>(std::move(H), std::move(alpha),
                                                    std::vector<KElem>{lambda1, lambda2});
  inst.quaternion = q;
  return inst;
}

Instance quaternion_pi(const mpq_class& rho) {
  const Field& Q = Field::rationals();
  KElem l2 = zero_vec(Q, 4);
  l2[0] = Q.from_rational(-rho);
  Instance inst = quaternion_pi(zero_vec(Q, 4), l2);
  inst.name = "quaternion_pi_rho" + rho.get_str();
  return inst;
}

Instance truncated(const Field& F, const std::vector<mpq_class>& coeffs) {
  AlgebraK K(F, {"1"}, {F.one()}, {{0, 0, 0, F.one()}});
  Endo alpha = Endo::identity(K);
  std::vector<KElem> lambdas;
  for (const auto& c : coeffs) lambdas.push_back({F.from_rational(c)});
  Instance inst;
  inst.name = "truncated";
  inst.A = std::make_shared<const MonogenicAlgebra>(std::move(K), std::move(alpha), std::move(lambdas));
  return inst;
}

Instance split_swap() {
  const Field& Q = Field::rationals();
  AlgebraK K = AlgebraK::split(Q, 2);
  Mat swap(Q, 2, 2);
  swap(0, 1) = Q.one();
  swap(1, 0) = Q.one();
  Instance inst;
  inst.name = "split_swap";
  inst.A = std::make_shared<const MonogenicAlgebra>(std::move(K), Endo(swap),
                                                    std::vector<KElem>(2, zero_vec(Q, 2)));
  return inst;
}

Instance rank_one(std::string name, GroupData G, const Field& F, std::size_t g1, int n,
                  const Scalar& xi) {
  std::vector<KElem> lambdas(static_cast<std::size_t>(n), zero_vec(F, G.order));
  // f = x^n - xi (g1^n - 1), so lambda_n = xi (1 - g1^n).
  KElem ln = zero_vec(F, G.order);
  ln[G.identity] += xi;
  ln[G.power(g1, n)] -= xi;
  lambdas.back() = ln;
  return group_instance(std::move(name), std::move(G), F, std::move(lambdas), g1);
}

}  // namespace monogen
