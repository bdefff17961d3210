#pragma once

// Ready-made monogenic extensions: Sweedler and Taft algebras, the gh4 family,
// the quaternion rotation example, truncated polynomial algebras, rank-one
// Hopf algebras and the split negative control.

#include <cstddef>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "monogen/monogenic.hpp"

namespace monogen {

struct Instance {
  std::string name;
  std::shared_ptr<const MonogenicAlgebra> A;
  /// Present when K = k[G] and alpha comes from a character of G.
  std::optional<GroupData> group;
  /// Central group element whose character value is a primitive n-th root.
  std::optional<std::size_t> g1;
  /// Present for the quaternion family.
  std::optional<QuaternionData> quaternion;
  std::vector<KElem> witness_candidates;

  const MonogenicAlgebra& alg() const { return *A; }
};

/// K = k[G] with alpha(g) = chi(g) g and the given f coefficients lambda_1..lambda_n.
Instance group_instance(std::string name, GroupData G, const Field& F,
                        std::vector<KElem> lambdas, std::optional<std::size_t> g1 = std::nullopt);

/// Q[C_2], chi = sign, f = x^2.
Instance sweedler();
/// k[C_n] over Q(zeta_n) (Q for n = 2), chi(g) = zeta_n, f = x^n.
Instance taft(int n);
/// gh4 group over Q(i), chi(g^j h^l) = i^l, f = x^2, witness candidate h^2.
Instance gh4_instance(std::size_t u);
/// Quaternions with the rotation by pi, f = x^2 + lambda_1 x + lambda_2.
Instance quaternion_pi(const KElem& lambda1, const KElem& lambda2);
/// Quaternions with the rotation by pi, f = x^2 - rho.
Instance quaternion_pi(const mpq_class& rho);
/// K = F, alpha = id, f = x^n + c_1 x^{n-1} + ... + c_n.
Instance truncated(const Field& F, const std::vector<mpq_class>& coeffs);
/// K = Q x Q, alpha the coordinate swap, f = x^2.
Instance split_swap();
/// k[G][x, alpha]/<x^n - xi (g1^n - 1)>.
Instance rank_one(std::string name, GroupData G, const Field& F, std::size_t g1, int n,
                  const Scalar& xi);

}  // namespace monogen
