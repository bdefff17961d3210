#include "monogen/witness.hpp"

namespace monogen {

SeparatingWitness check_witness(const MonogenicAlgebra& A, const KElem& candidate) {
  const AlgebraK& K = A.K();
  SeparatingWitness w;
  w.value = candidate;
  w.central = true;
  for (std::size_t b = 0; b < K.dim() && w.central; ++b) {
    const KElem e = K.basis_vec(b);
    w.central = K.mul(candidate, e) == K.mul(e, candidate);
  }
  w.fixed = A.alpha_pow(candidate, A.n()) == candidate;
  w.regular_differences = true;
  for (int i = 1; i < A.n() && w.regular_differences; ++i) {
    const KElem diff = sub(candidate, A.alpha_pow(candidate, i));
    w.regular_differences = rank(K.left_mul_matrix(diff)) == K.dim() &&
                            rank(K.right_mul_matrix(diff)) == K.dim();
  }
  return w;
}

std::optional<SeparatingWitness> find_witness(const MonogenicAlgebra& A,
                                              const std::vector<KElem>& candidates,
                                              const std::vector<KElem>& extra) {
  std::vector<KElem> all = candidates;
  for (std::size_t b = 0; b < A.dim_k(); ++b) all.push_back(A.K().basis_vec(b));
  all.insert(all.end(), extra.begin(), extra.end());
  for (const auto& c : all) {
    if (c.size() != A.dim_k()) throw InputError("witness candidate has the wrong dimension");
    SeparatingWitness w = check_witness(A, c);
    if (w.ok()) return w;
  }
  return std::nullopt;
}

}  // namespace monogen
