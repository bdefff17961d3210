// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "monogen/closedforms.hpp"

using namespace monogen;

namespace {

using Dims = std::vector<std::size_t>;

struct Verdict {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    notes.push_back((ok ? "" : "FAILED ") + what);
  }
};

std::string dims_str(const Dims& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<Instance> flagships() { return {sweedler(), taft(3), gh4_instance(3), quaternion_pi(mpq_class(1))}; }

const Field& qi() { return Field::extension({1, 0, 1}, "i"); }

GroupData cyclic_with(std::size_t order, const Scalar& chi_g) {
  GroupData G = GroupData::cyclic(order);
  G.set_character(cyclic_character(G, chi_g));
  return G;
}

// ---------------------------------------------------------------------------

Verdict resolution_contractible() {
  Verdict v;
  for (const auto& inst : flagships()) {
    const auto t0 = std::chrono::steady_clock::now();
    const ResolutionMaps R = resolution_maps(inst.alg(), 6);
    const CheckReport rep = contraction_check(inst.alg(), R);
    const double t = seconds_since(t0);
    std::ostringstream os;
    os << inst.name << " " << (rep.ok ? "exact" : rep.failure) << " in " << std::fixed;
    os.precision(2);
    os << t << "s";
    v.require(rep.ok && t < 5.0, os.str());
  }
  return v;
}

Verdict chain_maps() {
  Verdict v;
  for (const auto& inst : flagships()) {
    const MonogenicAlgebra& A = inst.alg();
    bool ok = true;
    Products X(A, 5);
    SmallComplex C;
    try {
      C = build_small_complex(X.regular(), 5);
    } catch (const MathError&) {
      ok = false;
    }
    for (int r = 1; ok && r < 5; ++r)
      if (C.dim(r - 1) && C.dim(r + 1) && !(C.d[static_cast<std::size_t>(r + 1)] * C.d[static_cast<std::size_t>(r)]).is_zero())
        ok = false;
    for (int r = 0; ok && r < 5; ++r) {
      for (std::size_t c = 0; c < C.dim(r); ++c) {
        const SmallCochain a{r, C.basis[static_cast<std::size_t>(r)].column(c)};
        if (!(X.bar_differential(X.psi(a)) == X.psi({r + 1, X.small_differential(a)}))) ok = false;
      }
      for (const auto& g : X.bar_basis(r))
        if (!(X.small_differential({r, X.phi(g)}) == X.phi(X.bar_differential(g)))) ok = false;
    }
    const auto diff = comparison_maps_diff(comparison_maps(A, 4, MapSource::Closed),
                                           comparison_maps(A, 4, MapSource::Recursive));
    v.require(ok, inst.name + " dd = 0 and chain maps through 5");
    v.require(diff.empty(), inst.name + " closed maps = recursion through 4");
  }
  return v;
}

Verdict sweedler_taft() {
  Verdict v;
  for (const auto& inst : {sweedler(), taft(3)}) {
    Pipeline P(inst.alg(), 6);
    Products X(inst.alg(), 4);
    v.require(P.dims() == Dims(7, 1), inst.name + " dims " + dims_str(P.dims()));
    const AElem x = P.representatives(1).at(0);
    const AElem y = P.representatives(2).at(0);
    v.require(is_zero(cup_class(P, X, 1, x, 1, x)), inst.name + " x.x = 0");
    bool bij = true;
    for (int m = 0; m + 2 <= 6; ++m)
      for (const auto& a : P.representatives(m)) bij = bij && !is_zero(cup_class(P, X, 2, y, m, a));
    v.require(bij, inst.name + " y. bijective H^m -> H^m+2");
    const CheckResult pres = presentation_check(P, X);
    std::string pattern;
    for (const auto& [k, val] : pres.notes)
      if (k == "pattern") pattern = val;
    v.require(pres.passed() && pattern.rfind("k[N]^G", 0) == 0, inst.name + " presentation " + pattern);
  }
  return v;
}

Verdict identity_alpha() {
  Verdict v;
  struct Case {
    const Field* F;
    std::vector<mpq_class> coeffs;
    Dims dims;
    std::string label;
  };
  const std::vector<Case> cases = {
      {&Field::rationals(), {0, 0}, {2, 1, 1, 1, 1}, "Q x^2"},
      {&Field::rationals(), {0, -1}, {2, 0, 0, 0, 0}, "Q x^2-1"},
      {&Field::prime_field(3), {0, 0, 0}, {3, 3, 3, 3, 3}, "GF(3) x^3"},
  };
  for (const auto& c : cases) {
    auto inst = truncated(*c.F, c.coeffs);
    Pipeline P(inst.alg(), 4);
    const CheckResult r = identity_alpha_cohomology_check(P);
    v.require(r.passed() && r.closed_table == c.dims && r.generic_table == c.dims,
              c.label + " closed " + dims_str(r.closed_table) + " generic " + dims_str(r.generic_table));
  }
  return v;
}

Verdict gh4_example() {
  Verdict v;
  auto inst = gh4_instance(3);
  const MonogenicAlgebra& A = inst.alg();
  Pipeline P(A, 8);
  const Dims d = P.dims();
  v.require(d[0] == 2 && d[1] == 2 && d[2] == 1 && d[3] == 1, "H^0..H^3 " + dims_str({d[0], d[1], d[2], d[3]}));
  const auto per = character_power_order(A);
  v.require(per && 2 * *per == 4, "period " + std::to_string(per ? 2 * *per : 0));
  v.require(periodicity_check(P, witness_for(inst)).passed(), "periodicity through 8");
  Products X(A, 4);
  const GroupData& G = *inst.group;
  const std::size_t g = G.index_of("g"), g2 = G.index_of("g^2");
  KElem a = A.K().zero(), b = A.K().zero();
  a[g] = A.field().one();
  a[g2] = A.field().one();
  b[g] = A.field().one();
  b[g2] = -A.field().one();
  const std::vector<Generator> gens = {{"a", 0, A.embed(a)},
                                       {"x", 1, A.embed(A.K().unit(), 1)},
                                       {"b", 2, A.embed(b)},
                                       {"c", 4, A.one()}};
  const CheckResult r = generators_check(P, X, gens);
  v.require(r.passed(), "generators a, x, b, c with c bijective");
  return v;
}

Verdict rank_one_cases() {
  Verdict v;
  // (i) as stated: C4 over Q(i), chi(g1) = i, n = 2.
  const GroupData G4i = cyclic_with(4, qi().generator());
  const CheckResult lit = rank_one_hopf_check(G4i, qi(), 1, 2, qi().one(), 5);
  v.require(lit.passed(), std::string("(i) C4 chi(g1)=i: ") +
                              (lit.hypotheses_hold() ? "ran" : "chi(g1) is not a primitive square root"));
  // Closest instance meeting the hypotheses: C8, chi(g) = i, g1 = g^2.
  const GroupData G8 = cyclic_with(8, qi().generator());
  const CheckResult sub = rank_one_hopf_check(G8, qi(), 2, 2, qi().one(), 5);
  v.notes.push_back(std::string("(i') C8 chi(g)=i g1=g^2 ") + (sub.passed() ? "matches quotient model " : "MISMATCH ") +
                    dims_str(sub.generic_table));

  // (ii) C4, chi(g1) = -1, xi = 1.
  const Field& Q = Field::rationals();
  const GroupData G4 = cyclic_with(4, Q.from_int(-1));
  const CheckResult r = rank_one_hopf_check(G4, Q, 1, 2, Q.one(), 5);
  std::size_t stated = 0, other = 0;
  for (const auto& m : r.mismatches) (m.rfind("stated bracket", 0) == 0 ? stated : other)++;
  v.require(r.hypotheses_hold() && other == 0,
            "(ii) closed formulas, odd cups, dimension equality " + dims_str(r.generic_table));
  v.require(stated == 0, "(ii) stated bracket vs oracle: " + std::to_string(stated) + " mismatches");
  return v;
}

Verdict brackets() {
  Verdict v;
  const Field& Q = Field::rationals();
  std::vector<Instance> cases;
  cases.push_back(sweedler());
  cases.push_back(rank_one("rank_one_c4_sign", cyclic_with(4, Q.from_int(-1)), Q, 1, 2, Q.one()));
  // The chi^n != id case is computed through its quotient-group model.
  const GroupData G8 = cyclic_with(8, qi().generator());
  const QuotientGroup QG = quotient_group(G8, {0, 4});
  cases.push_back(group_instance("quotient_model_c8", QG.G, qi(),
                                 std::vector<KElem>(2, zero_vec(qi(), QG.G.order)), QG.projection[2]));
  for (const auto& inst : cases) {
    Pipeline P(inst.alg(), 3);
    Products X(inst.alg(), 3);
    const CheckResult bc = bracket_closed_check(P, X, witness_for(inst), 1);
    const CheckResult eb = even_bracket_check(P, X);
    v.require(bc.passed(), inst.name + " closed = generic on m, m' in {0,1}");
    v.require(eb.passed(), inst.name + " [even, even] = 0");
  }
  return v;
}

Verdict quaternion() {
  Verdict v;
  const Field& Q = Field::rationals();
  auto base = quaternion_pi(mpq_class(1));
  const QuaternionData& q = *base.quaternion;
  auto quat = [&](long a, long b, long c, long d) { return KElem{Q.from_int(a), Q.from_int(b), Q.from_int(c), Q.from_int(d)}; };
  bool exact = true;
  for (long a : {-2, 0, 1, 5}) exact = exact && quaternion_coefficient_eligible(Q, q, quat(a, 0, 0, 0), 2);
  for (const auto& l : {quat(0, 1, 0, 0), quat(0, 0, 1, 0), quat(0, 0, 0, 1), quat(1, 0, 0, 1), quat(2, 1, 1, 0)})
    exact = exact && !quaternion_coefficient_eligible(Q, q, l, 2);
  v.require(exact, "eligible lambda_2 are exactly Q.1");
  for (auto [rho, dims] : {std::pair{1, Dims{2, 0, 0, 0, 0}}, std::pair{0, Dims{2, 1, 1, 1, 1}}}) {
    auto inst = quaternion_pi(mpq_class(rho));
    Pipeline P(inst.alg(), 4);
    const CheckResult r = quaternion_check(P, *inst.quaternion);
    v.require(r.passed() && r.generic_table == dims && r.closed_table == dims,
              "rho=" + std::to_string(rho) + " comparison map and dims " + dims_str(r.generic_table));
  }
  return v;
}

Verdict f_independence() {
  Verdict v;
  // Look for a witnessed n = 3 instance with two admissible lambda_1 sharing lambda_3.
  struct Base {
    std::string name;
    GroupData G;
    const Field* F;
  };
  const Field& Z3 = Field::extension(cyclotomic_minpoly(3), "z");
  std::vector<Base> bases;
  bases.push_back({"C3", cyclic_with(3, Z3.generator()), &Z3});
  bases.push_back({"C6", cyclic_with(6, Z3.generator()), &Z3});
  std::size_t tried = 0, admissible = 0;
  std::optional<std::pair<Instance, Instance>> pair;
  for (const auto& b : bases) {
    const AlgebraK K = group_algebra(b.G, *b.F);
    const Endo alpha = endo_from_character(b.G);
    std::vector<KElem> cands = class_sums(b.G, *b.F);
    for (std::size_t i = 0; i < K.dim(); ++i) cands.push_back(K.basis_vec(i));
    const KElem l3 = K.zero();
    for (const auto& l1 : cands) {
      ++tried;
      if (!validate_f(K, alpha, {l1, K.zero(), l3}).ok) continue;
      ++admissible;
      if (!pair) {
        std::optional<std::size_t> g1;
        for (auto z : b.G.center)
          if (b.F->multiplicative_order(b.G.character[z]) == 3) g1 = z;
        pair.emplace(group_instance(b.name + "_zero", b.G, *b.F, {K.zero(), K.zero(), l3}, g1),
                     group_instance(b.name + "_l1", b.G, *b.F, {l1, K.zero(), l3}, g1));
      }
    }
  }
  v.require(admissible > 0, std::to_string(admissible) + " of " + std::to_string(tried) +
                                " nonzero lambda_1 admissible on witnessed C3, C6");
  if (pair) {
    Pipeline P1(pair->first.alg(), 4), P2(pair->second.alg(), 4);
    Products X1(pair->first.alg(), 3), X2(pair->second.alg(), 3);
    v.require(f_independence_check(P1, X1, P2, X2, witness_for(pair->first), witness_for(pair->second)).passed(),
              "tables agree");
  }
  return v;
}

Verdict negative_control() {
  Verdict v;
  auto inst = split_swap();
  const auto w = witness_for(inst);
  v.require(!w, std::string("witness: ") + (w ? inst.alg().K().format(w->value) : "none"));
  Pipeline P(inst.alg(), 4);
  Products X(inst.alg(), 4);
  const CheckResult cc = cup_commutativity_check(P, X);
  v.require(cc.passed(), "generic table " + dims_str(P.dims()) + ", dd = 0, graded-commutative cup");
  const CheckResult wc = witness_cohomology_check(P, w);
  v.require(!wc.ran, std::string("closed forms ") + (wc.ran ? "ran" : "skipped"));
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"resolution contractibility", resolution_contractible},
      {"differentials and comparison maps", chain_maps},
      {"Sweedler/Taft dimensions and presentation", sweedler_taft},
      {"alpha = id truncated polynomials", identity_alpha},
      {"gh4 example at u = 3", gh4_example},
      {"rank-one Hopf algebras, both cases", rank_one_cases},
      {"bracket cross-validation", brackets},
      {"quaternion rotation by pi", quaternion},
      {"independence of f", f_independence},
      {"split negative control", negative_control},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    std::string detail;
    for (const auto& n : v.notes) detail += (detail.empty() ? "" : "; ") + n;
    std::printf("criterion %zu %s: %s [%s]\n", i + 1, v.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                detail.c_str());
    std::fflush(stdout);
    failed += v.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed ? 1 : 0;
}
