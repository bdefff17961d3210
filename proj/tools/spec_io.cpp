#include "spec_io.hpp"

#include <fstream>
#include <sstream>

namespace monogen::cli {
namespace {

std::string at(const std::string& where, const std::string& key) { return where + "/" + key; }
std::string at(const std::string& where, std::size_t i) { return where + "/" + std::to_string(i); }

const json& need(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) throw SpecError(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SpecError(where, "missing key \"" + key + "\"");
  return *it;
}

long need_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw SpecError(where, "expected an integer");
  return j.get<long>();
}

std::string need_string(const json& j, const std::string& where) {
  if (!j.is_string()) throw SpecError(where, "expected a string");
  return j.get<std::string>();
}

const json& need_array(const json& j, const std::string& where) {
  if (!j.is_array()) throw SpecError(where, "expected an array");
  return j;
}

mpq_class parse_rational(const json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) return mpq_class(j.get<long>());
    if (j.is_string()) {
      mpq_class q(j.get<std::string>());
      if (q.get_den() == 0) throw SpecError(where, "zero denominator");
      q.canonicalize();
      return q;
    }
  } catch (const std::invalid_argument&) {
    throw SpecError(where, "not a rational number: " + j.dump());
  }
  throw SpecError(where, "expected a rational as an integer or an \"a/b\" string");
}

std::size_t group_element(const GroupData& G, const json& j, const std::string& where) {
  if (j.is_number_integer()) {
    long v = j.get<long>();
    if (v < 0 || static_cast<std::size_t>(v) >= G.order) throw SpecError(where, "group element out of range");
    return static_cast<std::size_t>(v);
  }
  const std::string label = need_string(j, where);
  for (std::size_t g = 0; g < G.order; ++g)
    if (G.labels[g] == label) return g;
  throw SpecError(where, "unknown group element \"" + label + "\"");
}

GroupData parse_group(const json& j, const Field& F, const std::string& where) {
  const json& gj = need(j, "group", where);
  const std::string gw = at(where, "group");
  const std::string kind = need_string(need(gj, "kind", gw), at(gw, "kind"));
  GroupData G;
  long u = 0;
  if (kind == "cyclic") {
    long n = need_int(need(gj, "order", gw), at(gw, "order"));
    if (n <= 0) throw SpecError(at(gw, "order"), "order must be positive");
    G = GroupData::cyclic(static_cast<std::size_t>(n));
  } else if (kind == "gh4") {
    u = need_int(need(gj, "u", gw), at(gw, "u"));
    if (u <= 0) throw SpecError(at(gw, "u"), "u must be positive");
    G = GroupData::gh4(static_cast<std::size_t>(u));
  } else if (kind == "table") {
    const json& tj = need_array(need(gj, "table", gw), at(gw, "table"));
    std::vector<std::vector<std::size_t>> table;
    for (std::size_t r = 0; r < tj.size(); ++r) {
      std::vector<std::size_t> row;
      for (std::size_t c = 0; c < need_array(tj[r], at(at(gw, "table"), r)).size(); ++c)
        row.push_back(static_cast<std::size_t>(need_int(tj[r][c], at(at(at(gw, "table"), r), c))));
      table.push_back(std::move(row));
    }
    if (gj.contains("order") && need_int(gj["order"], at(gw, "order")) != static_cast<long>(table.size()))
      throw SpecError(at(gw, "order"), "order does not match the table");
    std::vector<std::string> labels;
    if (gj.contains("labels"))
      for (std::size_t i = 0; i < need_array(gj["labels"], at(gw, "labels")).size(); ++i)
        labels.push_back(need_string(gj["labels"][i], at(at(gw, "labels"), i)));
    else
      for (std::size_t i = 0; i < table.size(); ++i) labels.push_back("e" + std::to_string(i));
    G = GroupData::from_table(std::move(labels), std::move(table));
  } else {
    throw SpecError(at(gw, "kind"), "unknown group kind \"" + kind + "\"");
  }
  if (j.contains("character")) {
    const json& cj = j["character"];
    const std::string cw = at(where, "character");
    if (cj.contains("values")) {
      std::vector<Scalar> vals;
      const json& vj = need_array(cj["values"], at(cw, "values"));
      for (std::size_t i = 0; i < vj.size(); ++i) vals.push_back(parse_scalar(F, vj[i], at(at(cw, "values"), i)));
      G.set_character(std::move(vals));
    } else if (kind == "cyclic") {
      G.set_character(cyclic_character(G, parse_scalar(F, need(cj, "g", cw), at(cw, "g"))));
    } else if (kind == "gh4") {
      G.set_character(gh4_character(G, static_cast<std::size_t>(u), parse_scalar(F, need(cj, "g", cw), at(cw, "g")),
                                    parse_scalar(F, need(cj, "h", cw), at(cw, "h"))));
    } else {
      throw SpecError(cw, "table groups need explicit character values");
    }
  }
  return G;
}

}  // namespace

Scalar parse_scalar(const Field& F, const json& j, const std::string& where) {
  if (F.kind() == FieldKind::Extension && j.is_array()) {
    std::vector<mpq_class> c;
    for (std::size_t i = 0; i < j.size(); ++i) c.push_back(parse_rational(j[i], at(where, i)));
    if (static_cast<int>(c.size()) > F.degree()) throw SpecError(where, "too many coefficients for the field");
    return F.element(std::move(c));
  }
  return F.from_rational(parse_rational(j, where));
}

json encode_scalar(const Scalar& s) {
  const Field* F = s.field();
  if (!F) return "0";
  if (F->kind() == FieldKind::PrimeField) return s.coords()[0].get_num().get_si();
  if (F->kind() == FieldKind::Rationals) return s.coords()[0].get_str();
  json arr = json::array();
  for (int i = 0; i < F->degree(); ++i)
    arr.push_back(i < static_cast<int>(s.coords().size()) ? s.coords()[static_cast<std::size_t>(i)].get_str() : "0");
  return arr;
}

json encode_vec(const Vec& v) {
  json arr = json::array();
  for (const auto& s : v) arr.push_back(encode_scalar(s));
  return arr;
}

KElem parse_kelem(const Field& F, std::size_t dim, const json& j, const std::string& where) {
  need_array(j, where);
  if (j.size() != dim) throw SpecError(where, "expected " + std::to_string(dim) + " coordinates");
  KElem v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(parse_scalar(F, j[i], at(where, i)));
  return v;
}

const Field& parse_field(const json& j, const std::string& where) {
  const std::string kind = need_string(need(j, "kind", where), at(where, "kind"));
  if (kind == "Q") return Field::rationals();
  if (kind == "Fp") {
    long p = need_int(need(j, "p", where), at(where, "p"));
    try {
      return Field::prime_field(p);
    } catch (const InputError& e) {
      throw SpecError(at(where, "p"), e.what());
    }
  }
  if (kind == "ext") {
    const json& mj = need_array(need(j, "minpoly", where), at(where, "minpoly"));
    std::vector<mpq_class> mp;
    for (std::size_t i = 0; i < mj.size(); ++i) mp.push_back(parse_rational(mj[i], at(at(where, "minpoly"), i)));
    const std::string sym = j.contains("symbol") ? need_string(j["symbol"], at(where, "symbol")) : "t";
    const long base = j.contains("p") ? need_int(j["p"], at(where, "p")) : 0;
    try {
      return Field::extension(std::move(mp), sym, base);
    } catch (const InputError& e) {
      throw SpecError(at(where, "minpoly"), e.what());
    }
  }
  throw SpecError(at(where, "kind"), "unknown field kind \"" + kind + "\"");
}

std::optional<std::size_t> find_g1(const GroupData& G, const Field& F, int n) {
  if (!G.has_character()) return std::nullopt;
  for (auto z : G.center)
    if (F.multiplicative_order(G.character[z]) == n) return z;
  return std::nullopt;
}

InstanceSpec parse_spec(const json& j) {
  if (!j.is_object()) throw SpecError("", "spec must be a JSON object");
  InstanceSpec s;
  s.source = j;
  const Field& F = parse_field(need(j, "field", ""));
  s.field = &F;

  const json& kj = need(j, "K", "");
  const std::string kind = need_string(need(kj, "kind", "/K"), "/K/kind");
  if (kind == "table") {
    const long d = need_int(need(kj, "dim", "/K"), "/K/dim");
    if (d <= 0) throw SpecError("/K/dim", "dimension must be positive");
    const auto dim = static_cast<std::size_t>(d);
    std::vector<std::string> names;
    if (kj.contains("basis"))
      for (std::size_t i = 0; i < need_array(kj["basis"], "/K/basis").size(); ++i)
        names.push_back(need_string(kj["basis"][i], at("/K/basis", i)));
    else
      for (std::size_t i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i));
    if (names.size() != dim) throw SpecError("/K/basis", "basis length differs from dim");
    KElem unit = parse_kelem(F, dim, need(kj, "unit", "/K"), "/K/unit");
    std::vector<AlgebraK::Entry> entries;
    const json& mj = need_array(need(kj, "mul", "/K"), "/K/mul");
    for (std::size_t e = 0; e < mj.size(); ++e) {
      const std::string w = at("/K/mul", e);
      if (!mj[e].is_array() || mj[e].size() != 4) throw SpecError(w, "expected [i, j, k, scalar]");
      std::size_t idx[3];
      for (std::size_t t = 0; t < 3; ++t) {
        long v = need_int(mj[e][t], at(w, t));
        if (v < 0 || v >= d) throw SpecError(at(w, t), "basis index out of range");
        idx[t] = static_cast<std::size_t>(v);
      }
      entries.push_back({idx[0], idx[1], idx[2], parse_scalar(F, mj[e][3], at(w, 3))});
    }
    s.K = AlgebraK(F, std::move(names), std::move(unit), entries);
  } else if (kind == "group") {
    s.group = parse_group(kj, F, "/K");
    s.K = group_algebra(*s.group, F);
  } else if (kind == "quaternion") {
    QuaternionData q{parse_scalar(F, need(kj, "cos", "/K"), "/K/cos"), parse_scalar(F, need(kj, "sin", "/K"), "/K/sin"),
                     parse_scalar(F, need(kj, "cos_half", "/K"), "/K/cos_half"),
                     parse_scalar(F, need(kj, "sin_half", "/K"), "/K/sin_half")};
    try {
      auto [H, rot] = quaternion_algebra(F, q);
      s.K = std::move(H);
      s.alpha = std::move(rot);
    } catch (const InputError& e) {
      throw SpecError("/K", e.what());
    }
    s.quaternion = q;
  } else {
    throw SpecError("/K/kind", "unknown algebra kind \"" + kind + "\"");
  }
  const std::size_t dim = s.K.dim();

  const json& aj = need(j, "alpha", "");
  const std::string akind = need_string(need(aj, "kind", "/alpha"), "/alpha/kind");
  if (akind == "character") {
    if (!s.group || !s.group->has_character()) throw SpecError("/alpha", "character twist needs a group with a character");
    s.alpha = endo_from_character(*s.group);
  } else if (akind == "rotation") {
    if (!s.quaternion) throw SpecError("/alpha", "rotation needs the quaternion algebra");
  } else if (akind == "identity") {
    s.alpha = Endo::identity(s.K);
  } else if (akind == "matrix" || akind == "images") {
    const std::string key = akind == "matrix" ? "rows" : "images";
    const json& rj = need_array(need(aj, key, "/alpha"), at("/alpha", key));
    if (rj.size() != dim) throw SpecError(at("/alpha", key), "expected " + std::to_string(dim) + " entries");
    std::vector<Vec> vecs;
    for (std::size_t i = 0; i < dim; ++i) vecs.push_back(parse_kelem(F, dim, rj[i], at(at("/alpha", key), i)));
    Mat m = akind == "matrix" ? Mat::from_rows(F, dim, vecs) : Mat::from_columns(F, dim, vecs);
    s.alpha = Endo(std::move(m));
  } else {
    throw SpecError("/alpha/kind", "unknown alpha kind \"" + akind + "\"");
  }

  const json& fj = need(j, "f", "");
  const long n = need_int(need(fj, "n", "/f"), "/f/n");
  if (n < 2) throw SpecError("/f/n", "n must be at least 2");
  const json& cj = need_array(need(fj, "coeffs", "/f"), "/f/coeffs");
  if (cj.size() != static_cast<std::size_t>(n)) throw SpecError("/f/coeffs", "expected n coefficients");
  for (std::size_t i = 0; i < cj.size(); ++i) s.lambdas.push_back(parse_kelem(F, dim, cj[i], at("/f/coeffs", i)));

  if (j.contains("max_degree")) {
    long D = need_int(j["max_degree"], "/max_degree");
    if (D < 0 || D > 64) throw SpecError("/max_degree", "max_degree must be in 0..64");
    s.max_degree = static_cast<int>(D);
  }

  if (j.contains("options")) {
    const json& oj = j["options"];
    if (!oj.is_object()) throw SpecError("/options", "expected an object");
    if (oj.contains("oracle_bound")) {
      long b = need_int(oj["oracle_bound"], "/options/oracle_bound");
      if (b < 0 || b > 5) throw SpecError("/options/oracle_bound", "oracle bound must be in 0..5");
      s.oracle_bound = static_cast<int>(b);
    }
    if (oj.contains("witness_candidates")) {
      const json& wj = need_array(oj["witness_candidates"], "/options/witness_candidates");
      for (std::size_t i = 0; i < wj.size(); ++i)
        s.witness_candidates.push_back(parse_kelem(F, dim, wj[i], at("/options/witness_candidates", i)));
    }
    if (oj.contains("checks")) {
      const json& chj = need_array(oj["checks"], "/options/checks");
      for (std::size_t i = 0; i < chj.size(); ++i) s.checks.push_back(need_string(chj[i], at("/options/checks", i)));
    }
    if (oj.contains("g1")) {
      if (!s.group) throw SpecError("/options/g1", "g1 needs a group algebra");
      s.g1 = group_element(*s.group, oj["g1"], "/options/g1");
    }
    if (oj.contains("rank_one")) {
      if (!s.group) throw SpecError("/options/rank_one", "rank-one data needs a group algebra");
      const json& rj = oj["rank_one"];
      s.rank_one = RankOneSpec{group_element(*s.group, need(rj, "g1", "/options/rank_one"), "/options/rank_one/g1"),
                               parse_scalar(F, need(rj, "xi", "/options/rank_one"), "/options/rank_one/xi")};
    }
    if (oj.contains("compare_f")) {
      const json& cf = need_array(oj["compare_f"], "/options/compare_f");
      if (cf.size() != static_cast<std::size_t>(n)) throw SpecError("/options/compare_f", "expected n coefficients");
      std::vector<KElem> l;
      for (std::size_t i = 0; i < cf.size(); ++i) l.push_back(parse_kelem(F, dim, cf[i], at("/options/compare_f", i)));
      s.compare_f = std::move(l);
    }
    if (oj.contains("generators")) {
      const json& gj = need_array(oj["generators"], "/options/generators");
      for (std::size_t i = 0; i < gj.size(); ++i) {
        const std::string w = at("/options/generators", i);
        GeneratorSpec g;
        g.name = need_string(need(gj[i], "name", w), at(w, "name"));
        g.degree = static_cast<int>(need_int(need(gj[i], "degree", w), at(w, "degree")));
        g.value = parse_kelem(F, dim, need(gj[i], "value", w), at(w, "value"));
        g.power = gj[i].contains("power") ? static_cast<int>(need_int(gj[i]["power"], at(w, "power"))) : 0;
        if (g.degree < 0) throw SpecError(at(w, "degree"), "degree must be non-negative");
        if (g.power < 0 || g.power >= n) throw SpecError(at(w, "power"), "power must be below n");
        s.generators.push_back(std::move(g));
      }
    }
  }
  if (s.group && !s.g1) s.g1 = find_g1(*s.group, F, static_cast<int>(n));
  return s;
}

InstanceSpec parse_spec_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecError("", std::string("JSON parse error at byte ") + std::to_string(e.byte) + ": " + e.what());
  }
  return parse_spec(j);
}

InstanceSpec parse_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read spec file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_spec_text(ss.str());
}

Instance make_instance(const InstanceSpec& spec) {
  Instance inst;
  inst.name = spec.source.contains("name") && spec.source["name"].is_string()
                  ? spec.source["name"].get<std::string>()
                  : "instance";
  inst.A = std::make_shared<const MonogenicAlgebra>(spec.K, spec.alpha, spec.lambdas);
  inst.group = spec.group;
  inst.g1 = spec.g1;
  inst.quaternion = spec.quaternion;
  if (spec.g1) inst.witness_candidates.push_back(inst.A->K().basis_vec(*spec.g1));
  return inst;
}

}  // namespace monogen::cli
