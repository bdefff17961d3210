#include "runner.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>

#include <spdlog/spdlog.h>

namespace monogen::cli {

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "witness",           "cochains",           "differentials",
      "lambda-n-identity", "witness-cohomology", "cyclic-group-cohomology",
      "diagonal-alpha",    "odd-cups",           "identity-alpha-complex",
      "identity-alpha-cohomology",               "class-basis",
      "group-algebra",     "class-periods",      "periodicity",
      "presentation",      "generators",         "hopf-rank-one",
      "quaternion",        "even-brackets",      "bracket-closed",
      "cup-commutativity", "f-independence"};
  return names;
}

bool is_check_name(const std::string& name) {
  const auto& n = check_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

namespace {

ValidationItem item(std::string name, const CheckReport& r) { return {std::move(name), r.ok, r.failure}; }

std::string join(const std::vector<std::size_t>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

CheckResult missing(const std::string& name, const std::string& what) {
  CheckResult r;
  r.check = name;
  r.add_hypothesis(what, false);
  return r;
}

}  // namespace

std::vector<ValidationItem> validate_spec(const InstanceSpec& spec, int max_degree) {
  std::vector<ValidationItem> out;
  out.push_back(item("algebra", algebra_validate(spec.K)));
  out.push_back(item("alpha", endo_validate(spec.K, spec.alpha)));
  if (!out.back().ok) return out;
  out.push_back(item("validate_f", validate_f(spec.K, spec.alpha, spec.lambdas)));
  if (!out[0].ok || !out.back().ok) return out;
  const MonogenicAlgebra A(spec.K, spec.alpha, spec.lambdas);
  out.push_back(item("tf-commutation", tf_commutation_check(A)));
  out.push_back(item("f-normality", f_normality_check(A)));
  out.push_back(item("contraction", contraction_check(A, resolution_maps(A, max_degree))));
  return out;
}

int default_max_degree(const std::optional<long>& v) {
  if (v && *v <= 6) return static_cast<int>(2 * *v + 2);
  return 6;
}

Session::Session(InstanceSpec spec, const RunOptions& opts) : spec_(std::move(spec)) {
  inst_ = make_instance(spec_);
  inst_.witness_candidates.insert(inst_.witness_candidates.begin(), spec_.witness_candidates.begin(),
                                  spec_.witness_candidates.end());
  v_ = character_power_order(inst_.alg());
  D_ = opts.max_degree ? *opts.max_degree : spec_.max_degree ? *spec_.max_degree : default_max_degree(v_);
  if (D_ < 0 || D_ > 64) throw InputError("max degree must be in 0..64");
  bound_ = opts.oracle_bound ? *opts.oracle_bound : spec_.oracle_bound ? *spec_.oracle_bound : std::min(D_, 5);
  if (bound_ < 0 || bound_ > 5) throw InputError("oracle bound must be in 0..5");
  bound_ = std::min(bound_, D_);
  for (const auto& w : opts.witness)
    if (w.size() != inst_.alg().dim_k()) throw InputError("--witness: wrong number of coordinates");
  spdlog::debug("building the small complex through degree {}", D_ + 1);
  P_ = std::make_unique<Pipeline>(inst_.alg(), D_);
  w_ = witness_for(inst_, opts.witness);
}

const Products& Session::products() {
  if (!X_) {
    spdlog::debug("building comparison maps through degree {}", bound_);
    X_ = std::make_unique<Products>(inst_.alg(), bound_);
  }
  return *X_;
}

std::vector<std::string> Session::selected_checks(const RunOptions& opts) const {
  if (!opts.which.empty()) return opts.which;
  if (!spec_.checks.empty()) return spec_.checks;
  std::vector<std::string> out;
  for (const auto& n : check_names()) {
    const bool group_only = n == "class-basis" || n == "group-algebra" || n == "class-periods" ||
                            n == "presentation";
    if (group_only && !spec_.group) continue;
    if (n == "generators" && spec_.generators.empty()) continue;
    if (n == "hopf-rank-one" && !spec_.rank_one) continue;
    if (n == "quaternion" && !spec_.quaternion) continue;
    if (n == "f-independence" && !spec_.compare_f) continue;
    out.push_back(n);
  }
  return out;
}

CheckResult Session::run_one(const std::string& name) {
  const MonogenicAlgebra& A = inst_.alg();
  const Pipeline& P = *P_;
  if (name == "witness") return witness_check(A, w_);
  if (name == "cochains") return cochain_shape_check(P, w_);
  if (name == "differentials") return differentials_check(P, w_);
  if (name == "lambda-n-identity") return lambda_n_identity_check(P);
  if (name == "witness-cohomology") return witness_cohomology_check(P, w_);
  if (name == "cyclic-group-cohomology") return cyclic_group_cohomology_check(P, w_);
  if (name == "diagonal-alpha") return diagonal_alpha_check(P, w_);
  if (name == "odd-cups") return odd_cup_check(P, products(), w_);
  if (name == "identity-alpha-complex") return identity_alpha_complex_check(P);
  if (name == "identity-alpha-cohomology") return identity_alpha_cohomology_check(P);
  if (name == "periodicity") return periodicity_check(P, w_);
  if (name == "even-brackets") return even_bracket_check(P, products());
  if (name == "bracket-closed") return bracket_closed_check(P, products(), w_);
  if (name == "cup-commutativity") return cup_commutativity_check(P, products());
  if (name == "presentation") {
    if (!spec_.group) return missing(name, "group algebra given");
    return presentation_check(P, products());
  }
  if (name == "class-basis") {
    if (!spec_.group) return missing(name, "group algebra given");
    return class_basis_check(A, *spec_.group, resolution_twist(D_ + 1, A.n()));
  }
  if (name == "group-algebra") {
    if (!spec_.group) return missing(name, "group algebra given");
    return group_algebra_check(P, *spec_.group, spec_.g1);
  }
  if (name == "class-periods") {
    if (!spec_.group) return missing(name, "group algebra given");
    if (!v_) return missing(name, "alpha^n has finite order");
    return class_period_check(*spec_.group, A.n(), *v_);
  }
  if (name == "generators") {
    if (spec_.generators.empty()) return missing(name, "generators given");
    std::vector<Generator> gens;
    for (const auto& g : spec_.generators) gens.push_back({g.name, g.degree, A.embed(g.value, g.power)});
    return generators_check(P, products(), gens);
  }
  if (name == "hopf-rank-one") {
    if (!spec_.group || !spec_.rank_one) return missing(name, "rank-one data given");
    return rank_one_hopf_check(*spec_.group, A.field(), spec_.rank_one->g1, A.n(), spec_.rank_one->xi, D_);
  }
  if (name == "quaternion") {
    if (!spec_.quaternion) return missing(name, "quaternion algebra given");
    return quaternion_check(P, *spec_.quaternion);
  }
  if (name == "f-independence") {
    if (!spec_.compare_f) return missing(name, "second f given");
    const CheckReport vf = validate_f(spec_.K, spec_.alpha, *spec_.compare_f);
    if (!vf.ok) {
      CheckResult r = missing(name, "second f valid");
      r.note("validate_f", vf.failure);
      return r;
    }
    InstanceSpec other = spec_;
    other.lambdas = *spec_.compare_f;
    Instance inst2 = make_instance(other);
    inst2.witness_candidates = inst_.witness_candidates;
    const Pipeline P2(inst2.alg(), D_);
    const Products X2(inst2.alg(), bound_);
    return f_independence_check(P, products(), P2, X2, w_, witness_for(inst2));
  }
  throw InputError("unknown check \"" + name + "\"");
}

std::vector<CheckResult> Session::run_checks(const std::vector<std::string>& names) {
  std::vector<CheckResult> out;
  for (const auto& n : names) {
    if (!is_check_name(n)) throw InputError("unknown check \"" + n + "\"");
    spdlog::debug("running check {}", n);
    CheckResult r = run_one(n);
    if (r.generic_table.empty() && !r.ran) r.generic_table = P_->dims();
    out.push_back(std::move(r));
  }
  return out;
}

// ---- JSON -----------------------------------------------------------------------

json instance_echo(const Session& s) { return s.spec().source; }

json validation_json(const std::vector<ValidationItem>& items) {
  json arr = json::array();
  for (const auto& i : items) {
    json j;
    j["name"] = i.name;
    j["ok"] = i.ok;
    if (!i.ok) j["failure"] = i.failure;
    arr.push_back(std::move(j));
  }
  return arr;
}

namespace {

json resolved_json(const Session& s) {
  const MonogenicAlgebra& A = s.instance().alg();
  json j;
  j["max_degree"] = s.max_degree();
  j["oracle_bound"] = s.oracle_bound();
  j["v"] = s.v() ? json(*s.v()) : json(nullptr);
  if (s.witness() && s.witness()->ok()) {
    j["witness"] = encode_vec(s.witness()->value);
    j["witness_text"] = A.K().format(s.witness()->value);
  } else {
    j["witness"] = nullptr;
    j["witness_text"] = "none";
  }
  if (s.spec().g1) j["g1"] = s.spec().group->labels[*s.spec().g1];
  return j;
}

}  // namespace

json cohomology_json(const Session& s) {
  const Pipeline& P = s.pipeline();
  const MonogenicAlgebra& A = P.algebra();
  json j;
  j["max_degree"] = P.max_degree();
  j["dims"] = P.dims();
  j["basis_labels"] = A.algebra().basis_names();
  json degs = json::array();
  for (int r = 0; r <= P.max_degree(); ++r) {
    const CohomologyGroup& H = P.group(r);
    json d;
    d["degree"] = r;
    d["dim_cochain"] = P.complex().dim(r);
    d["twist_exponent"] = P.complex().twist[static_cast<std::size_t>(r)];
    d["rank_in"] = H.rank_in;
    d["rank_out"] = H.rank_out;
    d["dim_H"] = H.dim;
    json reps = json::array();
    for (const auto& rep : P.representatives(r)) {
      json e;
      e["coords"] = encode_vec(rep);
      e["text"] = A.format(rep);
      reps.push_back(std::move(e));
    }
    d["representatives"] = std::move(reps);
    degs.push_back(std::move(d));
  }
  j["degrees"] = std::move(degs);
  return j;
}

json product_entries_json(const std::vector<ProductEntry>& entries) {
  json arr = json::array();
  for (const auto& e : entries) {
    json j;
    j["deg_a"] = e.deg_a;
    j["deg_b"] = e.deg_b;
    j["basis_index_a"] = e.index_a;
    j["basis_index_b"] = e.index_b;
    j["result_class_coords"] = encode_vec(e.result);
    j["source"] = e.source;
    j["agree"] = e.agree;
    arr.push_back(std::move(j));
  }
  return arr;
}

json check_json(const CheckResult& c, const Session&) {
  json j;
  j["check"] = c.check;
  json hyp = json::array();
  for (const auto& h : c.hypotheses) hyp.push_back(json{{"name", h.name}, {"holds", h.holds}});
  j["hypotheses"] = std::move(hyp);
  j["closed_table"] = c.closed_table;
  j["generic_table"] = c.generic_table;
  j["ran"] = c.ran;
  j["match"] = c.match;
  j["mismatches"] = c.mismatches;
  json notes = json::object();
  for (const auto& [k, v] : c.notes) notes[k] = v;
  j["notes"] = std::move(notes);
  return j;
}

// ---- text and CSV ----------------------------------------------------------------

void write_validation_text(std::ostream& os, const std::vector<ValidationItem>& items) {
  os << "validation\n";
  for (const auto& i : items)
    os << "  " << std::left << std::setw(16) << i.name << (i.ok ? "ok" : "FAIL: " + i.failure) << "\n";
}

void write_cohomology_text(std::ostream& os, const Session& s) {
  const Pipeline& P = s.pipeline();
  os << "cohomology (max degree " << P.max_degree() << ")\n";
  os << "  " << std::right << std::setw(6) << "degree" << std::setw(10) << "dim C^r" << std::setw(8) << "twist"
     << std::setw(9) << "rank in" << std::setw(10) << "rank out" << std::setw(7) << "dim H"
     << "  representatives\n";
  for (int r = 0; r <= P.max_degree(); ++r) {
    const CohomologyGroup& H = P.group(r);
    std::string reps;
    for (const auto& rep : P.representatives(r)) reps += (reps.empty() ? "" : "; ") + P.algebra().format(rep);
    os << "  " << std::setw(6) << r << std::setw(10) << P.complex().dim(r) << std::setw(8)
       << P.complex().twist[static_cast<std::size_t>(r)] << std::setw(9) << H.rank_in << std::setw(10) << H.rank_out
       << std::setw(7) << H.dim << "  " << reps << "\n";
  }
}

namespace {

std::string vec_text(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
  return s + ")";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

}  // namespace

void write_products_text(std::ostream& os, const std::string& title, const std::vector<ProductEntry>& e) {
  os << title << "\n";
  os << "  " << std::right << std::setw(5) << "deg a" << std::setw(6) << "deg b" << std::setw(4) << "i"
     << std::setw(4) << "j" << "  " << std::left << std::setw(15) << "source" << std::setw(7) << "agree"
     << "class\n";
  for (const auto& x : e)
    os << "  " << std::right << std::setw(5) << x.deg_a << std::setw(6) << x.deg_b << std::setw(4) << x.index_a
       << std::setw(4) << x.index_b << "  " << std::left << std::setw(15) << x.source << std::setw(7)
       << (x.agree ? "yes" : "NO") << vec_text(x.result) << "\n";
}

void write_checks_text(std::ostream& os, const std::vector<CheckResult>& checks) {
  os << "checks\n";
  for (const auto& c : checks) {
    const char* status = !c.ran ? "skipped" : c.match ? "match" : "MISMATCH";
    os << "  " << std::left << std::setw(27) << c.check << std::setw(10) << status;
    std::string hyp;
    for (const auto& h : c.hypotheses) hyp += (hyp.empty() ? "" : ", ") + h.name + (h.holds ? "" : " (fails)");
    os << (hyp.empty() ? "" : "[" + hyp + "]") << "\n";
    if (!c.closed_table.empty()) os << "      closed:  " << join(c.closed_table, " ") << "\n";
    if (!c.generic_table.empty()) os << "      generic: " << join(c.generic_table, " ") << "\n";
    for (const auto& [k, v] : c.notes) os << "      " << k << ": " << v << "\n";
    for (const auto& m : c.mismatches) os << "      ! " << m << "\n";
  }
}

void write_validation_csv(std::ostream& os, const std::vector<ValidationItem>& items) {
  os << "validation,ok,failure\n";
  for (const auto& i : items) os << i.name << "," << (i.ok ? 1 : 0) << "," << csv_field(i.failure) << "\n";
}

void write_cohomology_csv(std::ostream& os, const Session& s) {
  const Pipeline& P = s.pipeline();
  os << "degree,dim_cochain,twist_exponent,rank_in,rank_out,dim_H\n";
  for (int r = 0; r <= P.max_degree(); ++r) {
    const CohomologyGroup& H = P.group(r);
    os << r << "," << P.complex().dim(r) << "," << P.complex().twist[static_cast<std::size_t>(r)] << ","
       << H.rank_in << "," << H.rank_out << "," << H.dim << "\n";
  }
}

void write_products_csv(std::ostream& os, const std::string& table, const std::vector<ProductEntry>& e) {
  os << "table,deg_a,deg_b,basis_index_a,basis_index_b,source,agree,result_class_coords\n";
  for (const auto& x : e) {
    std::string coords;
    for (std::size_t i = 0; i < x.result.size(); ++i) coords += (i ? " " : "") + x.result[i].to_string();
    os << table << "," << x.deg_a << "," << x.deg_b << "," << x.index_a << "," << x.index_b << "," << x.source
       << "," << (x.agree ? 1 : 0) << "," << csv_field(coords) << "\n";
  }
}

void write_checks_csv(std::ostream& os, const std::vector<CheckResult>& checks) {
  os << "check,hypotheses_hold,ran,match,closed_table,generic_table,mismatches\n";
  for (const auto& c : checks)
    os << c.check << "," << (c.hypotheses_hold() ? 1 : 0) << "," << (c.ran ? 1 : 0) << "," << (c.match ? 1 : 0)
       << "," << join(c.closed_table, " ") << "," << join(c.generic_table, " ") << "," << c.mismatches.size()
       << "\n";
}

// ---- verbs ---------------------------------------------------------------------

int run_verb(const std::string& verb, const std::string& spec_path, const RunOptions& opts, Format format,
             std::ostream& out, std::ostream& err) {
  using clock = std::chrono::steady_clock;
  const bool all = verb == "report";
  const bool do_validate = all || verb == "validate";
  const bool do_cohomology = all || verb == "cohomology";
  const bool do_products = all || verb == "products";
  const bool do_checks = all || verb == "theorems";
  if (!do_validate && !do_cohomology && !do_products && !do_checks) {
    err << "error: unknown verb \"" << verb << "\"\n";
    return 2;
  }
  for (const auto& w : opts.which)
    if (!is_check_name(w)) {
      err << "error: unknown check \"" << w << "\" for --which\n";
      return 2;
    }
  json timing = json::object();
  auto t0 = clock::now();
  auto lap = [&](const char* key) {
    const auto t1 = clock::now();
    timing[key] = std::chrono::duration<double, std::milli>(t1 - t0).count();
    t0 = t1;
  };
  try {
    InstanceSpec spec = parse_spec_file(spec_path);
    for (const auto& c : spec.checks)
      if (!is_check_name(c)) throw SpecError("/options/checks", "unknown check \"" + c + "\"");
    RunOptions ropts = opts;
    if (!opts.witness_json.empty()) {
      json wj;
      try {
        wj = json::parse(opts.witness_json);
      } catch (const json::parse_error& e) {
        throw InputError(std::string("--witness: ") + e.what());
      }
      if (!wj.is_array()) throw InputError("--witness: expected a JSON array");
      const bool nested = !wj.empty() && wj[0].is_array() && spec.field->kind() != FieldKind::Extension;
      const bool nested_ext = !wj.empty() && wj[0].is_array() && !wj[0].empty() && wj[0][0].is_array();
      if (nested || nested_ext)
        for (std::size_t i = 0; i < wj.size(); ++i)
          ropts.witness.push_back(parse_kelem(*spec.field, spec.K.dim(), wj[i], "--witness/" + std::to_string(i)));
      else
        ropts.witness.push_back(parse_kelem(*spec.field, spec.K.dim(), wj, "--witness"));
    }
    lap("parse");

    // Validation first: the algebra cannot be built from an invalid f.
    const int vdeg = opts.max_degree ? *opts.max_degree : spec.max_degree ? *spec.max_degree : 6;
    std::vector<ValidationItem> validation;
    if (do_validate) {
      validation = validate_spec(spec, vdeg);
    } else {
      validation.push_back(item("algebra", algebra_validate(spec.K)));
      validation.push_back(item("alpha", endo_validate(spec.K, spec.alpha)));
      validation.push_back(item("validate_f", validate_f(spec.K, spec.alpha, spec.lambdas)));
    }
    lap("validate");
    bool valid = std::all_of(validation.begin(), validation.end(), [](const auto& i) { return i.ok; });
    for (const auto& i : validation)
      if (!i.ok) err << "validation failed: " << i.name << ": " << i.failure << "\n";

    json report;
    report["instance"] = spec.source;
    if (!valid) {
      report["validation"] = validation_json(validation);
      if (format == Format::Json) out << report.dump(2) << "\n";
      else if (format == Format::Text) write_validation_text(out, validation);
      else write_validation_csv(out, validation);
      return 1;
    }
    if (verb == "validate") {
      report["validation"] = validation_json(validation);
      if (opts.timing) report["timing_ms"] = timing;
      if (format == Format::Json) out << report.dump(2) << "\n";
      else if (format == Format::Text) write_validation_text(out, validation);
      else write_validation_csv(out, validation);
      return 0;
    }

    Session s(std::move(spec), ropts);
    lap("cohomology");
    report["resolved"] = resolved_json(s);
    if (do_validate) report["validation"] = validation_json(validation);
    int code = 0;
    std::vector<ProductEntry> cups, brackets;
    if (do_products) {
      cups = cup_table(s.pipeline(), s.products());
      brackets = bracket_table(s.pipeline(), s.products(), s.witness());
      lap("products");
      auto bad = [](const ProductEntry& e) { return !e.agree; };
      if (std::any_of(cups.begin(), cups.end(), bad) || std::any_of(brackets.begin(), brackets.end(), bad))
        code = 1;
    }
    std::vector<CheckResult> checks;
    if (do_checks) {
      checks = s.run_checks(s.selected_checks(ropts));
      lap("checks");
      for (const auto& c : checks)
        if (c.ran && !c.match) code = 1;
    }

    if (format == Format::Json) {
      if (do_cohomology || do_checks) report["cohomology"] = cohomology_json(s);
      if (do_products) {
        report["cup_table"] = product_entries_json(cups);
        report["bracket_table"] = product_entries_json(brackets);
      }
      if (do_checks) {
        json arr = json::array();
        for (const auto& c : checks) arr.push_back(check_json(c, s));
        report["checks"] = std::move(arr);
      }
      if (opts.timing) report["timing_ms"] = timing;
      out << report.dump(2) << "\n";
    } else if (format == Format::Text) {
      const auto& r = report["resolved"];
      out << "max degree " << s.max_degree() << ", oracle bound " << s.oracle_bound() << ", witness "
          << r["witness_text"].get<std::string>() << "\n";
      if (do_validate) write_validation_text(out, validation);
      if (do_cohomology || do_checks) write_cohomology_text(out, s);
      if (do_products) {
        write_products_text(out, "cup products", cups);
        write_products_text(out, "brackets", brackets);
      }
      if (do_checks) write_checks_text(out, checks);
    } else {
      if (do_validate) write_validation_csv(out, validation);
      if (do_cohomology || do_checks) write_cohomology_csv(out, s);
      if (do_products) {
        write_products_csv(out, "cup", cups);
        write_products_csv(out, "bracket", brackets);
      }
      if (do_checks) write_checks_csv(out, checks);
    }
    return code;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const MathError& e) {
    err << "math error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace monogen::cli
