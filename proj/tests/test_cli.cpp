#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "runner.hpp"

using namespace monogen;
using namespace monogen::cli;

namespace {

std::string spec_path(const std::string& name) { return std::string(MONOGEN_SPEC_DIR) + "/" + name + ".json"; }

struct Run {
  int code = 0;
  std::string out, err;
  json report() const { return json::parse(out); }
};

Run run(const std::string& verb, const std::string& spec, RunOptions opts = {}, Format fmt = Format::Json) {
  std::ostringstream out, err;
  Run r;
  r.code = run_verb(verb, spec, opts, fmt, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::size_t> dims_of(const json& report) {
  return report["cohomology"]["dims"].get<std::vector<std::size_t>>();
}

const json& find_check(const json& report, const std::string& name) {
  for (const auto& c : report["checks"])
    if (c["check"] == name) return c;
  FAIL("check " << name << " missing from the report");
  throw std::logic_error("unreachable");
}

std::string spec_error(const std::string& text) {
  try {
    parse_spec_text(text);
  } catch (const SpecError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("every shipped spec parses", "[cli]") {
  for (const char* name : {"sweedler", "taft3", "gh4_u3", "truncated_x2", "truncated_x2_minus_1", "truncated_gf3_x3",
                           "quaternion_pi_rho1", "quaternion_pi_rho0", "swap", "hopf_c4_sign", "hopf_c8_i",
                           "taft3_second_f", "sweedler_bad_f"}) {
    INFO(name);
    const InstanceSpec s = parse_spec_file(spec_path(name));
    CHECK(s.lambdas.size() >= 2);
    CHECK(s.K.dim() == s.alpha.matrix().rows());
  }
  const InstanceSpec gh = parse_spec_file(spec_path("gh4_u3"));
  REQUIRE(gh.g1);
  CHECK(gh.group->labels[*gh.g1] == "h^2");
  CHECK(gh.generators.size() == 4);
  const InstanceSpec c4 = parse_spec_file(spec_path("hopf_c4_sign"));
  CHECK(c4.rank_one->g1 == 1);
  CHECK(c4.rank_one->xi.is_one());
}

TEST_CASE("schema errors carry the offending location", "[cli]") {
  CHECK_THAT(spec_error("[1, 2]"), Catch::Matchers::ContainsSubstring("object"));
  CHECK_THAT(spec_error(R"({"field": {"kind": "Q"}})"), Catch::Matchers::ContainsSubstring("missing key \"K\""));
  CHECK_THAT(spec_error(R"({"field": {"kind": "R"}})"), Catch::Matchers::ContainsSubstring("/field/kind"));
  const std::string base = R"({"field": {"kind": "Q"},
    "K": {"kind": "table", "dim": 1, "unit": [1], "mul": [[0, 0, 0, 1]]},
    "alpha": {"kind": "identity"}, )";
  CHECK_THAT(spec_error(base + R"("f": {"n": 2, "coeffs": [[0], ["1/0"]]}})"),
             Catch::Matchers::ContainsSubstring("/f/coeffs/1/0"));
  CHECK_THAT(spec_error(base + R"("f": {"n": 2, "coeffs": [[0]]}})"),
             Catch::Matchers::ContainsSubstring("/f/coeffs"));
  CHECK_THAT(spec_error(base + R"("f": {"n": 1, "coeffs": [[0]]}})"), Catch::Matchers::ContainsSubstring("/f/n"));
  CHECK_THAT(spec_error(base + R"("f": {"n": 2, "coeffs": [[0], [0, 1]]}})"),
             Catch::Matchers::ContainsSubstring("expected 1 coordinates"));
  CHECK_THAT(spec_error(base + R"("f": {"n": 2, "coeffs": [[0], [0]]}, "options": {"g1": 0}})"),
             Catch::Matchers::ContainsSubstring("/options/g1"));
  CHECK(spec_error(base + R"("f": {"n": 2, "coeffs": [[0], ["-3/6"]]}})").empty());
}

TEST_CASE("validate verb and exit codes", "[cli]") {
  const Run ok = run("validate", spec_path("sweedler"));
  CHECK(ok.code == 0);
  const json rep = ok.report();
  REQUIRE(rep["validation"].size() == 6);
  for (const auto& v : rep["validation"]) CHECK(v["ok"] == true);

  const Run bad = run("validate", spec_path("sweedler_bad_f"));
  CHECK(bad.code == 1);
  CHECK_THAT(bad.err, Catch::Matchers::ContainsSubstring("validate_f"));
  CHECK(bad.report()["validation"].back()["name"] == "validate_f");
  // Computations refuse an invalid f as well.
  CHECK(run("cohomology", spec_path("sweedler_bad_f")).code == 1);

  CHECK(run("validate", spec_path("does_not_exist")).code == 2);
  RunOptions which;
  which.which = {"witness", "no-such-check"};
  CHECK(run("theorems", spec_path("sweedler"), which).code == 2);
  RunOptions wit;
  wit.witness_json = "[1, 2, 3]";
  CHECK(run("theorems", spec_path("sweedler"), wit).code == 2);
}

TEST_CASE("cohomology verb dimension tables", "[cli]") {
  RunOptions d6;
  d6.max_degree = 6;
  CHECK(dims_of(run("cohomology", spec_path("sweedler"), d6).report()) ==
        std::vector<std::size_t>{1, 1, 1, 1, 1, 1, 1});
  CHECK(dims_of(run("cohomology", spec_path("truncated_x2")).report()) == std::vector<std::size_t>{2, 1, 1, 1, 1});
  CHECK(dims_of(run("cohomology", spec_path("truncated_x2_minus_1")).report()) ==
        std::vector<std::size_t>{2, 0, 0, 0, 0});
  CHECK(dims_of(run("cohomology", spec_path("truncated_gf3_x3")).report()) ==
        std::vector<std::size_t>{3, 3, 3, 3, 3});
  CHECK(dims_of(run("cohomology", spec_path("quaternion_pi_rho1")).report()) ==
        std::vector<std::size_t>{2, 0, 0, 0, 0});
  CHECK(dims_of(run("cohomology", spec_path("quaternion_pi_rho0")).report()) ==
        std::vector<std::size_t>{2, 1, 1, 1, 1});

  // Default D = 2v + 2: v = 1 for Sweedler, v = 2 for gh4.
  const json sw = run("cohomology", spec_path("sweedler")).report();
  CHECK(sw["resolved"]["max_degree"] == 4);
  const json gh = run("cohomology", spec_path("gh4_u3")).report();
  CHECK(gh["resolved"]["max_degree"] == 6);
  CHECK(dims_of(gh) == std::vector<std::size_t>{2, 2, 1, 1, 2, 2, 1});
  const json& deg2 = gh["cohomology"]["degrees"][2];
  CHECK(deg2["dim_cochain"] == 2);
  CHECK(deg2["twist_exponent"] == 2);
  CHECK(deg2["representatives"].size() == 1);
}

TEST_CASE("products verb", "[cli]") {
  const Run r = run("products", spec_path("sweedler"));
  REQUIRE(r.code == 0);
  const json rep = r.report();
  bool saw_xx = false;
  for (const auto& e : rep["cup_table"]) {
    CHECK(e["agree"] == true);
    if (e["deg_a"] == 0) CHECK(e["result_class_coords"] == json::array({"1"}));  // 1 cup b = b
    if (e["deg_a"] == 1 && e["deg_b"] == 1) {
      saw_xx = true;
      CHECK(e["result_class_coords"] == json::array({"0"}));
    }
    if (e["deg_a"] == 2) CHECK(e["result_class_coords"] == json::array({"1"}));  // y acts bijectively
  }
  CHECK(saw_xx);
  for (const auto& e : rep["bracket_table"]) CHECK(e["agree"] == true);
  const json& first = rep["cup_table"][0];
  for (const char* key : {"deg_a", "deg_b", "basis_index_a", "basis_index_b", "result_class_coords", "source", "agree"})
    CHECK(first.contains(key));
}

TEST_CASE("theorems verb", "[cli]") {
  RunOptions o;
  o.which = {"witness-cohomology", "diagonal-alpha", "group-algebra", "periodicity", "presentation", "generators"};
  const Run sw = run("theorems", spec_path("sweedler"), o);
  CHECK(sw.code == 0);
  const json swr = sw.report();
  for (const auto& c : swr["checks"]) {
    INFO(c["check"]);
    CHECK(c["ran"] == true);
    CHECK(c["match"] == true);
  }

  RunOptions id;
  id.which = {"identity-alpha-complex", "identity-alpha-cohomology"};
  for (const char* name : {"truncated_x2", "truncated_x2_minus_1", "truncated_gf3_x3"}) {
    const Run r = run("theorems", spec_path(name), id);
    CHECK(r.code == 0);
    const json rr = r.report();
    for (const auto& c : rr["checks"]) CHECK(c["match"] == true);
  }

  // Missing data shows up as a failed hypothesis, not a mismatch.
  RunOptions q;
  q.which = {"quaternion", "witness-cohomology"};
  const Run sq = run("theorems", spec_path("sweedler"), q);
  CHECK(sq.code == 0);
  const json rq = sq.report();
  CHECK(find_check(rq, "quaternion")["ran"] == false);
  CHECK(find_check(rq, "quaternion")["generic_table"] == json::array({1, 1, 1, 1, 1}));

  // Without a witness the closed forms are skipped and the generic table is kept.
  const json tr = run("theorems", spec_path("truncated_x2"), q).report();
  const json& wc = find_check(tr, "witness-cohomology");
  CHECK(wc["ran"] == false);
  CHECK(wc["hypotheses"][0]["holds"] == false);
  CHECK(wc["generic_table"] == json::array({2, 1, 1, 1, 1}));
  CHECK(tr["resolved"]["witness_text"] == "none");

  // The stated bracket of the chi^n = id rank-one case disagrees with the oracle.
  RunOptions h;
  h.which = {"hopf-rank-one"};
  const Run c4 = run("theorems", spec_path("hopf_c4_sign"), h);
  CHECK(c4.code == 1);
  const json c4r = c4.report();
  const json& hr = find_check(c4r, "hopf-rank-one");
  CHECK(hr["closed_table"] == hr["generic_table"]);
  for (const auto& m : hr["mismatches"]) CHECK_THAT(m.get<std::string>(), Catch::Matchers::StartsWith("stated bracket"));
  CHECK(run("theorems", spec_path("hopf_c8_i"), h).code == 0);

  // An invalid second f is reported as a failed hypothesis.
  const json fi = run("theorems", spec_path("taft3_second_f")).report();
  REQUIRE(fi["checks"].size() == 1);
  CHECK(fi["checks"][0]["hypotheses"][0]["name"] == "second f valid");
}

TEST_CASE("user witness candidates", "[cli]") {
  RunOptions o;
  o.witness_json = "[[0, 1], [1, 0]]";
  o.which = {"witness"};
  const json rep = run("theorems", spec_path("swap"), o).report();
  CHECK(rep["resolved"]["witness_text"] == "e2");
  o.witness_json = "[1, 1]";  // the unit is never separating; the search falls through
  CHECK(run("theorems", spec_path("swap"), o).report()["resolved"]["witness_text"] == "e1");
}

TEST_CASE("reports are deterministic and the echo round-trips", "[cli]") {
  const Run a = run("report", spec_path("taft3"));
  const Run b = run("report", spec_path("taft3"));
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK_FALSE(a.report().contains("timing_ms"));

  const InstanceSpec orig = parse_spec_file(spec_path("taft3"));
  const InstanceSpec back = parse_spec(a.report()["instance"]);
  CHECK(back.field == orig.field);
  CHECK(back.K.entries().size() == orig.K.entries().size());
  CHECK(back.alpha.matrix() == orig.alpha.matrix());
  CHECK(back.lambdas == orig.lambdas);

  RunOptions t;
  t.timing = true;
  CHECK(run("validate", spec_path("taft3"), t).report().contains("timing_ms"));
}

TEST_CASE("text and csv output", "[cli]") {
  const Run txt = run("cohomology", spec_path("sweedler"), {}, Format::Text);
  CHECK_THAT(txt.out, Catch::Matchers::ContainsSubstring("dim H"));
  const Run csv = run("cohomology", spec_path("sweedler"), {}, Format::Csv);
  CHECK_THAT(csv.out, Catch::Matchers::StartsWith("degree,dim_cochain,twist_exponent,rank_in,rank_out,dim_H\n0,2,0,0,1,1"));
}

TEST_CASE("scalar encoding round-trips", "[cli]") {
  const Field& Q = Field::rationals();
  const Field& F7 = Field::prime_field(7);
  const Field& Qi = Field::extension({1, 0, 1}, "i");
  for (const Scalar& s : {Q.from_rational(mpq_class(-3, 4)), F7.from_int(5), Qi.element({mpq_class(1, 2), -1}),
                          Q.zero()}) {
    CHECK(parse_scalar(*s.field(), encode_scalar(s), "") == s);
  }
}
