#pragma once

// Instance spec files: JSON with keys field, K, alpha, f, max_degree, options.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "monogen/closedforms.hpp"

namespace monogen::cli {

using json = nlohmann::ordered_json;

/// Schema or parse error, with the JSON pointer of the offending value.
class SpecError : public InputError {
 public:
  SpecError(const std::string& where, const std::string& what)
      : InputError((where.empty() ? std::string("/") : where) + ": " + what) {}
};

struct GeneratorSpec {
  std::string name;
  int degree = 0;
  KElem value;
  int power = 0;
};

struct RankOneSpec {
  std::size_t g1 = 0;
  Scalar xi;
};

struct InstanceSpec {
  json source;
  const Field* field = nullptr;
  AlgebraK K;
  Endo alpha;
  std::vector<KElem> lambdas;
  std::optional<GroupData> group;
  std::optional<QuaternionData> quaternion;
  std::optional<int> max_degree;

  std::optional<int> oracle_bound;
  std::vector<KElem> witness_candidates;
  std::vector<std::string> checks;
  std::optional<std::size_t> g1;
  std::optional<RankOneSpec> rank_one;
  std::optional<std::vector<KElem>> compare_f;
  std::vector<GeneratorSpec> generators;
};

Scalar parse_scalar(const Field& F, const json& j, const std::string& where);
json encode_scalar(const Scalar& s);
json encode_vec(const Vec& v);
KElem parse_kelem(const Field& F, std::size_t dim, const json& j, const std::string& where);

const Field& parse_field(const json& j, const std::string& where = "/field");
InstanceSpec parse_spec(const json& j);
InstanceSpec parse_spec_text(const std::string& text);
InstanceSpec parse_spec_file(const std::string& path);

/// Builds the algebra (throws MathError when f fails validation).
Instance make_instance(const InstanceSpec& spec);

/// Central element whose character value is a primitive n-th root, if any.
std::optional<std::size_t> find_g1(const GroupData& G, const Field& F, int n);

}  // namespace monogen::cli
