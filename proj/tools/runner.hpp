#pragma once

// Verb implementations shared by the executable and the tests.

#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "spec_io.hpp"

namespace monogen::cli {

enum class Format { Json, Text, Csv };

struct RunOptions {
  std::optional<int> max_degree;
  std::optional<int> oracle_bound;
  std::vector<std::string> which;
  /// --witness: one coordinate list, or a list of them, parsed against the spec's field.
  std::string witness_json;
  std::vector<KElem> witness;
  bool timing = false;
};

/// Names accepted by --which, in report order.
const std::vector<std::string>& check_names();
bool is_check_name(const std::string& name);

struct ValidationItem {
  std::string name;
  bool ok = true;
  std::string failure;
};

/// algebra, endomorphism and f validation on the raw spec, then (when those
/// pass) tf commutation, f normality and the contracting homotopy.
std::vector<ValidationItem> validate_spec(const InstanceSpec& spec, int max_degree);

/// Everything computed for one run. Products are built on first use.
class Session {
 public:
  Session(InstanceSpec spec, const RunOptions& opts);

  const InstanceSpec& spec() const { return spec_; }
  const Instance& instance() const { return inst_; }
  const Pipeline& pipeline() const { return *P_; }
  const Products& products();
  const MaybeWitness& witness() const { return w_; }
  int max_degree() const { return D_; }
  int oracle_bound() const { return bound_; }
  std::optional<long> v() const { return v_; }

  std::vector<CheckResult> run_checks(const std::vector<std::string>& names);
  /// --which, else options.checks, else every check whose data is present.
  std::vector<std::string> selected_checks(const RunOptions& opts) const;

 private:
  CheckResult run_one(const std::string& name);

  InstanceSpec spec_;
  Instance inst_;
  std::optional<long> v_;
  int D_ = 0;
  int bound_ = 0;
  std::unique_ptr<Pipeline> P_;
  std::unique_ptr<Products> X_;
  MaybeWitness w_;
};

/// Default max degree: 2v + 2 when v = ord(alpha^n) is at most 6, else 6.
int default_max_degree(const std::optional<long>& v);

json instance_echo(const Session& s);
json validation_json(const std::vector<ValidationItem>& items);
json cohomology_json(const Session& s);
json product_entries_json(const std::vector<ProductEntry>& entries);
json check_json(const CheckResult& c, const Session& s);

void write_validation_text(std::ostream& os, const std::vector<ValidationItem>& items);
void write_cohomology_text(std::ostream& os, const Session& s);
void write_products_text(std::ostream& os, const std::string& title, const std::vector<ProductEntry>& e);
void write_checks_text(std::ostream& os, const std::vector<CheckResult>& checks);

void write_validation_csv(std::ostream& os, const std::vector<ValidationItem>& items);
void write_cohomology_csv(std::ostream& os, const Session& s);
void write_products_csv(std::ostream& os, const std::string& table, const std::vector<ProductEntry>& e);
void write_checks_csv(std::ostream& os, const std::vector<CheckResult>& checks);

/// Runs a verb and writes its report. Returns the exit code (0, 1 or 2).
int run_verb(const std::string& verb, const std::string& spec_path, const RunOptions& opts,
             Format format, std::ostream& out, std::ostream& err);

}  // namespace monogen::cli
