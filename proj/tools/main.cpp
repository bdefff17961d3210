#include <fstream>
#include <iostream>
#include <sstream>

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "CLI11.hpp"
#include "runner.hpp"

using namespace monogen::cli;

namespace {

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto b = tok.find_first_not_of(' ');
    const auto e = tok.find_last_not_of(' ');
    if (b != std::string::npos) out.push_back(tok.substr(b, e - b + 1));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  spdlog::set_default_logger(spdlog::stderr_color_mt("monogen"));
  spdlog::set_level(spdlog::level::warn);

  CLI::App app{"Hochschild cohomology of monogenic extensions K[x, alpha]/<f>"};
  app.require_subcommand(1);

  RunOptions opts;
  std::string spec_path, out_path, format = "json", which;
  int max_degree = -1, oracle_bound = -1;
  bool verbose = false;

  std::string names;
  for (const auto& n : check_names()) names += (names.empty() ? "" : ", ") + n;

  for (const char* verb : {"validate", "cohomology", "products", "theorems", "report"}) {
    CLI::App* sub = app.add_subcommand(verb);
    sub->add_option("spec", spec_path, "instance spec (JSON)")->required();
    sub->add_option("--max-degree,-D", max_degree, "top cohomological degree D");
    sub->add_option("--out,-o", out_path, "write the report here instead of stdout");
    sub->add_option("--format", format, "json, text or csv")->check(CLI::IsMember({"json", "text", "csv"}));
    sub->add_option("--which", which, "comma-separated checks: " + names);
    sub->add_option("--oracle-bound", oracle_bound, "degree bound for the bar-complex oracle (0..5)");
    sub->add_option("--witness", opts.witness_json, "JSON K-coordinates of witness candidates");
    sub->add_flag("--timing", opts.timing, "include wall-clock timings in the report");
    sub->add_flag("--verbose,-v", verbose, "progress messages on stderr");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (verbose) spdlog::set_level(spdlog::level::debug);

  const std::string verb = app.get_subcommands().front()->get_name();
  if (max_degree >= 0) opts.max_degree = max_degree;
  if (oracle_bound >= 0) opts.oracle_bound = oracle_bound;
  opts.which = split_names(which);
  const Format fmt = format == "text" ? Format::Text : format == "csv" ? Format::Csv : Format::Json;

  if (out_path.empty()) return run_verb(verb, spec_path, opts, fmt, std::cout, std::cerr);
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return 2;
  }
  return run_verb(verb, spec_path, opts, fmt, out, std::cerr);
}
