#include <fstream>
#include <iostream>
#include <set>

#include <CLI11.hpp>
#include <json.hpp>

#include "tama/suites.hpp"

namespace {

using nlohmann::json;

// Reads a JSON config; keys mirror the long flag names.
void apply_config_file(const std::string& path, tama::RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw tama::Error("cannot open config file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw tama::Error(std::string("malformed config file: ") + e.what());
  }
  if (!j.is_object()) throw tama::Error("config file must hold a JSON object");
  static const std::set<std::string> known{"family", "rank", "ambient", "single_c", "specialize", "suites", "max_degree",
                                           "max_arity", "max_group", "jobs", "seed", "filtration_pairs", "timing"};
  try {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const std::string& k = it.key();
      if (!known.count(k)) throw tama::Error("unknown config key '" + k + "'");
      const json& v = it.value();
      if (k == "family") cfg.family = v.get<std::string>();
      if (k == "rank") cfg.rank = v.get<int>();
      if (k == "ambient") cfg.ambient = v.get<int>();
      if (k == "single_c") cfg.single_c = v.get<bool>();
      if (k == "specialize" && !v.is_null()) cfg.specialize = tama::parse_specialisation(v.get<std::string>());
      if (k == "suites") cfg.suites = v.is_string() ? std::vector<std::string>{v.get<std::string>()} : v.get<std::vector<std::string>>();
      if (k == "max_degree") cfg.max_degree = v.get<int>();
      if (k == "max_arity") cfg.max_arity = v.get<int>();
      if (k == "max_group") cfg.max_group = v.get<std::size_t>();
      if (k == "jobs") cfg.jobs = v.get<int>();
      if (k == "seed") cfg.seed = v.get<std::uint64_t>();
      if (k == "filtration_pairs") cfg.filtration_pairs = v.get<int>();
      if (k == "timing") cfg.timing = v.get<bool>();
    }
  } catch (const json::exception& e) {
    throw tama::Error(std::string("bad value in config file: ") + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the Dunkl total angular momentum algebra"};
  app.require_subcommand(1);
  CLI::App* verify = app.add_subcommand("verify", "Run verification suites and write a JSON report");

  std::string config_path, family, specialize, out_path;
  int rank = 0, ambient = 0, max_degree = 0, max_arity = 0, jobs = 0, pairs = 0;
  std::size_t max_group = 0;
  std::uint64_t seed = 0;
  bool single_c = false, timing = false;
  std::vector<std::string> suites;

  verify->add_option("--config", config_path, "JSON config file; flags override its values");
  verify->add_option("--family", family, "A, B, D or A1^d");
  verify->add_option("--rank", rank, "rank of the root system");
  verify->add_option("--ambient", ambient, "ambient dimension (defaults to the natural one)");
  verify->add_option("--suite", suites, "osp, relations, centre, vogan, admissible, cohomology, filtration or all")->delimiter(',');
  verify->add_flag("--single-c", single_c, "collapse every c_k to one symbolic c");
  verify->add_option("--specialize", specialize, "rational values, e.g. s=1,c1=1/3");
  verify->add_option("--max-degree", max_degree, "top polynomial degree for the cohomology suite");
  verify->add_option("--max-arity", max_arity, "largest index arity for relation checks");
  verify->add_option("--max-group", max_group, "bound on |W|");
  verify->add_option("--filtration-pairs", pairs, "number of random pairs in the filtration suite");
  verify->add_option("--seed", seed, "seed for the filtration suite");
  verify->add_option("--out", out_path, "report path (default stdout)");
  verify->add_option("--jobs", jobs, "worker threads");
  verify->add_flag("--timing", timing, "record elapsed milliseconds (breaks byte-identical reports)");

  CLI11_PARSE(app, argc, argv);

  tama::RunConfig cfg;
  std::unique_ptr<tama::Context> ctx;
  try {
    if (!config_path.empty()) apply_config_file(config_path, cfg);
    if (verify->count("--family")) cfg.family = family;
    if (verify->count("--rank")) cfg.rank = rank;
    if (verify->count("--ambient")) cfg.ambient = ambient;
    if (verify->count("--suite")) cfg.suites = suites;
    if (single_c) cfg.single_c = true;
    if (verify->count("--specialize")) cfg.specialize = tama::parse_specialisation(specialize);
    if (verify->count("--max-degree")) cfg.max_degree = max_degree;
    if (verify->count("--max-arity")) cfg.max_arity = max_arity;
    if (verify->count("--max-group")) cfg.max_group = max_group;
    if (verify->count("--filtration-pairs")) cfg.filtration_pairs = pairs;
    if (verify->count("--seed")) cfg.seed = seed;
    if (verify->count("--jobs")) cfg.jobs = jobs;
    if (timing) cfg.timing = true;
    cfg.validate();
    ctx = std::make_unique<tama::Context>(cfg);
  } catch (const tama::Error& e) {
    std::cerr << "tama_verify: " << e.what() << "\n";
    return 2;
  }

  auto [checks, findings] = tama::run_suites(*ctx);
  nlohmann::ordered_json config = cfg.to_json();
  config["group"] = ctx->algebra().root_datum().name();
  config["dim"] = ctx->dim();
  config["parameters"] = cfg.specialize ? "rational" : (cfg.single_c ? "single-c" : "symbolic");
  std::string text = tama::report_json(config, checks, findings).dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "tama_verify: cannot write '" << out_path << "'\n";
      return 2;
    }
    out << text;
  }
  tama::Summary s = tama::summarize(checks);
  std::cerr << s.pass << " pass, " << s.fail << " fail, " << s.skipped << " skipped\n";
  for (const auto& c : checks)
    if (c.status == "fail") std::cerr << "FAIL " << c.suite << ": " << c.check << "\n";
  return s.fail ? 1 : 0;
}
