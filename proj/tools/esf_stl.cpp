// Copyright 2026 the esfstl authors
// SPDX-License-Identifier: Apache-2.0
//
// esf_stl: ancestral inference from haplotype counts and segregating sites.
//
//   esf_stl configfile k [#alleles] m [#mutations] theta replicates seed
//     -g beta   exponential growth
//     -a        age information
//     -t time   configuration at time (repeatable or comma-separated)

#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "esf/run.hpp"

namespace {

std::vector<double> parse_time_list(const std::vector<std::string>& raw) {
  std::vector<double> times;
  for (const auto& item : raw) {
    std::stringstream ss(item);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (!tok.empty()) times.push_back(std::stod(tok));
    }
  }
  return times;
}

esf::ThetaPrior parse_prior(const std::string& spec) {
  const auto open = spec.find(':');
  const std::string kind = spec.substr(0, open);
  std::vector<double> args;
  if (open != std::string::npos) {
    std::stringstream ss(spec.substr(open + 1));
    std::string tok;
    while (std::getline(ss, tok, ',')) args.push_back(std::stod(tok));
  }
  if (kind == "fixed" && args.size() == 1) return esf::ThetaPrior::fixed(args[0]);
  if (kind == "uniform" && args.size() == 2) return esf::ThetaPrior::uniform(args[0], args[1]);
  if (kind == "gamma" && args.size() == 2) return esf::ThetaPrior::gamma(args[0], args[1]);
  throw CLI::ValidationError("--prior", "expected fixed:v | uniform:lo,hi | gamma:shape,rate");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ancestral inference from haplotype counts and segregating sites"};
  app.get_formatter()->column_width(26);

  esf::RunConfig cfg;
  std::vector<std::string> time_args;
  std::string mode = "is";
  std::string format = "text";
  std::string prior_spec;
  std::vector<int> sfs;

  app.add_option("configfile", cfg.dataset_path, "haplotype-count file")->required();
  app.add_option("k", cfg.k, "number of haplotypes (checked against the file)")->required();
  app.add_option("m", cfg.m, "number of segregating sites")->required();
  app.add_option("theta", cfg.theta, "scaled mutation rate")->required();
  app.add_option("replicates", cfg.replicates,
                 "simulation replicates (accepted draws in rejection modes)")
      ->required();
  app.add_option("seed", cfg.seed, "random seed")->required();

  app.add_option("-g,--growth", cfg.growth_beta, "exponential growth rate beta");
  app.add_flag("-a,--ages", cfg.age_info, "report allele age information");
  app.add_option("-t,--time", time_args,
                 "configuration at time(s); repeatable or comma-separated")
      ->take_all();
  app.add_option("--mode", mode, "is | reject3 | reject4 | exact | stats")
      ->check(CLI::IsMember({"is", "reject3", "reject4", "exact", "stats"}));
  app.add_option("--format", format, "text | json | csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", cfg.out_path, "output file (json) or prefix (csv)");
  app.add_option("--threads", cfg.threads, "worker threads (0 = hardware)");
  app.add_option("--prior", prior_spec, "theta prior for rejection modes");
  app.add_option("--pi", cfg.pi, "mean pairwise differences (stats mode)");
  app.add_option("--sfs", sfs, "site frequency spectrum counts (stats mode)")->take_all();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    cfg.time_points = parse_time_list(time_args);
    if (!prior_spec.empty()) {
      cfg.prior = parse_prior(prior_spec);
      cfg.prior_set = true;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  cfg.sfs = sfs;
  if (mode == "is") cfg.mode = esf::RunMode::kImportance;
  else if (mode == "reject3") cfg.mode = esf::RunMode::kReject3;
  else if (mode == "reject4") cfg.mode = esf::RunMode::kReject4;
  else if (mode == "exact") cfg.mode = esf::RunMode::kExact;
  else cfg.mode = esf::RunMode::kStats;
  if (format == "text") cfg.format = esf::OutputFormat::kText;
  else if (format == "json") cfg.format = esf::OutputFormat::kJson;
  else cfg.format = esf::OutputFormat::kCsv;

  return esf::run_cli(cfg, std::cout, std::cerr);
}
