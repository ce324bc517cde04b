// Copyright 2026 the esfstl authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "esf/importance.hpp"
#include "esf/prior.hpp"
#include "esf/rejection.hpp"

namespace esf {

enum class RunMode { kImportance, kReject3, kReject4, kExact, kStats };
enum class OutputFormat { kText, kJson, kCsv };

const char* to_string(RunMode mode);
const char* to_string(OutputFormat format);

/// Everything needed to reproduce a run: the paper-style positional
/// arguments plus the extended options.
struct RunConfig {
  std::string dataset_path;
  int k = 0;  // declared haplotype count; must match the dataset
  int m = 0;  // declared segregating-site count s
  double theta = 1.0;
  std::uint64_t replicates = 1;
  std::uint64_t seed = 1;

  double growth_beta = 0.0;  // -g
  bool age_info = false;     // -a
  std::vector<double> time_points;

  RunMode mode = RunMode::kImportance;
  OutputFormat format = OutputFormat::kText;
  std::string out_path;  // JSON file or CSV prefix
  unsigned threads = 0;  // 0 = hardware default

  ThetaPrior prior = ThetaPrior::fixed(1.0);
  bool prior_set = false;  // rejection modes default to fixed(theta)

  double pi = -1.0;             // stats mode: mean pairwise differences
  std::vector<int> sfs;         // stats mode: site frequency spectrum
};

/// Exact-mode payload.
struct ExactReport {
  double seg_sites_prob = 0.0;          // P(S_n = s)
  double num_alleles_prob = 0.0;        // P(K_n = k)
  std::vector<double> cond_mean_lines;  // E[A_n(t) | S_n = s] per time point
  std::vector<double> mean_clean_lines; // E[A_n^theta(t)] per time point
};

/// Stats-mode payload.
struct StatsReport {
  double watterson = 0.0;
  double ewens_mle = 0.0;
  double expected_singletons_mle = 0.0;
  double spectrum_mean_1 = 0.0;   // Poisson-limit mean of alpha_1
  double spectrum_mean_12 = 0.0;  // of alpha_1 + alpha_2
  int observed_singletons = 0;
  int observed_doubletons = 0;
  double tail_singletons = 0.0;
  double tail_first_two = 0.0;
  std::optional<double> tajima;
  double pi_used = -1.0;
};

struct ReportBundle {
  RunConfig config;
  int n = 0, k = 0, s = 0;
  std::vector<int> haplotype_counts;  // parsed dataset, input order
  double esf_log_prob = 0.0;  // exact unordered ESF of the configuration

  std::optional<ISResult> is;
  std::optional<RejectionResult> rejection;
  std::optional<ExactReport> exact;
  std::optional<StatsReport> stats;
};

/// Deterministic plain-text report (the stdout format).
std::string render_text(const ReportBundle& bundle);

/// Full bundle as JSON.
std::string render_json(const ReportBundle& bundle);

/// CSV emission: one file per table under the given prefix
/// (<prefix>_times.csv, _ages.csv, _config.csv, _lines.csv).  Returns the
/// file names written.
std::vector<std::string> write_csv_tables(const ReportBundle& bundle, const std::string& prefix);

}  // namespace esf
