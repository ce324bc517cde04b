// Copyright 2026 the esfstl authors
// SPDX-License-Identifier: Apache-2.0

#include "esf/run.hpp"

#include <cmath>
#include <fstream>
#include <ostream>

#include "esf/dataset.hpp"
#include "esf/error.hpp"
#include "esf/joint_pgf.hpp"
#include "esf/lineage.hpp"
#include "esf/seg_sites.hpp"
#include "esf/stats.hpp"

namespace esf {

namespace {

TimeModel model_from(const RunConfig& cfg) {
  return cfg.growth_beta > 0.0 ? TimeModel::exp_growth(cfg.growth_beta) : TimeModel::constant();
}

ISResult run_is_mode(const RunConfig& cfg, const HaplotypeConfig& data) {
  ISOptions opt;
  opt.sample = {data, cfg.m};
  opt.theta = cfg.theta;
  opt.time_model = model_from(cfg);
  opt.replicates = cfg.replicates;
  opt.master_seed = cfg.seed;
  opt.threads = cfg.threads;
  opt.t_grid = cfg.time_points;
  opt.want_event_times = true;
  opt.want_ages = cfg.age_info;
  return run_importance(opt);
}

RejectionResult run_rejection_mode(const RunConfig& cfg, const HaplotypeConfig& data) {
  RejectionOptions opt;
  opt.n = data.n();
  opt.s = cfg.m;
  opt.prior = cfg.prior_set ? cfg.prior : ThetaPrior::fixed(cfg.theta);
  opt.time_model = model_from(cfg);
  opt.t_grid = cfg.time_points.empty() ? std::vector<double>{0.0} : cfg.time_points;
  opt.target_accepted = cfg.replicates;
  opt.master_seed = cfg.seed;
  opt.threads = cfg.threads;
  return cfg.mode == RunMode::kReject3 ? run_algorithm3(opt) : run_algorithm4(opt);
}

ExactReport run_exact_mode(const RunConfig& cfg, const HaplotypeConfig& data) {
  ExactReport ex;
  const int n = data.n();
  ex.seg_sites_prob = seg_sites_pmf(n, cfg.theta, cfg.m);
  ex.num_alleles_prob = num_alleles_pmf(n, cfg.theta, data.k());
  for (double t : cfg.time_points) {
    ex.cond_mean_lines.push_back(cond_mean_ancestors(n, cfg.theta, t, cfg.m));
    ex.mean_clean_lines.push_back(ancestors_falling_moment({n, cfg.theta, t}, 1));
  }
  return ex;
}

StatsReport run_stats_mode(const RunConfig& cfg, const HaplotypeConfig& data) {
  StatsReport st;
  const int n = data.n();
  const int k = data.k();
  st.watterson = watterson_theta(cfg.m, n);
  st.ewens_mle = ewens_mle_theta(k, n);
  st.expected_singletons_mle = expected_singletons(n, st.ewens_mle);
  st.spectrum_mean_1 = poisson_spectrum_approx(n, st.ewens_mle, 1);
  st.spectrum_mean_12 = st.spectrum_mean_1 + poisson_spectrum_approx(n, st.ewens_mle, 2);
  const auto alpha = data.multiplicity_spectrum();
  st.observed_singletons = alpha.count(1) ? alpha.at(1) : 0;
  st.observed_doubletons = st.observed_singletons + (alpha.count(2) ? alpha.at(2) : 0);
  st.tail_singletons = poisson_tail_test(st.observed_singletons, st.spectrum_mean_1);
  st.tail_first_two = poisson_tail_test(st.observed_doubletons, st.spectrum_mean_12);
  double pi = cfg.pi;
  if (pi < 0.0 && !cfg.sfs.empty()) pi = pairwise_diff_from_sfs(cfg.sfs, n);
  if (pi >= 0.0) {
    st.pi_used = pi;
    st.tajima = tajimas_d(pi, cfg.m, n);
  }
  return st;
}

}  // namespace

ReportBundle execute_run(const RunConfig& cfg) {
  ReportBundle bundle;
  bundle.config = cfg;
  const HaplotypeConfig data = parse_dataset_file(cfg.dataset_path);
  data.validate();
  bundle.haplotype_counts = data.counts;
  bundle.n = data.n();
  bundle.k = data.k();
  bundle.s = cfg.m;
  bundle.esf_log_prob = esf_log_probability(data, cfg.theta);

  switch (cfg.mode) {
    case RunMode::kImportance:
      bundle.is = run_is_mode(cfg, data);
      break;
    case RunMode::kReject3:
    case RunMode::kReject4:
      bundle.rejection = run_rejection_mode(cfg, data);
      break;
    case RunMode::kExact:
      bundle.exact = run_exact_mode(cfg, data);
      break;
    case RunMode::kStats:
      bundle.stats = run_stats_mode(cfg, data);
      break;
  }
  return bundle;
}

int run_cli(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    HaplotypeConfig data;
    try {
      data = parse_dataset_file(cfg.dataset_path);
      data.validate();
    } catch (const ParseError& e) {
      err << "error: " << e.what() << "\n";
      return 3;
    }
    if (cfg.k != data.k()) {
      err << "error: declared k = " << cfg.k << " but the dataset has " << data.k()
          << " haplotypes\n";
      return 3;
    }
    if (cfg.m < 0) {
      err << "error: declared m must be >= 0\n";
      return 2;
    }

    ReportBundle bundle = execute_run(cfg);
    out << render_text(bundle);
    if (cfg.format == OutputFormat::kJson) {
      if (cfg.out_path.empty()) {
        out << render_json(bundle);
      } else {
        std::ofstream jf(cfg.out_path);
        if (!jf) {
          err << "error: cannot write " << cfg.out_path << "\n";
          return 2;
        }
        jf << render_json(bundle);
      }
    } else if (cfg.format == OutputFormat::kCsv) {
      const std::string prefix = cfg.out_path.empty() ? "esf_stl_report" : cfg.out_path;
      write_csv_tables(bundle, prefix);
    }
    return 0;
  } catch (const PrecisionLossError& e) {
    err << "error: " << e.what() << " (cancellation digits " << e.cancellation_digits() << ")\n";
    return 4;
  } catch (const QuadratureError& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  } catch (const ZeroAcceptanceError& e) {
    err << "error: " << e.what() << " after " << e.proposals() << " proposals\n";
    return 4;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace esf
