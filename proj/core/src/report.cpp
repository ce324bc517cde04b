// Copyright 2026 the esfstl authors
// SPDX-License-Identifier: Apache-2.0

#include "esf/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "esf/error.hpp"

namespace esf {

const char* to_string(RunMode mode) {
  switch (mode) {
    case RunMode::kImportance: return "importance-sampling";
    case RunMode::kReject3: return "rejection-lines";
    case RunMode::kReject4: return "rejection-standing";
    case RunMode::kExact: return "exact";
    case RunMode::kStats: return "stats";
  }
  return "?";
}

const char* to_string(OutputFormat format) {
  switch (format) {
    case OutputFormat::kText: return "text";
    case OutputFormat::kJson: return "json";
    case OutputFormat::kCsv: return "csv";
  }
  return "?";
}

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string fmt_pair(double v, double se) { return fmt(v) + " (se " + fmt(se) + ")"; }

void render_model_line(const ReportBundle& b, std::ostream& os) {
  if (b.config.growth_beta > 0.0)
    os << "model: exponential growth (beta = " << fmt(b.config.growth_beta) << ")\n";
  else
    os << "model: constant population size\n";
}

void render_ranked_list(std::ostream& os, const char* title,
                        const std::vector<RankedTimeEstimate>& list) {
  os << title << ":\n";
  for (const auto& e : list) os << "  " << fmt_pair(e.mean, e.std_error) << "\n";
}

std::string prior_description(const ThetaPrior& prior) {
  switch (prior.kind) {
    case ThetaPrior::Kind::kFixed: return "fixed(" + fmt(prior.a) + ")";
    case ThetaPrior::Kind::kUniform: return "uniform(" + fmt(prior.a) + ", " + fmt(prior.b) + ")";
    case ThetaPrior::Kind::kGamma: return "gamma(" + fmt(prior.a) + ", " + fmt(prior.b) + ")";
  }
  return "?";
}

}  // namespace

std::string render_text(const ReportBundle& b) {
  std::ostringstream os;
  os << "esf_stl report\n";
  os << "mode: " << to_string(b.config.mode) << "\n";
  render_model_line(b, os);
  os << "dataset: " << b.config.dataset_path << "\n";
  os << "n: " << b.n << "  k: " << b.k << "  s: " << b.s << "\n";
  os << "theta: " << fmt(b.config.theta) << "\n";
  os << "replicates: " << b.config.replicates << "\n";
  os << "seed: " << b.config.seed << "\n";

  if (b.is) {
    const auto& is = *b.is;
    os << "ess: " << fmt(is.ess) << "\n";
    os << "log p(n;s) age-ordered: " << fmt(is.log_likelihood_age_labelled) << "\n";
    os << "log p(n;s) unordered: " << fmt(is.log_likelihood_unordered) << "\n";
    os << "p(n;s) unordered: "
       << fmt_pair(is.likelihood_unordered.mean, is.likelihood_unordered.std_error) << "\n";
    os << "ESF p(n) unordered exact: " << fmt(std::exp(b.esf_log_prob)) << "\n";
    os << "TMRCA: " << fmt_pair(is.tmrca.mean, is.tmrca.std_error) << "\n";
    if (!is.mutation_times.empty())
      render_ranked_list(os, "mutation times (increasing)", is.mutation_times);
    if (!is.loss_times.empty())
      render_ranked_list(os, "haplotype loss times (increasing)", is.loss_times);
    if (!is.allele_ages.empty())
      render_ranked_list(os, "allele ages (input order)", is.allele_ages);
    if (!is.coalescence_times.empty()) {
      if (b.n <= 30) {
        render_ranked_list(os, "coalescence times (levels n..2)", is.coalescence_times);
      } else {
        os << "coalescence times: " << is.coalescence_times.size()
           << " levels (see JSON/CSV output)\n";
      }
    }
    for (const auto& slice : is.slices) {
      os << "configuration at t = " << fmt(slice.t) << ":\n";
      os << "  haplotype counts:";
      for (std::size_t i = 0; i < slice.mean_counts.size(); ++i)
        os << " " << fmt(slice.mean_counts[i]);
      os << "\n";
      os << "  K_n(t): " << fmt(slice.mean_haplotypes)
         << "  S_n(t): " << fmt(slice.mean_standing_sites)
         << "  A_n(t): " << fmt(slice.mean_ancestors) << "\n";
      os << "  ancestor-line distribution:";
      for (std::size_t a = 0; a < slice.line_distribution.size(); ++a)
        if (slice.line_distribution[a] >= 5e-4) os << " " << a << ":" << fmt(slice.line_distribution[a]);
      os << "\n";
    }
  }

  if (b.rejection) {
    const auto& rej = *b.rejection;
    os << "prior: " << prior_description(b.config.prior) << "\n";
    os << "accepted: " << rej.accepted << "  proposals: " << rej.proposals
       << "  acceptance rate: " << fmt(rej.acceptance_rate) << "\n";
    os << "TMRCA: " << fmt_pair(rej.tmrca_mean, rej.tmrca_se) << "\n";
    if (!b.config.prior.is_fixed())
      os << "theta posterior mean: " << fmt_pair(rej.theta_mean, rej.theta_se) << "\n";
    for (const auto& row : rej.per_time) {
      os << "t = " << fmt(row.t) << ": A_n(t) = " << fmt_pair(row.mean_ancestors, row.se_ancestors);
      if (b.config.mode == RunMode::kReject4)
        os << "  S_n(t) = " << fmt_pair(row.mean_standing, row.se_standing);
      os << "\n";
    }
  }

  if (b.exact) {
    const auto& ex = *b.exact;
    os << "P(S_n = s): " << fmt(ex.seg_sites_prob) << "\n";
    os << "P(K_n = k): " << fmt(ex.num_alleles_prob) << "\n";
    os << "ESF p(n) unordered exact: " << fmt(std::exp(b.esf_log_prob)) << "\n";
    for (std::size_t i = 0; i < b.config.time_points.size(); ++i) {
      os << "t = " << fmt(b.config.time_points[i])
         << ": E[A_n(t) | S_n = s] = " << fmt(ex.cond_mean_lines[i])
         << "  E[A_n^theta(t)] = " << fmt(ex.mean_clean_lines[i]) << "\n";
    }
  }

  if (b.stats) {
    const auto& st = *b.stats;
    os << "watterson theta: " << fmt(st.watterson) << "\n";
    os << "ewens mle theta: " << fmt(st.ewens_mle) << "\n";
    os << "expected singletons (at mle): " << fmt(st.expected_singletons_mle) << "\n";
    os << "poisson-limit mean alpha_1: " << fmt(st.spectrum_mean_1) << "\n";
    os << "poisson-limit mean alpha_1+alpha_2: " << fmt(st.spectrum_mean_12) << "\n";
    os << "observed alpha_1: " << st.observed_singletons
       << "  P(Z >= obs): " << fmt(st.tail_singletons) << "\n";
    os << "observed alpha_1+alpha_2: " << st.observed_doubletons
       << "  P(Z >= obs): " << fmt(st.tail_first_two) << "\n";
    if (st.tajima)
      os << "tajima D (pi = " << fmt(st.pi_used) << "): " << fmt(*st.tajima) << "\n";
  }
  return os.str();
}

namespace {

using nlohmann::json;

json ranked_to_json(const std::vector<RankedTimeEstimate>& list) {
  json arr = json::array();
  for (const auto& e : list) arr.push_back({{"mean", e.mean}, {"se", e.std_error}});
  return arr;
}

}  // namespace

std::string render_json(const ReportBundle& b) {
  json j;
  j["mode"] = to_string(b.config.mode);
  j["model"] = b.config.growth_beta > 0.0 ? "exp-growth" : "constant";
  j["growth_beta"] = b.config.growth_beta;
  j["dataset"] = b.config.dataset_path;
  j["n"] = b.n;
  j["k"] = b.k;
  j["s"] = b.s;
  j["theta"] = b.config.theta;
  j["replicates"] = b.config.replicates;
  j["seed"] = b.config.seed;
  j["esf_log_prob"] = b.esf_log_prob;

  if (b.is) {
    const auto& is = *b.is;
    json ji;
    ji["ess"] = is.ess;
    ji["log_likelihood_age_ordered"] = is.log_likelihood_age_labelled;
    ji["log_likelihood_unordered"] = is.log_likelihood_unordered;
    ji["likelihood_unordered"] = is.likelihood_unordered.mean;
    ji["likelihood_se"] = is.likelihood_unordered.std_error;
    ji["tmrca"] = {{"mean", is.tmrca.mean}, {"se", is.tmrca.std_error}};
    ji["mutation_times"] = ranked_to_json(is.mutation_times);
    ji["loss_times"] = ranked_to_json(is.loss_times);
    ji["allele_ages"] = ranked_to_json(is.allele_ages);
    ji["coalescence_times"] = ranked_to_json(is.coalescence_times);
    json slices = json::array();
    for (const auto& s : is.slices) {
      json js;
      js["t"] = s.t;
      js["mean_counts"] = s.mean_counts;
      js["se_counts"] = s.se_counts;
      js["K"] = s.mean_haplotypes;
      js["S"] = s.mean_standing_sites;
      js["A"] = s.mean_ancestors;
      js["line_distribution"] = s.line_distribution;
      slices.push_back(js);
    }
    ji["slices"] = slices;
    j["importance"] = ji;
  }
  if (b.rejection) {
    const auto& r = *b.rejection;
    json jr;
    jr["prior"] = prior_description(b.config.prior);
    jr["accepted"] = r.accepted;
    jr["proposals"] = r.proposals;
    jr["acceptance_rate"] = r.acceptance_rate;
    jr["tmrca"] = {{"mean", r.tmrca_mean}, {"se", r.tmrca_se}};
    jr["theta"] = {{"mean", r.theta_mean}, {"se", r.theta_se}};
    json rows = json::array();
    for (const auto& row : r.per_time)
      rows.push_back({{"t", row.t},
                      {"ancestors", {{"mean", row.mean_ancestors}, {"se", row.se_ancestors}}},
                      {"standing", {{"mean", row.mean_standing}, {"se", row.se_standing}}}});
    jr["per_time"] = rows;
    j["rejection"] = jr;
  }
  if (b.exact) {
    const auto& e = *b.exact;
    j["exact"] = {{"seg_sites_prob", e.seg_sites_prob},
                  {"num_alleles_prob", e.num_alleles_prob},
                  {"time_points", b.config.time_points},
                  {"cond_mean_lines", e.cond_mean_lines},
                  {"mean_clean_lines", e.mean_clean_lines}};
  }
  if (b.stats) {
    const auto& st = *b.stats;
    json js;
    js["watterson"] = st.watterson;
    js["ewens_mle"] = st.ewens_mle;
    js["expected_singletons_mle"] = st.expected_singletons_mle;
    js["spectrum_mean_1"] = st.spectrum_mean_1;
    js["spectrum_mean_12"] = st.spectrum_mean_12;
    js["observed_singletons"] = st.observed_singletons;
    js["observed_first_two"] = st.observed_doubletons;
    js["tail_singletons"] = st.tail_singletons;
    js["tail_first_two"] = st.tail_first_two;
    if (st.tajima) {
      js["tajima_d"] = *st.tajima;
      js["pi"] = st.pi_used;
    }
    j["stats"] = js;
  }
  return j.dump(2) + "\n";
}

std::vector<std::string> write_csv_tables(const ReportBundle& b, const std::string& prefix) {
  std::vector<std::string> written;
  auto open = [&](const std::string& suffix) {
    std::string path = prefix + suffix;
    std::ofstream out(path);
    if (!out) throw ParseError(path + ": cannot open for writing");
    written.push_back(path);
    return out;
  };
  if (b.is) {
    const auto& is = *b.is;
    {
      auto out = open("_times.csv");
      out << "kind,rank,mean,se\n";
      for (std::size_t r = 0; r < is.coalescence_times.size(); ++r)
        out << "coalescence," << r + 1 << "," << is.coalescence_times[r].mean << ","
            << is.coalescence_times[r].std_error << "\n";
      for (std::size_t r = 0; r < is.mutation_times.size(); ++r)
        out << "mutation," << r + 1 << "," << is.mutation_times[r].mean << ","
            << is.mutation_times[r].std_error << "\n";
      for (std::size_t r = 0; r < is.loss_times.size(); ++r)
        out << "loss," << r + 1 << "," << is.loss_times[r].mean << ","
            << is.loss_times[r].std_error << "\n";
      out << "tmrca,0," << is.tmrca.mean << "," << is.tmrca.std_error << "\n";
    }
    {
      auto out = open("_ages.csv");
      out << "haplotype,count,mean_age,se\n";
      for (std::size_t i = 0; i < is.allele_ages.size(); ++i)
        out << i + 1 << "," << b.haplotype_counts[i] << "," << is.allele_ages[i].mean << ","
            << is.allele_ages[i].std_error << "\n";
    }
    {
      auto out = open("_config.csv");
      out << "t,haplotype,mean_count,se\n";
      for (const auto& s : is.slices)
        for (std::size_t i = 0; i < s.mean_counts.size(); ++i)
          out << s.t << "," << i + 1 << "," << s.mean_counts[i] << "," << s.se_counts[i] << "\n";
    }
    {
      auto out = open("_lines.csv");
      out << "t,lines,probability\n";
      for (const auto& s : is.slices)
        for (std::size_t a = 0; a < s.line_distribution.size(); ++a)
          if (s.line_distribution[a] > 0.0) out << s.t << "," << a << "," << s.line_distribution[a] << "\n";
    }
  }
  if (b.rejection) {
    auto out = open("_rejection.csv");
    out << "t,mean_ancestors,se_ancestors,mean_standing,se_standing\n";
    for (const auto& row : b.rejection->per_time)
      out << row.t << "," << row.mean_ancestors << "," << row.se_ancestors << ","
          << row.mean_standing << "," << row.se_standing << "\n";
  }
  return written;
}

}  // namespace esf
