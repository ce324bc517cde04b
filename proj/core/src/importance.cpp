// Copyright 2026 the esfstl authors
// SPDX-License-Identifier: Apache-2.0

#include "esf/importance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

#include "esf/parallel.hpp"

namespace esf {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

ISState ISState::from_sample(const ObservedSample& sample) {
  sample.config.validate();
  ISState st;
  st.counts = sample.config.counts;
  st.ident.resize(st.counts.size());
  for (int i = 0; i < static_cast<int>(st.ident.size()); ++i) st.ident[i] = i;
  st.n = sample.config.n();
  st.s_rem = sample.s;
  return st;
}

namespace {

int singleton_count(const ISState& st) {
  int q = 0;
  for (int c : st.counts) q += (c == 1);
  return q;
}

}  // namespace

std::vector<std::pair<Move, double>> enumerate_moves(const ISState& st) {
  std::vector<std::pair<Move, double>> moves;
  const int n = st.n;
  const int k = st.k();
  if (st.terminal()) return moves;
  if (k == 1) {
    moves.push_back({{Move::Kind::kCoalesce, 0, -1}, 1.0});
    return moves;
  }
  const double dn = n;
  if (k == 2) {
    const int c0 = st.counts[0], c1 = st.counts[1];
    if (c0 > 1 && c1 > 1) {
      moves.push_back({{Move::Kind::kCoalesce, 0, -1}, c0 / dn});
      moves.push_back({{Move::Kind::kCoalesce, 1, -1}, c1 / dn});
    } else if (c0 == 1 && c1 == 1) {
      if (st.s_rem > 1) {
        moves.push_back({{Move::Kind::kExtra, 0, -1}, 0.5});
        moves.push_back({{Move::Kind::kExtra, 1, -1}, 0.5});
      } else if (st.s_rem == 1) {
        moves.push_back({{Move::Kind::kDefining, 0, 1}, 0.5});
        moves.push_back({{Move::Kind::kDefining, 1, 0}, 0.5});
      }
    } else {
      const int big = c0 > 1 ? 0 : 1;
      const int small = 1 - big;
      moves.push_back({{Move::Kind::kCoalesce, big, -1}, st.counts[big] / dn});
      if (st.s_rem > 1) {
        moves.push_back({{Move::Kind::kExtra, small, -1}, 1.0 / dn});
      } else if (st.s_rem == 1) {
        moves.push_back({{Move::Kind::kDefining, small, big}, 1.0 / dn});
      }
    }
    return moves;
  }
  // k > 2.
  const bool extra_allowed = st.s_rem - k + 1 > 0;
  for (int i = 0; i < k; ++i)
    if (st.counts[i] > 1) moves.push_back({{Move::Kind::kCoalesce, i, -1}, st.counts[i] / dn});
  for (int i = 0; i < k; ++i) {
    if (st.counts[i] != 1) continue;
    for (int l = 0; l < k; ++l) {
      if (l == i) continue;
      const double p = extra_allowed ? st.counts[l] / (dn * dn) : st.counts[l] / ((dn - 1) * dn);
      moves.push_back({{Move::Kind::kDefining, i, l}, p});
    }
    if (extra_allowed) moves.push_back({{Move::Kind::kExtra, i, -1}, 1.0 / (dn * dn)});
  }
  return moves;
}

Move sample_move(const ISState& st, Xoshiro256pp& rng, double* log_proposal_prob) {
  const int n = st.n;
  const int k = st.k();
  const double dn = n;
  if (k == 1) {
    if (st.counts[0] < 2) throw DomainError("sample_move: terminal state has no moves");
    *log_proposal_prob = 0.0;
    return {Move::Kind::kCoalesce, 0, -1};
  }
  if (k == 2) {
    const int c0 = st.counts[0], c1 = st.counts[1];
    if (c0 > 1 && c1 > 1) {
      const int i = (rng.uniform() * n < c0) ? 0 : 1;
      *log_proposal_prob = std::log(st.counts[i] / dn);
      return {Move::Kind::kCoalesce, i, -1};
    }
    if (c0 == 1 && c1 == 1) {
      if (st.s_rem < 1) throw DomainError("sample_move: dead end at (1,1) with s = 0");
      const int i = static_cast<int>(rng.below(2));
      *log_proposal_prob = std::log(0.5);
      if (st.s_rem > 1) return {Move::Kind::kExtra, i, -1};
      return {Move::Kind::kDefining, i, 1 - i};
    }
    const int big = c0 > 1 ? 0 : 1;
    const int small = 1 - big;
    if (st.s_rem < 1) throw DomainError("sample_move: dead end at k = 2 with s = 0");
    if (rng.uniform() * n < st.counts[big]) {
      *log_proposal_prob = std::log(st.counts[big] / dn);
      return {Move::Kind::kCoalesce, big, -1};
    }
    *log_proposal_prob = -std::log(dn);
    if (st.s_rem > 1) return {Move::Kind::kExtra, small, -1};
    return {Move::Kind::kDefining, small, big};
  }
  // k > 2.
  const int q = singleton_count(st);
  const bool extra_allowed = st.s_rem - k + 1 > 0;
  double u = rng.uniform() * n;
  if (u < n - q) {
    double cum = 0.0;
    int pick = -1;
    for (int i = 0; i < k; ++i) {
      if (st.counts[i] <= 1) continue;
      cum += st.counts[i];
      pick = i;
      if (u < cum) break;
    }
    *log_proposal_prob = std::log(st.counts[pick] / dn);
    return {Move::Kind::kCoalesce, pick, -1};
  }
  double v = u - (n - q);  // in [0, q)
  int slot = static_cast<int>(v);
  if (slot >= q) slot = q - 1;
  int i = -1;
  for (int idx = 0, seen = 0; idx < k; ++idx) {
    if (st.counts[idx] == 1 && seen++ == slot) {
      i = idx;
      break;
    }
  }
  const double within = v - slot;  // uniform in [0, 1)
  const double span = extra_allowed ? dn : dn - 1;
  double w = within * span;
  double cum = 0.0;
  for (int l = 0; l < k; ++l) {
    if (l == i) continue;
    cum += st.counts[l];
    if (w < cum) {
      *log_proposal_prob =
          std::log(st.counts[l]) - std::log(span) - std::log(dn);
      return {Move::Kind::kDefining, i, l};
    }
  }
  if (!extra_allowed) {  // numeric edge: fall back to the last admissible l
    const int l = (i == k - 1) ? k - 2 : k - 1;
    *log_proposal_prob = std::log(st.counts[l]) - std::log(span) - std::log(dn);
    return {Move::Kind::kDefining, i, l};
  }
  *log_proposal_prob = -2.0 * std::log(dn);
  return {Move::Kind::kExtra, i, -1};
}

std::pair<ISState, double> propose_step(const ISState& state, Xoshiro256pp& rng) {
  double log_prob = 0.0;
  const Move move = sample_move(state, rng, &log_prob);
  ISState next = state;
  apply_move(next, move);
  return {std::move(next), log_prob};
}

double forward_log_factor(const ISState& st, const Move& move, double theta) {
  const double dn = st.n;
  const double denom = std::log(dn + theta - 1);
  switch (move.kind) {
    case Move::Kind::kCoalesce:
      return std::log(st.counts[move.i] - 1.0) - denom;
    case Move::Kind::kDefining:
      return std::log(theta) + std::log(st.counts[move.l] + 1.0) - denom - std::log(dn);
    case Move::Kind::kExtra:
      return std::log(theta) - denom - std::log(dn);
  }
  throw DomainError("forward_log_factor: unknown move");
}

void apply_move(ISState& st, const Move& move) {
  switch (move.kind) {
    case Move::Kind::kCoalesce:
      --st.counts[move.i];
      --st.n;
      return;
    case Move::Kind::kDefining:
      ++st.counts[move.l];
      st.counts.erase(st.counts.begin() + move.i);
      st.ident.erase(st.ident.begin() + move.i);
      --st.s_rem;
      return;
    case Move::Kind::kExtra:
      st.ident[move.i] = -1;
      --st.s_rem;
      return;
  }
}

namespace {

struct RecordingVisitor {
  ISPath path;
  void on_event(const ISState& state, const EventRecord& event) {
    (void)state;
    path.events.push_back(event);
  }
  void on_terminal(const ISState& state, int root_ident) {
    path.tmrca = state.time;
    path.log_weight = state.log_weight;
    path.root_ident = root_ident;
  }
};

}  // namespace

ISPath simulate_path(const ObservedSample& sample, double theta, const TimeModel& model,
                     Xoshiro256pp& rng) {
  if (!sample.feasible()) {
    ISPath zero;
    zero.log_weight = kNegInf;
    return zero;
  }
  RecordingVisitor visitor;
  walk_path(sample, theta, model, rng, visitor);
  return std::move(visitor.path);
}

// ---------------------------------------------------------------------------
// Weighted estimation.

namespace {

// Offsets of the per-path scalar statistics within the accumulator vectors.
struct StatLayout {
  int n = 0, k = 0, s = 0;
  std::size_t grid_size = 0;
  bool want_times = false, want_ages = false;

  std::size_t off_tmrca = 0;
  std::size_t off_coal = 0;    // n-1 ranks (levels n..2)
  std::size_t off_mut = 0;     // s ranks
  std::size_t off_loss = 0;    // k ranks (sorted identity end times)
  std::size_t off_ages = 0;    // k haplotypes, input order
  std::size_t off_slices = 0;  // per grid: k counts, then K, S, A
  std::size_t scalar_count = 0;

  static StatLayout make(const ISOptions& opt) {
    StatLayout lay;
    lay.n = opt.sample.config.n();
    lay.k = opt.sample.config.k();
    lay.s = opt.sample.s;
    lay.grid_size = opt.t_grid.size();
    lay.want_times = opt.want_event_times;
    lay.want_ages = opt.want_ages;
    std::size_t off = 0;
    lay.off_tmrca = off++;
    lay.off_coal = off;
    if (lay.want_times) off += lay.n - 1;
    lay.off_mut = off;
    if (lay.want_times) off += lay.s;
    lay.off_loss = off;
    if (lay.want_times || lay.want_ages) off += lay.k;
    lay.off_ages = off;
    if (lay.want_ages) off += lay.k;
    lay.off_slices = off;
    off += lay.grid_size * (lay.k + 3);
    lay.scalar_count = off;
    return lay;
  }
  std::size_t slice_base(std::size_t g) const { return off_slices + g * (k + 3); }
};

// One batch worth of log-weight-scaled sums.  All sums carry the factor
// exp(-anchor); the anchor tracks the largest log-weight seen so far.
struct EstimatorVisitor;

struct ISAcc {
  std::uint64_t count = 0;
  double anchor = kNegInf;
  double s1 = 0.0, s2 = 0.0;
  std::vector<double> wx, w2x, w2x2;
  std::vector<double> hist_w, hist_w2;  // grid_size * (n + 1) cells
  std::unique_ptr<EstimatorVisitor> scratch;  // per-batch reusable walker sink

  void rescale(double new_anchor) {
    const double f = std::exp(anchor - new_anchor);
    const double f2 = f * f;
    s1 *= f;
    s2 *= f2;
    for (auto& v : wx) v *= f;
    for (auto& v : w2x) v *= f2;
    for (auto& v : w2x2) v *= f2;
    for (auto& v : hist_w) v *= f;
    for (auto& v : hist_w2) v *= f2;
    anchor = new_anchor;
  }
};

// Per-path collector feeding one ISAcc.
struct EstimatorVisitor {
  const StatLayout& lay;
  const std::vector<double>& grid;

  std::vector<double> stats;      // per-path scalar values
  std::vector<double> end_time;   // per identity
  std::vector<int> line_at_grid;  // A_n(t) per grid point
  int mut_seen = 0;
  std::size_t gcur = 0;
  double log_weight = 0.0;

  EstimatorVisitor(const StatLayout& layout, const std::vector<double>& t_grid)
      : lay(layout), grid(t_grid) {
    stats.resize(lay.scalar_count);
    end_time.resize(lay.k);
    line_at_grid.resize(grid.size());
  }

  void reset() {
    std::fill(stats.begin(), stats.end(), 0.0);
    std::fill(end_time.begin(), end_time.end(), 0.0);
    mut_seen = 0;
    gcur = 0;
  }

  void snapshot(const ISState& st) {
    const std::size_t base = lay.slice_base(gcur);
    for (int t = 0; t < st.k(); ++t)
      if (st.ident[t] >= 0) stats[base + st.ident[t]] = st.counts[t];
    stats[base + lay.k + 0] = st.k();
    stats[base + lay.k + 1] = st.s_rem;
    stats[base + lay.k + 2] = st.n;
    line_at_grid[gcur] = st.n;
    ++gcur;
  }

  void on_event(const ISState& st, const EventRecord& ev) {
    while (gcur < grid.size() && grid[gcur] < ev.time) snapshot(st);
    if (ev.kind == EventKind::kCoalescence) {
      if (lay.want_times) stats[lay.off_coal + (lay.n - ev.lines_before)] = ev.time;
    } else {
      if (lay.want_times) stats[lay.off_mut + mut_seen] = ev.time;
      ++mut_seen;
      if (ev.ident_lost >= 0) end_time[ev.ident_lost] = ev.time;
    }
  }

  void on_terminal(const ISState& st, int root_ident) {
    stats[lay.off_tmrca] = st.time;
    while (gcur < grid.size()) {
      const std::size_t base = lay.slice_base(gcur);
      stats[base + lay.k + 0] = 0.0;  // no sample haplotype survives the MRCA
      stats[base + lay.k + 1] = 0.0;
      stats[base + lay.k + 2] = 1.0;
      line_at_grid[gcur] = 1;
      ++gcur;
    }
    if (root_ident >= 0) end_time[root_ident] = st.time;
    if (lay.want_times || lay.want_ages) {
      if (lay.want_ages)
        for (int i = 0; i < lay.k; ++i) stats[lay.off_ages + i] = end_time[i];
      std::sort(end_time.begin(), end_time.end());
      for (int r = 0; r < lay.k; ++r) stats[lay.off_loss + r] = end_time[r];
    }
    log_weight = st.log_weight;
  }
};

void accumulate_path(ISAcc& acc, const StatLayout& lay, const EstimatorVisitor& vis) {
  ++acc.count;
  const double lw = vis.log_weight;
  if (lw > acc.anchor) acc.rescale(lw);
  const double w = std::exp(lw - acc.anchor);
  const double w2 = w * w;
  acc.s1 += w;
  acc.s2 += w2;
  for (std::size_t i = 0; i < lay.scalar_count; ++i) {
    const double x = vis.stats[i];
    acc.wx[i] += w * x;
    acc.w2x[i] += w2 * x;
    acc.w2x2[i] += w2 * x * x;
  }
  for (std::size_t g = 0; g < lay.grid_size; ++g) {
    const std::size_t cell = g * (lay.n + 1) + vis.line_at_grid[g];
    acc.hist_w[cell] += w;
    acc.hist_w2[cell] += w2;
  }
}

WeightedEstimate make_weighted(const ISAcc& acc, std::size_t idx) {
  WeightedEstimate est;
  est.replicates = acc.count;
  est.effective_sample_size = acc.s2 > 0 ? acc.s1 * acc.s1 / acc.s2 : 0.0;
  if (acc.s1 <= 0.0) return est;
  const double m = acc.wx[idx] / acc.s1;
  est.mean = m;
  const double var_num = acc.w2x2[idx] - 2.0 * m * acc.w2x[idx] + m * m * acc.s2;
  est.std_error = var_num > 0.0 ? std::sqrt(var_num) / acc.s1 : 0.0;
  return est;
}

RankedTimeEstimate make_ranked(const ISAcc& acc, std::size_t idx) {
  auto est = make_weighted(acc, idx);
  return {est.mean, est.std_error};
}

}  // namespace

ISResult run_importance(const ISOptions& opt) {
  if (opt.replicates < 1) throw DomainError("run_importance: need replicates >= 1");
  opt.sample.config.validate();

  ISResult res;
  res.replicates = opt.replicates;
  const double log_alpha_fact = opt.sample.config.log_prod_alpha_factorials();
  if (!opt.sample.feasible()) {
    res.log_likelihood_age_labelled = kNegInf;
    res.log_likelihood_unordered = kNegInf;
    res.likelihood_unordered.replicates = opt.replicates;
    return res;
  }

  const StatLayout lay = StatLayout::make(opt);
  std::vector<double> grid = opt.t_grid;
  std::sort(grid.begin(), grid.end());

  auto make = [&] {
    ISAcc acc;
    acc.wx.assign(lay.scalar_count, 0.0);
    acc.w2x.assign(lay.scalar_count, 0.0);
    acc.w2x2.assign(lay.scalar_count, 0.0);
    acc.hist_w.assign(lay.grid_size * (lay.n + 1), 0.0);
    acc.hist_w2.assign(lay.grid_size * (lay.n + 1), 0.0);
    acc.scratch = std::make_unique<EstimatorVisitor>(lay, grid);
    return acc;
  };
  auto process = [&](ISAcc& acc, std::uint64_t index) {
    acc.scratch->reset();
    auto rng = seed_replicate_rng(opt.master_seed, index);
    walk_path(opt.sample, opt.theta, opt.time_model, rng, *acc.scratch);
    accumulate_path(acc, lay, *acc.scratch);
  };
  auto merge = [&](ISAcc& into, ISAcc&& from) {
    if (from.count == 0) return;
    if (into.count == 0) {
      into = std::move(from);
      return;
    }
    const double anchor = std::max(into.anchor, from.anchor);
    into.rescale(anchor);
    from.rescale(anchor);
    into.count += from.count;
    into.s1 += from.s1;
    into.s2 += from.s2;
    for (std::size_t i = 0; i < into.wx.size(); ++i) {
      into.wx[i] += from.wx[i];
      into.w2x[i] += from.w2x[i];
      into.w2x2[i] += from.w2x2[i];
    }
    for (std::size_t i = 0; i < into.hist_w.size(); ++i) {
      into.hist_w[i] += from.hist_w[i];
      into.hist_w2[i] += from.hist_w2[i];
    }
  };

  auto acc = run_batched<ISAcc>(opt.replicates, opt.threads, opt.batch_size, make, process, merge);

  const double log_sum_w = acc.anchor + std::log(acc.s1);
  res.log_likelihood_age_labelled = log_sum_w - std::log(static_cast<double>(acc.count));
  res.log_likelihood_unordered = res.log_likelihood_age_labelled - log_alpha_fact;
  res.ess = acc.s2 > 0 ? acc.s1 * acc.s1 / acc.s2 : 0.0;

  {
    WeightedEstimate lik;
    lik.replicates = acc.count;
    lik.effective_sample_size = res.ess;
    lik.mean = std::exp(res.log_likelihood_unordered);
    const double nn = static_cast<double>(acc.count);
    // SE of the plain mean of weights, carried through the scaling anchor.
    const double mbar = acc.s1 / nn;
    double var = (acc.s2 / nn - mbar * mbar) / std::max(1.0, nn - 1.0);
    if (var > 0.0)
      lik.std_error = std::exp(acc.anchor - log_alpha_fact) * std::sqrt(var);
    res.likelihood_unordered = lik;
  }

  res.tmrca = make_weighted(acc, lay.off_tmrca);
  res.tmrca.replicates = acc.count;
  if (lay.want_times) {
    res.coalescence_times.resize(lay.n - 1);
    for (int r = 0; r < lay.n - 1; ++r)
      res.coalescence_times[r] = make_ranked(acc, lay.off_coal + r);
    res.mutation_times.resize(lay.s);
    for (int r = 0; r < lay.s; ++r) res.mutation_times[r] = make_ranked(acc, lay.off_mut + r);
  }
  if (lay.want_times || lay.want_ages) {
    res.loss_times.resize(lay.k);
    for (int r = 0; r < lay.k; ++r) res.loss_times[r] = make_ranked(acc, lay.off_loss + r);
  }
  if (lay.want_ages) {
    res.allele_ages.resize(lay.k);
    for (int i = 0; i < lay.k; ++i) res.allele_ages[i] = make_ranked(acc, lay.off_ages + i);
  }
  res.slices.resize(lay.grid_size);
  for (std::size_t g = 0; g < lay.grid_size; ++g) {
    auto& slice = res.slices[g];
    slice.t = grid[g];
    const std::size_t base = lay.slice_base(g);
    slice.mean_counts.resize(lay.k);
    slice.se_counts.resize(lay.k);
    for (int i = 0; i < lay.k; ++i) {
      auto est = make_weighted(acc, base + i);
      slice.mean_counts[i] = est.mean;
      slice.se_counts[i] = est.std_error;
    }
    slice.mean_haplotypes = make_weighted(acc, base + lay.k + 0).mean;
    slice.mean_standing_sites = make_weighted(acc, base + lay.k + 1).mean;
    slice.mean_ancestors = make_weighted(acc, base + lay.k + 2).mean;
    slice.line_distribution.assign(lay.n + 1, 0.0);
    if (acc.s1 > 0.0)
      for (int a = 0; a <= lay.n; ++a)
        slice.line_distribution[a] = acc.hist_w[g * (lay.n + 1) + a] / acc.s1;
  }
  return res;
}

namespace {

ISOptions base_options(const ObservedSample& sample, double theta, const TimeModel& model,
                       std::uint64_t replicates, std::uint64_t seed, unsigned threads) {
  ISOptions opt;
  opt.sample = sample;
  opt.theta = theta;
  opt.time_model = model;
  opt.replicates = replicates;
  opt.master_seed = seed;
  opt.threads = threads;
  return opt;
}

}  // namespace

ISResult estimate_likelihood(const ObservedSample& sample, double theta, const TimeModel& model,
                             std::uint64_t replicates, std::uint64_t seed, unsigned threads) {
  return run_importance(base_options(sample, theta, model, replicates, seed, threads));
}

ISResult estimate_event_times(const ObservedSample& sample, double theta, const TimeModel& model,
                              std::uint64_t replicates, std::uint64_t seed, unsigned threads) {
  auto opt = base_options(sample, theta, model, replicates, seed, threads);
  opt.want_event_times = true;
  return run_importance(opt);
}

ISResult estimate_allele_ages(const ObservedSample& sample, double theta, const TimeModel& model,
                              std::uint64_t replicates, std::uint64_t seed, unsigned threads) {
  auto opt = base_options(sample, theta, model, replicates, seed, threads);
  opt.want_ages = true;
  return run_importance(opt);
}

ISResult estimate_config_at_time(const ObservedSample& sample, double theta,
                                 const TimeModel& model, double t, std::uint64_t replicates,
                                 std::uint64_t seed, unsigned threads) {
  auto opt = base_options(sample, theta, model, replicates, seed, threads);
  opt.t_grid = {t};
  return run_importance(opt);
}

}  // namespace esf
