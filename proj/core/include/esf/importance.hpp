// Copyright 2026 the esfstl authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "esf/error.hpp"
#include "esf/haplotype.hpp"
#include "esf/rng.hpp"
#include "esf/time_model.hpp"

namespace esf {

/// Backward-chain state of the sequential importance sampler.  Types carry
/// the observed haplotype's input index as identity, or -1 once a mutation
/// has replaced an observed singleton with an older anonymous type.
struct ISState {
  std::vector<int> counts;
  std::vector<int> ident;
  int n = 0;      // total lineages
  int s_rem = 0;  // mutations still to place
  double time = 0.0;
  double log_weight = 0.0;

  int k() const { return static_cast<int>(counts.size()); }
  bool terminal() const { return n == 1; }

  static ISState from_sample(const ObservedSample& sample);
};

/// One backward move: coalescence inside type i, defining mutation removing
/// singleton i and attaching its line to type l, or an extra mutation that
/// re-labels singleton i as an older anonymous singleton.
struct Move {
  enum class Kind { kCoalesce, kDefining, kExtra };
  Kind kind = Kind::kCoalesce;
  int i = 0;
  int l = -1;
};

/// All admissible moves from `state` with their proposal probabilities
/// (sums to 1).  Reference implementation used by tests; the sampler picks
/// a move without materializing the list.
std::vector<std::pair<Move, double>> enumerate_moves(const ISState& state);

/// Samples one move from the proposal; *log_proposal_prob gets its log.
Move sample_move(const ISState& state, Xoshiro256pp& rng, double* log_proposal_prob);

/// One proposal step: samples a move, applies it, and returns the successor
/// state together with the log proposal probability.  (The path walker uses
/// the lower-level pieces to also attach times and weights.)
std::pair<ISState, double> propose_step(const ISState& state, Xoshiro256pp& rng);

/// ln of the one-step forward probability of `move` out of the predecessor
/// of `state`: (n_i - 1)/(n+theta-1) for coalescence,
/// theta (n_l + 1) / ((n+theta-1) n) for a defining mutation, and
/// theta / ((n+theta-1) n) per singleton for an extra mutation.
double forward_log_factor(const ISState& state, const Move& move, double theta);

/// Importance-weight increment: forward log-probability minus the proposal
/// log-probability.
inline double step_log_weight(const ISState& state, const Move& move, double log_proposal_prob,
                              double theta) {
  return forward_log_factor(state, move, theta) - log_proposal_prob;
}

void apply_move(ISState& state, const Move& move);

enum class EventKind { kCoalescence, kDefiningMutation, kExtraMutation };

struct EventRecord {
  EventKind kind = EventKind::kCoalescence;
  double time = 0.0;
  int lines_before = 0;
  int ident_lost = -1;  // identity ended by this event, if any
  Move move;
};

/// One materialized history.
struct ISPath {
  std::vector<EventRecord> events;
  double log_weight = 0.0;
  double tmrca = 0.0;
  int root_ident = -1;  // identity of the surviving type, -1 if anonymous
};

/// Walks one backward path from the observed sample to the single ancestral
/// lineage, sampling event times layer by layer.  The visitor sees each
/// event before it is applied (so `state` is the configuration on
/// [state.time, event_time)) and a final call with the terminal state.
///
/// Visitor interface:
///   void on_event(const ISState& state, const EventRecord& event);
///   void on_terminal(const ISState& state, int root_ident);
template <typename Visitor>
void walk_path(const ObservedSample& sample, double theta, const TimeModel& model,
               Xoshiro256pp& rng, Visitor& visitor);

ISPath simulate_path(const ObservedSample& sample, double theta, const TimeModel& model,
                     Xoshiro256pp& rng);

/// A weighted Monte Carlo estimate with its diagnostics.
struct WeightedEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  double effective_sample_size = 0.0;
  std::uint64_t replicates = 0;
};

struct RankedTimeEstimate {
  double mean = 0.0;
  double std_error = 0.0;
};

struct ISSliceResult {
  double t = 0.0;
  std::vector<double> mean_counts;     // per observed haplotype, input order
  std::vector<double> se_counts;
  double mean_haplotypes = 0.0;        // K_n(t); 0 past the MRCA
  double mean_standing_sites = 0.0;    // S_n(t)
  double mean_ancestors = 0.0;         // A_n(t); 1 past the MRCA
  std::vector<double> line_distribution;  // P(A_n(t) = a), index a = 0..n
};

struct ISOptions {
  ObservedSample sample;
  double theta = 1.0;
  TimeModel time_model = TimeModel::constant();
  std::uint64_t replicates = 1;
  std::uint64_t master_seed = 1;
  unsigned threads = 1;  // 0 = hardware default
  std::uint64_t batch_size = 4096;
  std::vector<double> t_grid;  // slice times (may be empty)
  bool want_event_times = false;
  bool want_ages = false;
};

struct ISResult {
  // Likelihood of the observed (configuration, s).
  double log_likelihood_age_labelled = 0.0;  // ln E[w] = ln p(n; s)
  double log_likelihood_unordered = 0.0;     // minus ln prod alpha_j!
  WeightedEstimate likelihood_unordered;     // linear scale (0 if underflowed)
  double ess = 0.0;
  std::uint64_t replicates = 0;

  WeightedEstimate tmrca;
  std::vector<RankedTimeEstimate> coalescence_times;  // ranks n..2
  std::vector<RankedTimeEstimate> mutation_times;     // s ranks, increasing
  std::vector<RankedTimeEstimate> loss_times;         // k ranks, increasing
  std::vector<RankedTimeEstimate> allele_ages;        // input order
  std::vector<ISSliceResult> slices;
};

/// Runs the sampler once and fills every requested summary.
ISResult run_importance(const ISOptions& options);

ISResult estimate_likelihood(const ObservedSample& sample, double theta, const TimeModel& model,
                             std::uint64_t replicates, std::uint64_t seed, unsigned threads = 1);
ISResult estimate_event_times(const ObservedSample& sample, double theta, const TimeModel& model,
                              std::uint64_t replicates, std::uint64_t seed, unsigned threads = 1);
ISResult estimate_allele_ages(const ObservedSample& sample, double theta, const TimeModel& model,
                              std::uint64_t replicates, std::uint64_t seed, unsigned threads = 1);
ISResult estimate_config_at_time(const ObservedSample& sample, double theta,
                                 const TimeModel& model, double t, std::uint64_t replicates,
                                 std::uint64_t seed, unsigned threads = 1);

// ---------------------------------------------------------------------------
// Template implementation.

template <typename Visitor>
void walk_path(const ObservedSample& sample, double theta, const TimeModel& model,
               Xoshiro256pp& rng, Visitor& visitor) {
  ISState state = ISState::from_sample(sample);
  if (!sample.feasible())
    throw DomainError("walk_path: s < k - 1 has likelihood exactly zero");
  const bool constant_rate = model.is_constant_rate();
  while (!state.terminal()) {
    const int m = state.n;
    double log_prop = 0.0;
    const Move move = sample_move(state, rng, &log_prop);
    double event_time;
    double growth_correction = 0.0;
    if (constant_rate) {
      event_time = state.time + rng.exponential(0.5 * m * (m + theta - 1));
    } else {
      // Competing risks: inhomogeneous pair coalescence against mutation.
      const double pair_rate = 0.5 * m * (m - 1);
      const double mut_rate = 0.5 * m * theta;
      const double dt_coal =
          std::log1p(model.beta * rng.exponential() * std::exp(-model.beta * state.time) /
                     pair_rate) /
          model.beta;
      const double dt_mut = rng.exponential(mut_rate);
      event_time = state.time + std::min(dt_coal, dt_mut);
      const double coal_intensity = pair_rate * std::exp(model.beta * event_time);
      const double p_true_coal = coal_intensity / (coal_intensity + mut_rate);
      const bool is_coal = move.kind == Move::Kind::kCoalesce;
      const double p_true = is_coal ? p_true_coal : 1.0 - p_true_coal;
      const double p_const =
          (is_coal ? (m - 1) : theta) / (m + theta - 1);
      growth_correction = std::log(p_true) - std::log(p_const);
    }
    state.log_weight += step_log_weight(state, move, log_prop, theta) + growth_correction;

    EventRecord record;
    record.move = move;
    record.time = event_time;
    record.lines_before = m;
    if (move.kind == Move::Kind::kCoalesce) {
      record.kind = EventKind::kCoalescence;
    } else {
      record.kind = move.kind == Move::Kind::kDefining ? EventKind::kDefiningMutation
                                                       : EventKind::kExtraMutation;
      record.ident_lost = state.ident[move.i];
    }
    visitor.on_event(state, record);
    apply_move(state, move);
    state.time = event_time;
  }
  visitor.on_terminal(state, state.ident.empty() ? -1 : state.ident[0]);
}

}  // namespace esf
