// Copyright 2026 the esfstl authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "esf/rng.hpp"

namespace esf {

/// A gene tree grown mutation-node by mutation-node: node 0 is the
/// ancestral (mutation-free) root; every other node is one mutation whose
/// parent is the next mutation toward the root.  Leaves sit on nodes.
struct GeneTree {
  std::vector<int> node_parent;  // node_parent[0] == -1
  std::vector<int> leaf_node;    // node each leaf hangs from

  int mutation_count() const { return static_cast<int>(node_parent.size()) - 1; }
  int leaf_count() const { return static_cast<int>(leaf_node.size()); }
};

/// Grows the tree leaf by leaf: with m leaves, a uniformly chosen leaf
/// duplicates with probability (m-1)/(theta+m-1) or gains a mutation node
/// with probability theta/(theta+m-1).  Runs until n+1 leaves first appear
/// and returns the state just before that last duplication (the size-biased
/// stopping rule; stopping at n directly samples a different law).
GeneTree grow_gene_tree(int n, double theta, Xoshiro256pp& rng);

/// Condensed state of the same growth chain: haplotype counts in age order
/// (oldest first) plus the accumulated mutation count.
struct GrowthConfigState {
  std::vector<int> counts;
  int s = 0;
};

/// Haplotype-count condensation of the growth chain, same stopping rule.
GrowthConfigState grow_config(int n, double theta, Xoshiro256pp& rng);

}  // namespace esf
