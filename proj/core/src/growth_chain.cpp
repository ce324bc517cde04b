// Copyright 2026 the esfstl authors
// SPDX-License-Identifier: Apache-2.0

#include "esf/growth_chain.hpp"

#include "esf/error.hpp"

namespace esf {

GeneTree grow_gene_tree(int n, double theta, Xoshiro256pp& rng) {
  if (n < 2 || theta <= 0.0) throw DomainError("grow_gene_tree: need n >= 2, theta > 0");
  GeneTree tree;
  tree.node_parent = {-1};
  tree.leaf_node = {0, 0};
  while (true) {
    const int m = tree.leaf_count();
    const int leaf = static_cast<int>(rng.below(m));
    if (rng.uniform() * (theta + m - 1) < static_cast<double>(m - 1)) {
      if (m == n) return tree;  // the (n+1)-th leaf would appear now
      tree.leaf_node.push_back(tree.leaf_node[leaf]);
    } else {
      tree.node_parent.push_back(tree.leaf_node[leaf]);
      tree.leaf_node[leaf] = static_cast<int>(tree.node_parent.size()) - 1;
    }
  }
}

GrowthConfigState grow_config(int n, double theta, Xoshiro256pp& rng) {
  if (n < 2 || theta <= 0.0) throw DomainError("grow_config: need n >= 2, theta > 0");
  GrowthConfigState state;
  state.counts = {2};
  state.s = 0;
  int m = 2;
  while (true) {
    // Pick an individual uniformly; find its type.
    int pick = static_cast<int>(rng.below(m));
    int type = 0;
    while (pick >= state.counts[type]) pick -= state.counts[type++];
    if (rng.uniform() * (theta + m - 1) < static_cast<double>(m - 1)) {
      if (m == n) return state;
      ++state.counts[type];
      ++m;
    } else {
      // One individual of `type` mutates to a new youngest haplotype.
      --state.counts[type];
      if (state.counts[type] == 0) state.counts.erase(state.counts.begin() + type);
      state.counts.push_back(1);
      ++state.s;
    }
  }
}

}  // namespace esf
