#pragma once

#include <string>
#include <vector>

#include "raag/graph.hpp"

namespace raag {

// One representative per isomorphism class of simple graphs on exactly n
// vertices (labels v1..vn), keyed by the least adjacency bitmask over all
// vertex permutations and listed in ascending key order. Class counts for
// n = 1..6: 1, 2, 4, 11, 34, 156.
std::vector<Graph::Ptr> enumerate_graphs(int n);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // empty on pass, else the first counterexample
};

// End-to-end property suite for one graph: preorder reformulations, word
// arithmetic, Magnus homomorphism laws, L2 rank, tau1 agreement, Phi tables,
// block conformance, SL-dimension monotonicity, centre probes, tree sanity.
// Randomized parts are seeded from the graph, so results are reproducible.
std::vector<CheckResult> run_invariant_suite(const Graph::Ptr& g);

struct CorpusEntry {
  std::string id;  // "n4#07": vertex count and index in enumeration order
  Graph::Ptr graph;
  std::vector<CheckResult> checks;
  bool all_pass = false;
};

// Suite over every isomorphism class on exactly k vertices, guarded at
// k <= 6. The per-graph jobs are independent; `parallel` fans them out over
// OpenMP threads. Output is identical and ordered either way.
std::vector<CorpusEntry> run_corpus(int k, bool parallel = true);

}  // namespace raag
