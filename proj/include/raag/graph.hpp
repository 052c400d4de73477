#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "raag/errors.hpp"

namespace raag {

// Sorted vector of vertex indices. All set-valued graph queries return these.
using VertexSet = std::vector<int>;

bool vs_contains(const VertexSet& s, int v);
bool vs_subset(const VertexSet& a, const VertexSet& b);
VertexSet vs_union(const VertexSet& a, const VertexSet& b);
VertexSet vs_intersect(const VertexSet& a, const VertexSet& b);
VertexSet vs_minus(const VertexSet& a, const VertexSet& b);

// Finite simple graph with labelled vertices. Immutable: every algebraic
// object (word, series, automorphism) holds a shared_ptr to its graph and
// operations refuse to mix graphs that are not structurally equal.
class Graph {
 public:
  using Ptr = std::shared_ptr<const Graph>;

  // Labels must be unique and nonempty; edges are given as index pairs,
  // loops are rejected, duplicates are collapsed.
  static Ptr make(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& edges);
  static Ptr make_labeled(std::vector<std::string> labels,
                          const std::vector<std::pair<std::string, std::string>>& edges);

  int n() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int v) const { return labels_[check(v)]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> find(const std::string& label) const;
  // Like find but throws Error(unknown_vertex) naming the label.
  int require(const std::string& label) const;

  bool adjacent(int u, int v) const { return adj_[check(u)][check(v)]; }
  int degree(int v) const;
  VertexSet link(int v) const;
  VertexSet star(int v) const;  // link(v) plus v itself
  VertexSet link_of_set(const VertexSet& s) const;  // common neighbours of all of s; s nonempty
  VertexSet star_of_set(const VertexSet& s) const;   // s plus link_of_set(s)
  VertexSet vertices() const;
  std::vector<std::pair<int, int>> edges() const;  // i < j, sorted
  int edge_count() const;

  bool operator==(const Graph& o) const { return labels_ == o.labels_ && adj_ == o.adj_; }
  bool operator!=(const Graph& o) const { return !(*this == o); }

 private:
  Graph() = default;
  int check(int v) const {
    if (v < 0 || v >= n()) throw Error(errc::unknown_vertex, "vertex index out of range");
    return v;
  }
  std::vector<std::string> labels_;
  std::vector<std::vector<bool>> adj_;
};

void require_same_graph(const Graph::Ptr& a, const Graph::Ptr& b);

bool is_connected(const Graph& g);  // vacuously true for the empty graph
bool is_discrete(const Graph& g);
bool is_complete(const Graph& g);

// Connected components as sorted vertex sets, ordered by least vertex.
std::vector<VertexSet> connected_components(const Graph& g);

// Components of the graph induced on V minus st(v), ordered by least vertex.
std::vector<VertexSet> components_minus_star(const Graph& g, int v);

// Vertices adjacent to every other vertex (the centre of the defining graph;
// these generate the centre of the group).
VertexSet graph_center(const Graph& g);

// u <= v iff lk(u) is contained in st(v). This is the domination preorder;
// reflexivity needs the star on the right (lk(u) may contain u's neighbours
// but never u, while st includes v itself).
bool dominates_leq(const Graph& g, int u, int v);

struct PreorderAnalysis {
  std::vector<std::vector<bool>> leq;       // vertex relation, leq[u][v] = (u <= v)
  std::vector<int> class_of;                // vertex -> class id
  std::vector<VertexSet> classes;           // class id -> members; ids sorted by least member
  std::vector<bool> abelian;                // class spans a clique (else an independent set)
  std::vector<std::vector<bool>> class_lt;  // strict order on classes
  std::vector<int> maximal_classes;         // ids with nothing strictly above
  // Admissible enumeration: vertices listed so u <= w only if u's position
  // is <= w's position or they share a class; among eligible classes the one
  // with the smallest least-vertex goes first.
  std::vector<int> order;
  std::vector<int> ordered_classes;  // class ids in enumeration order
  std::vector<int> class_starts;     // prefix offsets into `order`, ends with n
};

PreorderAnalysis preorder_analysis(const Graph& g);

// Exact maximum independent set by backtracking; returns a witness set.
// Intended for the small graphs this toolkit targets.
VertexSet max_independent_set(const Graph& g);

// All adjacency-preserving vertex permutations (perm[v] = image of v),
// lexicographically sorted; identity first.
std::vector<std::vector<int>> graph_automorphisms(const Graph& g);

// Induced subgraph keeping original labels. to_parent maps new index -> old,
// from_parent maps old -> new (-1 when dropped).
struct Subgraph {
  Graph::Ptr graph;
  std::vector<int> to_parent;
  std::vector<int> from_parent;
};
Subgraph induce(const Graph::Ptr& g, const VertexSet& keep);

// Splits a graph into its components with at least two vertices (in vertex
// order, as induced subgraphs) plus the count of isolated vertices.
struct ConnectedDecomposition {
  std::vector<Subgraph> components;
  int free_rank = 0;
};
ConnectedDecomposition connected_decomposition(const Graph::Ptr& g);

}  // namespace raag
