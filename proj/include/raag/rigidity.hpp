#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "raag/autos.hpp"
#include "raag/graph.hpp"

namespace raag {

// A subgroup of Out given by a generator list T. The domination relation
// <=_G is the reflexive-transitive closure of the transvection pairs present
// in T (deciding membership of a transvection class in an arbitrary
// generated subgroup is not effective, so the closure stands in for it; the
// transitivity identity for transvections makes the closure sound).
struct SubgroupSpec {
  Graph::Ptr graph;
  std::vector<Generator> gens;
  std::vector<std::vector<bool>> leq;       // <=_G on vertices
  std::vector<int> class_of;
  std::vector<VertexSet> classes;           // ids by least member
  std::vector<bool> abelian;                // class spans a clique
  std::vector<std::vector<bool>> class_lt;  // strict order on classes
  std::vector<int> order;                   // admissible vertex enumeration
  std::vector<int> ordered_classes;
  std::vector<int> class_starts;            // offsets into order, ends with n
};

SubgroupSpec build_subgroup_spec(Graph::Ptr g, std::vector<Generator> gens);

// Largest visible SL block: size of the largest abelian class (floor 1).
int sl_dimension(const Graph& g);
int sl_dimension_subgroup(const SubgroupSpec& spec);

struct Block {
  VertexSet vertices;
  int size;
  bool abelian;
};
// Blocks in admissible enumeration order (dominated classes first).
std::vector<Block> block_profile(const SubgroupSpec& spec);
// Every non-symmetry generator matrix of the subgroup, reordered by the
// enumeration, must be block-lower-triangular with a nonzero (I,J) block
// only when class J <=_G class I.
bool verify_block_conformance(const SubgroupSpec& spec);

// Inversions, partial conjugations and transvections: the standard
// generators of the finite-index subgroup the projection maps act on.
std::vector<Generator> out0_generators(const Graph& g);

// Image of one generator on the induced target graph; nullopt = identity.
// Shared case table for projections, component restrictions and the
// exclusion onto the free part:
//   inversion     survives iff its vertex lies in the target;
//   transvection  survives iff both endpoints lie in the target;
//   partial conj  needs its conjugator in the target, and then conjugates
//                 the components of target - st(conjugator) met by the
//                 original displaced set (else identity);
//   symmetries and commutator transvections are not supported.
std::optional<Generator> map_generator_to_subgraph(const Graph::Ptr& g, const Subgraph& target,
                                                   const Generator& gen);

// Target of the projection at a maximal class: the common link lk[v].
// v may be any member of the class; throws Error(not_maximal) otherwise.
Subgraph projection_link(const Graph::Ptr& g, int v);
std::optional<Generator> project_generator(const Graph::Ptr& g, int v, const Generator& gen);

// Restriction to a connected component (>= 2 vertices) of a disconnected
// graph, and the exclusion map onto the discrete graph of isolated vertices.
Subgraph restriction_target(const Graph::Ptr& g, const VertexSet& component);
std::optional<Generator> restrict_to_component(const Graph::Ptr& g, const VertexSet& component,
                                               const Generator& gen);
Subgraph exclusion_target(const Graph::Ptr& g);
std::optional<Generator> exclude_to_free(const Graph::Ptr& g, const Generator& gen);

struct MappedSet {
  Subgraph target;
  std::vector<std::optional<Generator>> images;  // parallel to the input list
  SubgroupSpec spec;                             // image set, identities dropped
  int d_before = 1;
  int d_after = 1;
};
// Maps a whole generator set and rebuilds the subgroup data on the target;
// checks the monotonicity invariant d_after <= d_before (logic_error if it
// ever failed).
MappedSet project_generator_set(const Graph::Ptr& g, int v, const std::vector<Generator>& gens);
MappedSet restrict_generator_set(const Graph::Ptr& g, const VertexSet& component,
                                 const std::vector<Generator>& gens);
MappedSet exclude_generator_set(const Graph::Ptr& g, const std::vector<Generator>& gens);

struct DecompNode {
  enum class Kind { Disconnected, CenterSplit, CenterlessProjection, LeafGL, LeafOutF, LeafTrivial };
  Kind kind;
  std::vector<std::string> vertices;  // labels of this node's graph
  int free_rank = 0;                  // Disconnected: isolated vertices; LeafOutF: N
  int gl_size = 0;                    // CenterSplit, LeafGL
  int tr_rank = 0;                    // CenterSplit: |[v]| * |lk[v]|
  std::vector<std::string> center_class;                 // CenterSplit
  std::vector<std::vector<std::string>> child_classes;   // CenterlessProjection
  std::string kernel_note;                               // CenterlessProjection
  std::vector<std::unique_ptr<DecompNode>> children;
};

// Recursive structure of Out: split off components, then the center, then
// project at every maximal class; leaves are complete graphs, discrete
// graphs, or single vertices.
std::unique_ptr<DecompNode> decomposition_tree(const Graph::Ptr& g);
// Multiset of leaf descriptions like "GL_3" / "Out(F_2)", sorted.
std::vector<std::string> tree_leaves(const DecompNode& n);

struct RankBoundVerdict {
  int d_sl;
  int f_gamma;      // size of the largest independent set
  int real_rank;
  bool hypothesis_met;  // real rank >= 2
  bool applies;
  std::string statement;
};
RankBoundVerdict rank_bound_check(const Graph& g, int real_rank);

struct ObligationsReport {
  int m;  // d_SL of the subgroup
  int f;  // F(Gamma)
  std::vector<std::string> obligations;
};
ObligationsReport tmain_obligations(const SubgroupSpec& spec);

}  // namespace raag
