#pragma once

#include <optional>
#include <string>
#include <vector>

#include "raag/intmat.hpp"
#include "raag/series.hpp"
#include "raag/word.hpp"

namespace raag {

// One of the standard generators of the automorphism group of a
// right-angled Artin group (graph symmetries, inversions, partial
// conjugations, transvections) plus the commutator transvections
// v_i -> v_i [v_j, v_k] used by the Torelli generating set.
struct Generator {
  enum class Kind { Symmetry, Inversion, PartialConj, ExtendedPartialConj, Transvection, Kijk };
  Kind kind;
  std::vector<int> perm;                 // Symmetry: perm[v] = image vertex
  int i = -1, j = -1, k = -1;            // Inversion(i), Transvection(i,j), Kijk(i,j,k), conjugator j
  std::vector<VertexSet> components;     // PartialConj: one; ExtendedPartialConj: several

  bool operator==(const Generator& o) const {
    return kind == o.kind && perm == o.perm && i == o.i && j == o.j && k == o.k &&
           components == o.components;
  }
};

// Factories validate the defining constraints and throw
// Error(constraint_violation) naming the failed condition.
Generator make_symmetry(const Graph& g, std::vector<int> perm);
Generator make_inversion(const Graph& g, int i);
// Component must be exactly one connected component of the graph minus st(j).
Generator make_partial_conj(const Graph& g, int j, VertexSet component);
// Sugar: the component is the one containing i; requires i outside st(j).
Generator make_partial_conj_pair(const Graph& g, int i, int j);
Generator make_extended_partial_conj(const Graph& g, int j, std::vector<VertexSet> components);
// v_i -> v_i v_j; requires lk(i) contained in st(j) and i != j.
Generator make_transvection(const Graph& g, int i, int j);
// v_i -> v_i [v_j, v_k]; requires i, j, k distinct, lk(i) in st(j) and in
// st(k), and j, k non-adjacent. (These conditions force i to be adjacent to
// neither j nor k, so no separate check is needed.)
Generator make_kijk(const Graph& g, int i, int j, int k);

// Image of every vertex generator under gen^exponent (exponent +1 or -1).
std::vector<GroupElement> generator_images(Graph::Ptr g, const Generator& gen, int exponent = 1);

// sigma gen sigma^-1 for a graph symmetry sigma; always lands back in the
// same generator family with relabelled data.
Generator conjugate_by_symmetry(const Graph& g, const Generator& sigma, const Generator& gen);

std::string generator_to_string(const Graph& g, const Generator& gen);
// Parses the CLI syntax: sym:(1 2 3)(4 5), inv:2, pc:3/{1,5}, pc:1,3,
// epc:3/{1}{5}, tv:1,2, kijk:1,2,3 (all 1-based vertex indices).
Generator parse_generator(const Graph& g, const std::string& text);

std::vector<Generator> enumerate_symmetries(const Graph& g);
std::vector<Generator> enumerate_inversions(const Graph& g);
std::vector<Generator> enumerate_partial_conjugations(const Graph& g);
std::vector<Generator> enumerate_transvections(const Graph& g);
// The full Laurence generating set for Aut: symmetries, inversions, partial
// conjugations, transvections.
std::vector<Generator> laurence_generators(const Graph& g);
// Torelli generating set: all partial conjugations keyed by (conjugator,
// component) plus all K_ijk with j < k; deterministic order.
std::vector<Generator> torelli_generators(const Graph& g);

class Automorphism {
 public:
  // Validates: images over the same graph, every edge relation preserved,
  // and abelianization determinant +-1. A table built this way has no
  // generator word, so invert() is unavailable on it.
  static Automorphism from_images(Graph::Ptr g, std::vector<GroupElement> images);
  static Automorphism from_generator(Graph::Ptr g, const Generator& gen, int exponent = 1);
  static Automorphism identity_automorphism(Graph::Ptr g);
  // Composition, leftmost factor applied last.
  static Automorphism from_word(Graph::Ptr g, const std::vector<std::pair<Generator, int>>& word);

  const Graph::Ptr& graph() const { return graph_; }
  const std::vector<GroupElement>& images() const { return images_; }
  const std::optional<std::vector<std::pair<Generator, int>>>& word() const { return word_; }

  bool is_identity() const;
  bool operator==(const Automorphism& o) const;
  bool operator!=(const Automorphism& o) const { return !(*this == o); }

 private:
  Graph::Ptr graph_;
  std::vector<GroupElement> images_;
  std::optional<std::vector<std::pair<Generator, int>>> word_;
  friend Automorphism compose(const Automorphism&, const Automorphism&);
  friend Automorphism invert(const Automorphism&);
};

GroupElement apply(const Automorphism& a, const GroupElement& x);
// compose(a, b) acts as x -> a(b(x)).
Automorphism compose(const Automorphism& a, const Automorphism& b);
// Needs a generator word (throws Error(missing_word) on a raw image table).
Automorphism invert(const Automorphism& a);
// Conjugation by g: x -> g x g^-1.
Automorphism inner_automorphism(const GroupElement& g);

// Abelianization matrix: column k is the exponent vector of the image of
// v_k. Multiplicative for compose in the same order.
IntMatrix phi_matrix(const Automorphism& a);
bool is_torelli(const Automorphism& a);

// First Johnson homomorphism of a Torelli automorphism as an n x |l2_basis|
// integer matrix: row l holds the degree-2 coordinates of phi(v_l) v_l^-1.
IntMatrix tau1_matrix(const Automorphism& a);
// Closed-form tau1 for partial conjugations and K_ijk (no series expansion).
IntMatrix tau1_formula(const Graph& g, const Generator& gen);

struct JohnsonLevel {
  enum class Kind { Finite, AtLeast };
  Kind kind;
  int value = 0;
  bool operator==(const JohnsonLevel& o) const { return kind == o.kind && value == o.value; }
};
// Largest c <= cap such that a lies in the c-th Johnson filtration stage
// (phi(v_l) v_l^-1 in gamma_{c+1} for every l). Requires a Torelli input,
// so the result is Finite(c) with 1 <= c <= cap, or the sentinel
// AtLeast(cap) when membership still holds at cap+1 (identity included).
JohnsonLevel johnson_level(const Automorphism& a, int cap);
std::string johnson_level_to_string(const JohnsonLevel& l);

struct H1Report {
  int64_t generators;  // |Torelli generating set|
  int64_t rank;        // rank of its tau1 image inside Hom(L1, L2)
  int64_t ambient;     // n * |l2_basis|
};
H1Report torelli_h1_report(const Graph& g);

}  // namespace raag
