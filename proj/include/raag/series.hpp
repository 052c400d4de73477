#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "raag/word.hpp"

namespace raag {

// Monomial in the monoid algebra: a canonical positive trace word (the
// lex-least shuffle of its letters). Ordered by degree, then lexicographically.
struct Monomial {
  std::vector<int> v;
  int degree() const { return static_cast<int>(v.size()); }
  bool operator==(const Monomial& o) const { return v == o.v; }
};

struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.v.size() != b.v.size()) return a.v.size() < b.v.size();
    return a.v < b.v;
  }
};

// Truncated element of the monoid algebra over Z (mod = 0) or Z/mod. Terms
// of degree > cap are discarded by every operation; two series interoperate
// only if graph, cap and mod all agree.
class Series {
 public:
  using Terms = std::map<Monomial, int64_t, MonomialOrder>;

  Series() = default;
  Series(Graph::Ptr g, int cap, int64_t mod) : graph_(std::move(g)), cap_(cap), mod_(mod) {
    if (cap_ < 0) throw Error(errc::bad_argument, "series cap must be >= 0");
    if (mod_ < 0 || mod_ == 1) throw Error(errc::bad_argument, "series modulus must be 0 or >= 2");
  }

  const Graph::Ptr& graph() const { return graph_; }
  int cap() const { return cap_; }
  int64_t mod() const { return mod_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Coefficient of m's commutation class; any shuffle of m names the same term.
  int64_t coeff(const Monomial& m) const;
  // Adds c times the canonical form of mono (reduced mod `mod`, dropped if
  // above cap or if the coefficient vanishes).
  void add_term(std::vector<int> mono, int64_t c);

  bool operator==(const Series& o) const;
  bool operator!=(const Series& o) const { return !(*this == o); }

 private:
  Graph::Ptr graph_;
  int cap_ = 0;
  int64_t mod_ = 0;
  Terms terms_;
};

Series series_zero(Graph::Ptr g, int cap, int64_t mod);
Series series_one(Graph::Ptr g, int cap, int64_t mod);
Series series_generator(Graph::Ptr g, int cap, int64_t mod, int vertex);

Series series_add(const Series& a, const Series& b);
Series series_sub(const Series& a, const Series& b);
Series series_neg(const Series& a);
Series series_scale(const Series& a, int64_t c);
Series series_mul(const Series& a, const Series& b);
Series lie_bracket(const Series& a, const Series& b);  // ab - ba

Series homogeneous_part(const Series& a, int degree);
// Least degree in [1, cap] with a nonzero part; nullopt if all vanish.
std::optional<int> lowest_positive_degree(const Series& a);
VertexSet part_support(const Series& a, int degree);

// Multiplicative inverse of a series with constant term 1, by the standard
// degree-by-degree recursion b_0 = 1, b_j = -sum_{i=1..j} a_i b_{j-i}.
Series series_invert(const Series& a);

// Magnus expansion: v |-> 1 + v, v^-1 |-> 1 - v + v^2 - ... (mod degree cap).
Series magnus(const GroupElement& g, int cap, int64_t mod = 0);

// Exact lower-central-series membership: g lies in gamma_c iff the Magnus
// expansion of g has no terms in degrees 1..c-1.
bool lcs_membership(const GroupElement& g, int c);

struct LcsDepth {
  enum class Kind { Finite, AtLeast, Infinite };
  Kind kind;
  int value = 0;  // Finite: the depth; AtLeast: cap+1
  bool operator==(const LcsDepth& o) const { return kind == o.kind && value == o.value; }
};
LcsDepth lcs_depth(const GroupElement& g, int cap);
std::string depth_to_string(const LcsDepth& d);

// Basis of the degree-2 layer of the associated Lie ring: commutators
// [v_i, v_j] for i < j non-adjacent, in lexicographic pair order.
std::vector<std::pair<int, int>> l2_basis(const Graph& g);
// Degree-2 images v_i v_j - v_j v_i of the basis pairs, cap 2.
std::vector<Series> l2_basis_images(const Graph::Ptr& g, int64_t mod = 0);

// Coordinates of g gamma_3 in that basis; requires g in gamma_2. The
// degree-2 part of magnus(g) must equal sum lambda_(i,j) (v_i v_j - v_j v_i);
// anything else indicates a corrupted input and raises logic_error.
std::vector<int64_t> l2_coordinates(const GroupElement& g);

// Left-normed-or-nested formal bracket over the vertex generators.
struct BracketExpr {
  int leaf = -1;  // vertex, when a leaf
  std::unique_ptr<BracketExpr> left, right;
  bool is_leaf() const { return leaf >= 0; }
  int weight() const { return is_leaf() ? 1 : left->weight() + right->weight(); }
};
// Syntax: "v3" or "[expr,expr]", e.g. "[[v1,v3],v5]".
BracketExpr parse_bracket(const Graph& g, const std::string& text);

struct BracketValue {
  GroupElement element;  // the group commutator the expression spells
  Series series;         // its Magnus expansion
  Series ring;           // the iterated ring commutator ab - ba of the leaves
  int weight;
};
// Needs cap >= weight; the degree-(weight) part of `series` equals `ring`.
BracketValue bracket_eval(Graph::Ptr g, const BracketExpr& e, int cap, int64_t mod = 0);

// For a nonzero truncated series a (cap >= upto+1) over a centerless graph,
// finds a vertex v whose bracket [v, a] is nonzero in degrees <= upto+1.
// Searches the least nonzero degree's support first: any v with
// supp(a_i) not contained in st(v) is guaranteed to work.
std::optional<int> centralizer_witness(const Series& a, int upto);

}  // namespace raag
