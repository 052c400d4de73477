#pragma once

#include <string>
#include <vector>

#include "raag/graph.hpp"

namespace raag {

struct Letter {
  int vertex;
  int sign;  // +1 or -1
  bool operator==(const Letter& o) const { return vertex == o.vertex && sign == o.sign; }
};

// Total order on letters used by the canonical form: by vertex, positive
// before negative. A canonical word is the lexicographically least word in
// its commutation class under this order.
inline int letter_key(const Letter& l) { return 2 * l.vertex + (l.sign < 0 ? 1 : 0); }

// Group element in canonical reduced form. Construction always normalizes:
// first cancel every pair v^e ... v^-e whose gap is supported in st(v)
// (such a pair commutes together and dies), then take the lex-least shuffle
// of the surviving reduced word. Two elements are equal iff their canonical
// words are identical letter by letter.
class GroupElement {
 public:
  GroupElement() = default;
  static GroupElement make(Graph::Ptr g, std::vector<Letter> word);

  const Graph::Ptr& graph() const { return graph_; }
  const std::vector<Letter>& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }
  bool is_identity() const { return word_.empty(); }
  bool positive() const;
  VertexSet support() const;

  bool operator==(const GroupElement& o) const;
  bool operator!=(const GroupElement& o) const { return !(*this == o); }
  bool operator<(const GroupElement& o) const;  // length, then letter keys

 private:
  Graph::Ptr graph_;
  std::vector<Letter> word_;
};

GroupElement identity_element(Graph::Ptr g);
GroupElement generator_element(Graph::Ptr g, int vertex, int sign = 1);

GroupElement multiply(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& a);
GroupElement conjugate(const GroupElement& a, const GroupElement& by);  // by * a * by^-1
GroupElement commutator(const GroupElement& a, const GroupElement& b);  // a b a^-1 b^-1
GroupElement power(const GroupElement& a, int e);

// Raw normalization on letter strings (exposed for tests and the oracle).
std::vector<Letter> cancel_reduce(const Graph& g, std::vector<Letter> w);
std::vector<Letter> lex_min_shuffle(const Graph& g, std::vector<Letter> w);

// Word syntax: whitespace-separated items "v3" and "v3^-1" (any vertex
// label; "^+1" and "^1" also accepted). Empty string is the identity.
GroupElement parse_word(Graph::Ptr g, const std::string& text);
std::string word_to_string(const GroupElement& a);  // identity prints "1"

// Every prefix of a canonical word is canonical, so canonical reduced words
// form a prefix-closed tree; this enumerates all of them up to max_length in
// lexicographic order. Counting them for the free group matches
// n*(2n-1)^(k-1) words of length k.
std::vector<GroupElement> enumerate_canonical(Graph::Ptr g, int max_length);
std::vector<GroupElement> enumerate_canonical_positive(Graph::Ptr g, int max_length);

}  // namespace raag
