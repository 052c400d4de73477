#include "raag/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace raag {

std::vector<Letter> cancel_reduce(const Graph& g, std::vector<Letter> w) {
  // A pair v^e ... v^-e cancels when everything strictly between lies in
  // st(v): the left letter commutes rightward across the gap. Scan restarts
  // after each cancellation; each pass removes two letters, so this ends.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < w.size() && !changed; ++i) {
      const int v = w[i].vertex;
      for (size_t j = i + 1; j < w.size(); ++j) {
        if (w[j].vertex == v) {
          if (w[j].sign == -w[i].sign) {
            w.erase(w.begin() + j);
            w.erase(w.begin() + i);
            changed = true;
            break;
          }
          // Same letter again: v is in st(v), keep scanning.
        } else if (!g.adjacent(w[j].vertex, v)) {
          break;  // gap support left st(v); no j beyond here can pair with i
        }
      }
    }
  }
  return w;
}

std::vector<Letter> lex_min_shuffle(const Graph& g, std::vector<Letter> w) {
  // Positions with equal or non-adjacent vertices must keep their order;
  // all other swaps are free. The lex-least representative is the greedy
  // linear extension: repeatedly emit the smallest letter none of whose
  // remaining predecessors blocks it. Equal letters can never be
  // simultaneously unblocked (same vertex blocks), so the choice is unique.
  std::vector<Letter> out;
  out.reserve(w.size());
  while (!w.empty()) {
    size_t best = w.size();
    for (size_t k = 0; k < w.size(); ++k) {
      bool free_to_front = true;
      for (size_t m = 0; m < k && free_to_front; ++m)
        if (!g.adjacent(w[m].vertex, w[k].vertex)) free_to_front = false;
      if (free_to_front && (best == w.size() || letter_key(w[k]) < letter_key(w[best])))
        best = k;
    }
    out.push_back(w[best]);
    w.erase(w.begin() + best);
  }
  return out;
}

GroupElement GroupElement::make(Graph::Ptr g, std::vector<Letter> word) {
  if (!g) throw Error(errc::bad_graph, "null graph");
  for (const Letter& l : word) {
    if (l.vertex < 0 || l.vertex >= g->n())
      throw Error(errc::unknown_vertex, "letter vertex out of range");
    if (l.sign != 1 && l.sign != -1) throw Error(errc::bad_argument, "letter sign must be +1 or -1");
  }
  GroupElement e;
  e.word_ = lex_min_shuffle(*g, cancel_reduce(*g, std::move(word)));
  e.graph_ = std::move(g);
  return e;
}

bool GroupElement::positive() const {
  return std::all_of(word_.begin(), word_.end(), [](const Letter& l) { return l.sign > 0; });
}

VertexSet GroupElement::support() const {
  VertexSet s;
  for (const Letter& l : word_) s.push_back(l.vertex);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool GroupElement::operator==(const GroupElement& o) const {
  if (graph_ && o.graph_) require_same_graph(graph_, o.graph_);
  return word_ == o.word_;
}

bool GroupElement::operator<(const GroupElement& o) const {
  if (word_.size() != o.word_.size()) return word_.size() < o.word_.size();
  for (size_t i = 0; i < word_.size(); ++i)
    if (letter_key(word_[i]) != letter_key(o.word_[i]))
      return letter_key(word_[i]) < letter_key(o.word_[i]);
  return false;
}

GroupElement identity_element(Graph::Ptr g) { return GroupElement::make(std::move(g), {}); }

GroupElement generator_element(Graph::Ptr g, int vertex, int sign) {
  return GroupElement::make(std::move(g), {{vertex, sign}});
}

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
  require_same_graph(a.graph(), b.graph());
  std::vector<Letter> w = a.word();
  w.insert(w.end(), b.word().begin(), b.word().end());
  return GroupElement::make(a.graph(), std::move(w));
}

GroupElement inverse(const GroupElement& a) {
  std::vector<Letter> w(a.word().rbegin(), a.word().rend());
  for (Letter& l : w) l.sign = -l.sign;
  return GroupElement::make(a.graph(), std::move(w));
}

GroupElement conjugate(const GroupElement& a, const GroupElement& by) {
  return multiply(multiply(by, a), inverse(by));
}

GroupElement commutator(const GroupElement& a, const GroupElement& b) {
  return multiply(multiply(a, b), multiply(inverse(a), inverse(b)));
}

GroupElement power(const GroupElement& a, int e) {
  GroupElement r = identity_element(a.graph());
  GroupElement base = e < 0 ? inverse(a) : a;
  for (int i = 0; i < std::abs(e); ++i) r = multiply(r, base);
  return r;
}

GroupElement parse_word(Graph::Ptr g, const std::string& text) {
  std::vector<Letter> w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    std::string label = tok;
    int exp = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      label = tok.substr(0, caret);
      std::string e = tok.substr(caret + 1);
      try {
        size_t used = 0;
        exp = std::stoi(e, &used);
        if (used != e.size()) throw std::invalid_argument(e);
      } catch (const std::exception&) {
        throw Error(errc::parse_error, "bad exponent '" + e + "' in word token '" + tok + "'");
      }
    }
    if (label.empty()) throw Error(errc::parse_error, "empty vertex name in word token '" + tok + "'");
    int v = g->require(label);
    for (int i = 0; i < std::abs(exp); ++i) w.push_back({v, exp < 0 ? -1 : 1});
  }
  return GroupElement::make(std::move(g), std::move(w));
}

std::string word_to_string(const GroupElement& a) {
  if (a.is_identity()) return "1";
  std::string s;
  for (const Letter& l : a.word()) {
    if (!s.empty()) s += ' ';
    s += a.graph()->label(l.vertex);
    if (l.sign < 0) s += "^-1";
  }
  return s;
}

static void enum_tree(const Graph::Ptr& g, int max_length, bool positive_only,
                      std::vector<Letter>& stem, std::vector<GroupElement>& out) {
  out.push_back(GroupElement::make(g, stem));
  if (static_cast<int>(stem.size()) >= max_length) return;
  for (int v = 0; v < g->n(); ++v)
    for (int sign : {1, -1}) {
      if (positive_only && sign < 0) continue;
      stem.push_back({v, sign});
      // Canonical words are prefix-closed, so testing just the extension
      // keeps the search tree exact: a non-canonical stem has no canonical
      // descendants.
      if (GroupElement::make(g, stem).word() == stem)
        enum_tree(g, max_length, positive_only, stem, out);
      stem.pop_back();
    }
}

std::vector<GroupElement> enumerate_canonical(Graph::Ptr g, int max_length) {
  std::vector<GroupElement> out;
  std::vector<Letter> stem;
  enum_tree(g, max_length, false, stem, out);
  return out;
}

std::vector<GroupElement> enumerate_canonical_positive(Graph::Ptr g, int max_length) {
  std::vector<GroupElement> out;
  std::vector<Letter> stem;
  enum_tree(g, max_length, true, stem, out);
  return out;
}

}  // namespace raag
