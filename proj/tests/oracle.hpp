// Independent reference implementations used only by tests. Everything here
// favors brute force over cleverness so it can disagree with the library.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <vector>

#include "raag/graph.hpp"
#include "raag/word.hpp"

namespace oracle {

using raag::Graph;
using raag::Letter;
using raag::VertexSet;

// Exhaustive rewriting-graph search over all words of length <= max_len on
// 2n letters. Words are packed base-2n, shorter lengths first, first letter
// most significant, so index order is (length, lex) in the same letter order
// the library uses. Two words are equal in the group iff they reach, via
// adjacent commuting swaps and adjacent inverse-pair cancellations, the same
// least index (= the lex-least word of minimal length in the class).
class RewritingOracle {
 public:
  RewritingOracle(const Graph& g, int max_len) : g_(g), base_(2 * g.n()), max_len_(max_len) {
    offset_.assign(max_len + 2, 0);
    uint64_t total = 0, pw = 1;
    for (int k = 0; k <= max_len; ++k) {
      offset_[k] = total;
      total += pw;
      pw *= base_;
    }
    offset_[max_len + 1] = total;
    class_id_.assign(total, -1);
    classify_all();
  }

  int64_t size() const { return static_cast<int64_t>(class_id_.size()); }

  uint64_t encode(const std::vector<Letter>& w) const {
    uint64_t idx = 0;
    for (const Letter& l : w) idx = idx * base_ + (2 * l.vertex + (l.sign < 0 ? 1 : 0));
    return offset_[w.size()] + idx;
  }

  std::vector<Letter> decode(uint64_t idx) const {
    int len = 0;
    while (idx >= offset_[len + 1]) ++len;
    uint64_t code = idx - offset_[len];
    std::vector<Letter> w(len);
    for (int t = len - 1; t >= 0; --t) {
      int digit = static_cast<int>(code % base_);
      code /= base_;
      w[t] = {digit / 2, digit % 2 ? -1 : 1};
    }
    return w;
  }

  int class_of(uint64_t idx) const { return class_id_[idx]; }
  // The least index in the class: lex-least word of minimal length.
  uint64_t canonical_index(uint64_t idx) const { return representative_[class_id_[idx]]; }

  bool equal(const std::vector<Letter>& a, const std::vector<Letter>& b) const {
    return class_id_[encode(a)] == class_id_[encode(b)];
  }

 private:
  void classify_all() {
    std::vector<uint64_t> queue;
    for (uint64_t start = 0; start < class_id_.size(); ++start) {
      if (class_id_[start] != -1) continue;
      int cls = -1;
      queue.clear();
      queue.push_back(start);
      std::vector<uint64_t> seen{start};
      // Mark with a sentinel so the BFS does not revisit; resolve later.
      class_id_[start] = -2;
      for (size_t qi = 0; qi < queue.size(); ++qi) {
        std::vector<Letter> w = decode(queue[qi]);
        for (size_t t = 0; t + 1 < w.size(); ++t) {
          if (w[t].vertex == w[t + 1].vertex) {
            if (w[t].sign != w[t + 1].sign) {
              std::vector<Letter> shrunk;
              shrunk.insert(shrunk.end(), w.begin(), w.begin() + t);
              shrunk.insert(shrunk.end(), w.begin() + t + 2, w.end());
              visit(encode(shrunk), cls, queue, seen);
            }
          } else if (g_.adjacent(w[t].vertex, w[t + 1].vertex)) {
            std::vector<Letter> swapped = w;
            std::swap(swapped[t], swapped[t + 1]);
            visit(encode(swapped), cls, queue, seen);
          }
        }
      }
      if (cls == -1) {
        cls = static_cast<int>(representative_.size());
        representative_.push_back(start);
      }
      for (uint64_t idx : seen) class_id_[idx] = cls;
    }
  }

  void visit(uint64_t idx, int& cls, std::vector<uint64_t>& queue, std::vector<uint64_t>& seen) {
    if (class_id_[idx] == -2) return;  // already queued in this wave
    if (class_id_[idx] != -1) {
      cls = class_id_[idx];  // touched an already classified word
      return;
    }
    class_id_[idx] = -2;
    queue.push_back(idx);
    seen.push_back(idx);
  }

  const Graph& g_;
  uint64_t base_;
  int max_len_;
  std::vector<uint64_t> offset_;
  std::vector<int> class_id_;
  std::vector<uint64_t> representative_;
};

// All adjacency-preserving permutations by filtering the full symmetric
// group (the library uses pruned backtracking instead).
inline std::vector<std::vector<int>> all_graph_automorphisms(const Graph& g) {
  const int n = g.n();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if (g.adjacent(u, v) != g.adjacent(p[u], p[v])) ok = false;
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Maximum independent set size over all 2^n subsets.
inline int max_independent_subsets(const Graph& g) {
  const int n = g.n();
  int best = 0;
  for (int mask = 0; mask < (1 << n); ++mask) {
    bool indep = true;
    for (int u = 0; u < n && indep; ++u)
      for (int v = u + 1; v < n && indep; ++v)
        if ((mask >> u & 1) && (mask >> v & 1) && g.adjacent(u, v)) indep = false;
    if (indep) best = std::max(best, __builtin_popcount(static_cast<unsigned>(mask)));
  }
  return best;
}

// Lex-least shuffle of a positive word by breadth-first closure over
// adjacent commuting swaps (the library uses a greedy front instead).
inline std::vector<int> least_shuffle_positive(const Graph& g, const std::vector<int>& w) {
  std::vector<std::vector<int>> seen{w};
  std::vector<int> best = w;
  for (size_t qi = 0; qi < seen.size(); ++qi) {
    std::vector<int> cur = seen[qi];
    if (cur < best) best = cur;
    for (size_t t = 0; t + 1 < cur.size(); ++t) {
      if (cur[t] != cur[t + 1] && g.adjacent(cur[t], cur[t + 1])) {
        std::vector<int> nxt = cur;
        std::swap(nxt[t], nxt[t + 1]);
        if (std::find(seen.begin(), seen.end(), nxt) == seen.end()) seen.push_back(nxt);
      }
    }
  }
  return best;
}

}  // namespace oracle
