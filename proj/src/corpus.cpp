#include "raag/corpus.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <numeric>
#include <random>
#include <sstream>

#include "raag/autos.hpp"
#include "raag/intmat.hpp"
#include "raag/rigidity.hpp"
#include "raag/series.hpp"
#include "raag/word.hpp"

namespace raag {

std::vector<Graph::Ptr> enumerate_graphs(int n) {
  if (n < 0) throw Error(errc::bad_argument, "vertex count must be >= 0");
  if (n > 6) throw Error(errc::cap_exceeded, "graph enumeration is guarded at 6 vertices");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  const int m = static_cast<int>(pairs.size());
  std::vector<std::vector<int>> pair_bit(n, std::vector<int>(n, -1));
  for (int t = 0; t < m; ++t) {
    pair_bit[pairs[t].first][pairs[t].second] = t;
    pair_bit[pairs[t].second][pairs[t].first] = t;
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> perms;
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back("v" + std::to_string(i));

  std::vector<Graph::Ptr> out;
  const uint32_t total = 1u << m;
  for (uint32_t mask = 0; mask < total; ++mask) {
    bool least = true;
    for (const auto& p : perms) {
      uint32_t img = 0;
      for (int t = 0; t < m; ++t)
        if (mask >> t & 1) img |= 1u << pair_bit[p[pairs[t].first]][p[pairs[t].second]];
      if (img < mask) {
        least = false;
        break;
      }
    }
    if (!least) continue;
    std::vector<std::pair<int, int>> edges;
    for (int t = 0; t < m; ++t)
      if (mask >> t & 1) edges.push_back(pairs[t]);
    out.push_back(Graph::make(labels, edges));
  }
  return out;
}

namespace {

std::string vset_str(const Graph& g, const VertexSet& s) {
  std::string r = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) r += ",";
    r += g.label(s[i]);
  }
  return r + "}";
}

GroupElement random_word(const Graph::Ptr& g, std::mt19937& rng, int max_len) {
  std::uniform_int_distribution<int> dlen(0, max_len);
  std::uniform_int_distribution<int> dv(0, g->n() - 1);
  std::uniform_int_distribution<int> ds(0, 1);
  std::vector<Letter> w;
  int len = dlen(rng);
  for (int t = 0; t < len; ++t) w.push_back({dv(rng), ds(rng) ? 1 : -1});
  return GroupElement::make(g, std::move(w));
}

Series random_series(const Graph::Ptr& g, std::mt19937& rng, int cap, int64_t mod) {
  Series s(g, cap, mod);
  std::uniform_int_distribution<int> dterms(0, 5);
  std::uniform_int_distribution<int> ddeg(0, cap);
  std::uniform_int_distribution<int> dv(0, g->n() - 1);
  std::uniform_int_distribution<int64_t> dc(-3, 3);
  int terms = dterms(rng);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> mono;
    int deg = ddeg(rng);
    for (int d = 0; d < deg; ++d) mono.push_back(dv(rng));
    s.add_term(std::move(mono), dc(rng));
  }
  return s;
}

Series reduce_mod(const Series& a, int64_t p) {
  Series r(a.graph(), a.cap(), p);
  for (const auto& [m, c] : a.terms()) r.add_term(m.v, c);
  return r;
}

// Rank of a list of degree-capped series viewed as integer vectors over
// their joint monomial support.
int series_rank(const std::vector<Series>& list) {
  std::map<Monomial, int, MonomialOrder> col;
  for (const Series& s : list)
    for (const auto& [m, c] : s.terms())
      col.emplace(m, 0);
  int next = 0;
  for (auto& [m, idx] : col) idx = next++;
  IntMatrix a(static_cast<int>(list.size()), std::max(next, 1));
  for (size_t r = 0; r < list.size(); ++r)
    for (const auto& [m, c] : list[r].terms()) a.at(static_cast<int>(r), col[m]) = c;
  return matrank(a);
}

class SuiteRunner {
 public:
  void run(const std::string& name, const std::function<std::string()>& body) {
    CheckResult r{name, true, ""};
    try {
      r.detail = body();
      r.pass = r.detail.empty();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    results.push_back(std::move(r));
  }
  std::vector<CheckResult> results;
};

uint64_t graph_seed(const Graph& g) {
  uint64_t h = 0x9e3779b97f4a7c15ull + g.n();
  for (auto [a, b] : g.edges()) h = h * 6364136223846793005ull + (a * 64 + b) + 1442695040888963407ull;
  return h;
}

}  // namespace

std::vector<CheckResult> run_invariant_suite(const Graph::Ptr& g) {
  SuiteRunner suite;
  const int n = g->n();
  PreorderAnalysis pre = preorder_analysis(*g);

  suite.run("preorder-reformulation", [&]() -> std::string {
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        if (pre.leq[u][v] != vs_subset(g->link(u), g->star(v)))
          return "leq mismatch at " + g->label(u) + "," + g->label(v);
        if (u == v) continue;
        bool same = pre.class_of[u] == pre.class_of[v];
        if (g->adjacent(u, v)) {
          if (same != (g->star(u) == g->star(v)))
            return "adjacent class test failed at " + g->label(u) + "," + g->label(v);
        } else {
          if (same != (g->link(u) == g->link(v)))
            return "non-adjacent class test failed at " + g->label(u) + "," + g->label(v);
        }
      }
    return "";
  });

  suite.run("class-structure", [&]() -> std::string {
    std::vector<int> seen(n, 0);
    for (size_t c = 0; c < pre.classes.size(); ++c) {
      const VertexSet& cl = pre.classes[c];
      if (cl.empty()) return "empty class";
      bool clique = true, indep = true;
      for (size_t a = 0; a < cl.size(); ++a)
        for (size_t b = a + 1; b < cl.size(); ++b)
          (g->adjacent(cl[a], cl[b]) ? indep : clique) = false;
      if (!clique && !indep) return "class " + vset_str(*g, cl) + " is neither clique nor independent";
      if (pre.abelian[c] != clique) return "abelian flag wrong on " + vset_str(*g, cl);
      for (int v : cl) {
        if (pre.class_of[v] != static_cast<int>(c)) return "class_of inconsistent";
        ++seen[v];
      }
    }
    for (int v = 0; v < n; ++v)
      if (seen[v] != 1) return "classes do not partition the vertices";
    return "";
  });

  suite.run("admissible-order", [&]() -> std::string {
    std::vector<int> seen(n, 0);
    for (int v : pre.order) ++seen[v];
    for (int v = 0; v < n; ++v)
      if (seen[v] != 1) return "order is not a permutation";
    for (size_t i = 0; i < pre.ordered_classes.size(); ++i)
      for (size_t j = i + 1; j < pre.ordered_classes.size(); ++j)
        if (pre.class_lt[pre.ordered_classes[j]][pre.ordered_classes[i]])
          return "dominance points backwards in the enumeration";
    for (size_t b = 0; b < pre.ordered_classes.size(); ++b) {
      VertexSet got(pre.order.begin() + pre.class_starts[b], pre.order.begin() + pre.class_starts[b + 1]);
      std::sort(got.begin(), got.end());
      if (got != pre.classes[pre.ordered_classes[b]]) return "class boundaries misplaced";
    }
    return "";
  });

  suite.run("components-partition", [&]() -> std::string {
    for (int j = 0; j < n; ++j) {
      VertexSet rest = vs_minus(g->vertices(), g->star(j));
      VertexSet covered;
      for (const VertexSet& piece : components_minus_star(*g, j)) {
        if (piece.empty()) return "empty component piece";
        covered = vs_union(covered, piece);
      }
      if (covered != rest) return "pieces do not partition V minus st(" + g->label(j) + ")";
      auto pieces = components_minus_star(*g, j);
      for (size_t a = 0; a < pieces.size(); ++a)
        for (size_t b = a + 1; b < pieces.size(); ++b)
          for (int u : pieces[a])
            for (int v : pieces[b])
              if (g->adjacent(u, v)) return "edge between component pieces";
    }
    return "";
  });

  suite.run("automorphism-group", [&]() -> std::string {
    auto auts = graph_automorphisms(*g);
    if (auts.empty()) return "no automorphisms at all";
    for (int v = 0; v < n; ++v)
      if (auts[0][v] != v) return "identity is not first";
    auto member = [&](const std::vector<int>& p) {
      return std::binary_search(auts.begin(), auts.end(), p);
    };
    for (const auto& p : auts) {
      std::vector<int> inv(n);
      for (int v = 0; v < n; ++v) inv[p[v]] = v;
      if (!member(inv)) return "not closed under inverse";
      for (const auto& q : auts) {
        std::vector<int> pq(n);
        for (int v = 0; v < n; ++v) pq[v] = p[q[v]];
        if (!member(pq)) return "not closed under composition";
      }
    }
    return "";
  });

  suite.run("center-class", [&]() -> std::string {
    VertexSet c = graph_center(*g);
    for (int v = 0; v < n; ++v) {
      bool central = g->star(v) == g->vertices();
      if (central != vs_contains(c, v)) return "center membership wrong at " + g->label(v);
    }
    if (!c.empty() && is_connected(*g)) {
      int cls = pre.class_of[c[0]];
      if (pre.classes[cls] != c) return "center is not a whole class";
      if (!pre.abelian[cls]) return "center class is not abelian";
    }
    return "";
  });

  std::mt19937 rng(graph_seed(*g));

  if (n >= 1) {
    suite.run("word-axioms", [&]() -> std::string {
      for (int trial = 0; trial < 40; ++trial) {
        GroupElement a = random_word(g, rng, 5);
        GroupElement b = random_word(g, rng, 5);
        GroupElement c = random_word(g, rng, 5);
        if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c))) return "associativity failed";
        if (!multiply(a, inverse(a)).is_identity()) return "right inverse failed";
        if (!multiply(inverse(a), a).is_identity()) return "left inverse failed";
        if (inverse(inverse(a)) != a) return "double inverse failed";
        if (GroupElement::make(g, a.word()) != a) return "normalization not idempotent";
        if (conjugate(a, b) != multiply(multiply(b, a), inverse(b))) return "conjugate identity failed";
        if (commutator(a, b) != multiply(multiply(a, b), inverse(multiply(b, a))))
          return "commutator identity failed";
      }
      return "";
    });

    suite.run("canonical-enumeration", [&]() -> std::string {
      auto words = enumerate_canonical(g, 3);
      for (size_t i = 1; i < words.size(); ++i)
        if (words[i - 1] == words[i]) return "duplicate canonical word";
      for (const GroupElement& w : words)
        for (size_t pl = 0; pl < w.word().size(); ++pl) {
          std::vector<Letter> prefix(w.word().begin(), w.word().begin() + pl);
          if (GroupElement::make(g, prefix).word() != prefix) return "prefix not canonical";
        }
      if (g->edge_count() == 0) {
        // Free group: n*(2n-1)^(k-1) reduced words of each length k >= 1.
        std::vector<int64_t> by_len(4, 0);
        for (const GroupElement& w : words) ++by_len[w.length()];
        int64_t expect = 2 * n;
        for (int k = 1; k <= 3; ++k) {
          if (by_len[k] != expect)
            return "free word count wrong at length " + std::to_string(k);
          expect *= 2 * n - 1;
        }
      }
      return "";
    });

    suite.run("series-algebra", [&]() -> std::string {
      for (int64_t mod : {int64_t{0}, int64_t{2}, int64_t{3}}) {
        for (int trial = 0; trial < 10; ++trial) {
          Series a = random_series(g, rng, 4, mod);
          Series b = random_series(g, rng, 4, mod);
          Series c = random_series(g, rng, 4, mod);
          if (series_mul(series_mul(a, b), c) != series_mul(a, series_mul(b, c)))
            return "series multiplication not associative";
          Series one = series_one(g, 4, mod);
          if (series_mul(one, a) != a || series_mul(a, one) != a) return "unit law failed";
          Series prod = series_mul(a, b);
          for (const auto& [m, coef] : prod.terms())
            if (coef == 0) return "zero coefficient stored";
        }
      }
      return "";
    });

    suite.run("magnus-homomorphism", [&]() -> std::string {
      for (int64_t mod : {int64_t{0}, int64_t{2}, int64_t{3}}) {
        for (int trial = 0; trial < 12; ++trial) {
          GroupElement a = random_word(g, rng, 4);
          GroupElement b = random_word(g, rng, 4);
          Series ma = magnus(a, 4, mod);
          Series mb = magnus(b, 4, mod);
          if (magnus(multiply(a, b), 4, mod) != series_mul(ma, mb)) return "mu not multiplicative";
          if (magnus(inverse(a), 4, mod) != series_invert(ma)) return "mu(inverse) mismatch";
          if (series_mul(ma, magnus(inverse(a), 4, mod)) != series_one(g, 4, mod))
            return "mu(a) mu(a^-1) is not 1";
        }
      }
      return "";
    });

    suite.run("magnus-mod-consistency", [&]() -> std::string {
      for (int64_t p : {int64_t{2}, int64_t{3}}) {
        for (int trial = 0; trial < 10; ++trial) {
          GroupElement a = random_word(g, rng, 4);
          if (reduce_mod(magnus(a, 4, 0), p) != magnus(a, 4, p)) return "mod does not commute with mu";
          Series x = random_series(g, rng, 4, 0);
          Series y = random_series(g, rng, 4, 0);
          if (reduce_mod(series_mul(x, y), p) != series_mul(reduce_mod(x, p), reduce_mod(y, p)))
            return "mod does not commute with multiplication";
        }
      }
      return "";
    });

    suite.run("magnus-faithful", [&]() -> std::string {
      for (int trial = 0; trial < 30; ++trial) {
        GroupElement a = random_word(g, rng, 5);
        int cap = std::max(1, a.length());
        bool trivial = magnus(a, cap, 0) == series_one(g, cap, 0);
        if (trivial != a.is_identity())
          return "mu-triviality disagrees with the word engine on " + word_to_string(a);
      }
      return "";
    });

    suite.run("bracket-depth", [&]() -> std::string {
      for (auto [i, j] : l2_basis(*g)) {
        GroupElement c = commutator(generator_element(g, i), generator_element(g, j));
        LcsDepth d = lcs_depth(c, 3);
        if (!(d.kind == LcsDepth::Kind::Finite && d.value == 2))
          return "weight-2 bracket depth is not 2 at " + g->label(i) + "," + g->label(j);
        for (int k = 0; k < n; ++k) {
          if (k == i || k == j) continue;
          GroupElement c3 = commutator(c, generator_element(g, k));
          if (!lcs_membership(c3, 3)) return "weight-3 bracket escaped gamma_3";
        }
      }
      return "";
    });

    suite.run("l2-rank", [&]() -> std::string {
      auto basis = l2_basis(*g);
      int expect = n * (n - 1) / 2 - g->edge_count();
      if (static_cast<int>(basis.size()) != expect)
        return "basis size " + std::to_string(basis.size()) + " != " + std::to_string(expect);
      auto images = l2_basis_images(g);
      if (series_rank(images) != static_cast<int>(images.size()))
        return "basis images are dependent";
      return "";
    });

    suite.run("tau1-agreement", [&]() -> std::string {
      for (const Generator& gen : torelli_generators(*g)) {
        Automorphism a = Automorphism::from_generator(g, gen);
        if (!is_torelli(a)) return generator_to_string(*g, gen) + " is not Torelli";
        if (tau1_formula(*g, gen) != tau1_matrix(a))
          return "tau1 closed form disagrees with the series route on " +
                 generator_to_string(*g, gen);
      }
      return "";
    });

    suite.run("h1-consistency", [&]() -> std::string {
      H1Report rep = torelli_h1_report(*g);
      auto gens = torelli_generators(*g);
      auto basis = l2_basis(*g);
      if (rep.generators != static_cast<int64_t>(gens.size())) return "generator count wrong";
      if (rep.ambient != static_cast<int64_t>(n) * static_cast<int64_t>(basis.size()))
        return "ambient dimension wrong";
      const int width = n * static_cast<int>(basis.size());
      IntMatrix stacked(static_cast<int>(gens.size()), std::max(width, 1));
      for (size_t r = 0; r < gens.size(); ++r) {
        IntMatrix t = tau1_matrix(Automorphism::from_generator(g, gens[r]));
        for (int row = 0; row < t.rows(); ++row)
          for (int c = 0; c < t.cols(); ++c)
            stacked.at(static_cast<int>(r), row * t.cols() + c) = t.at(row, c);
      }
      if (rep.rank != matrank(stacked)) return "rank differs from the series route";
      return "";
    });

    suite.run("phi-table", [&]() -> std::string {
      for (const Generator& gen : laurence_generators(*g)) {
        IntMatrix phi = phi_matrix(Automorphism::from_generator(g, gen));
        IntMatrix expect = IntMatrix::identity(n);
        switch (gen.kind) {
          case Generator::Kind::Transvection:
            expect.at(gen.j, gen.i) += 1;
            break;
          case Generator::Kind::Inversion:
            expect.at(gen.i, gen.i) = -1;
            break;
          case Generator::Kind::Symmetry:
            expect = IntMatrix(n, n);
            for (int v = 0; v < n; ++v) expect.at(gen.perm[v], v) = 1;
            break;
          default:
            break;  // conjugations: identity
        }
        if (phi != expect)
          return "Phi wrong for " + generator_to_string(*g, gen);
      }
      for (const Generator& gen : torelli_generators(*g))
        if (phi_matrix(Automorphism::from_generator(g, gen)) != IntMatrix::identity(n))
          return "Phi of a Torelli generator is not the identity";
      return "";
    });

    suite.run("phi-multiplicative", [&]() -> std::string {
      auto gens = laurence_generators(*g);
      if (gens.empty()) return "";
      std::uniform_int_distribution<int> dg(0, static_cast<int>(gens.size()) - 1);
      std::uniform_int_distribution<int> de(0, 1);
      for (int trial = 0; trial < 10; ++trial) {
        std::vector<std::pair<Generator, int>> word;
        int len = trial % 4 + 1;
        for (int t = 0; t < len; ++t) word.emplace_back(gens[dg(rng)], de(rng) ? 1 : -1);
        Automorphism a = Automorphism::from_word(g, word);
        IntMatrix prod = IntMatrix::identity(n);
        for (const auto& [gen, e] : word)
          prod = matmul(prod, phi_matrix(Automorphism::from_generator(g, gen, e)));
        if (phi_matrix(a) != prod) return "Phi not multiplicative on a generator word";
      }
      return "";
    });

    suite.run("subgroup-classes-refine", [&]() -> std::string {
      SubgroupSpec spec = build_subgroup_spec(g, out0_generators(*g));
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
          if (spec.leq[u][v] && !pre.leq[u][v])
            return "subgroup domination exceeds graph domination";
      for (const VertexSet& cl : spec.classes) {
        for (int v : cl)
          if (pre.class_of[v] != pre.class_of[cl[0]])
            return "subgroup class straddles graph classes";
      }
      return "";
    });

    suite.run("block-conformance", [&]() -> std::string {
      SubgroupSpec spec = build_subgroup_spec(g, out0_generators(*g));
      if (!verify_block_conformance(spec)) return "a generator matrix leaves its blocks";
      return "";
    });

    suite.run("sl-monotonicity", [&]() -> std::string {
      auto gens = out0_generators(*g);
      for (int c : pre.maximal_classes) {
        MappedSet m = project_generator_set(g, pre.classes[c][0], gens);
        if (m.d_after > m.d_before)
          return "projection increased d_SL at class " + vset_str(*g, pre.classes[c]);
      }
      if (!is_connected(*g)) {
        for (const VertexSet& comp : connected_components(*g)) {
          if (comp.size() < 2) continue;
          MappedSet m = restrict_generator_set(g, comp, gens);
          if (m.d_after > m.d_before)
            return "restriction increased d_SL at " + vset_str(*g, comp);
        }
        MappedSet m = exclude_generator_set(g, gens);
        if (m.d_after > m.d_before) return "exclusion increased d_SL";
      }
      return "";
    });

    suite.run("rank-bound-monotone", [&]() -> std::string {
      int d = sl_dimension(*g);
      for (int r = 2; r <= d + 1; ++r) {
        RankBoundVerdict lo = rank_bound_check(*g, r);
        RankBoundVerdict hi = rank_bound_check(*g, r + 1);
        if (lo.applies && !hi.applies) return "applies is not monotone in the rank";
        if (lo.d_sl != d) return "verdict reports a different d_SL";
      }
      return "";
    });

    suite.run("centre-probe", [&]() -> std::string {
      if (!graph_center(*g).empty()) return "";
      for (int64_t mod : {int64_t{0}, int64_t{2}, int64_t{3}}) {
        for (const GroupElement& w : enumerate_canonical_positive(g, 2)) {
          if (w.is_identity()) continue;
          int deg = w.length();
          Series a(g, deg + 1, mod);
          std::vector<int> mono;
          for (const Letter& l : w.word()) mono.push_back(l.vertex);
          a.add_term(mono, 1);
          if (!centralizer_witness(a, deg))
            return "no witness for monomial " + word_to_string(w) +
                   " mod " + std::to_string(mod);
        }
      }
      return "";
    });

    suite.run("johnson-inner", [&]() -> std::string {
      if (!graph_center(*g).empty()) return "";
      for (int trial = 0; trial < 8; ++trial) {
        GroupElement w = random_word(g, rng, 3);
        JohnsonLevel level = johnson_level(inner_automorphism(w), 3);
        LcsDepth depth = lcs_depth(w, 4);
        JohnsonLevel expect{JohnsonLevel::Kind::AtLeast, 3};
        if (depth.kind == LcsDepth::Kind::Finite && depth.value <= 3)
          expect = {JohnsonLevel::Kind::Finite, depth.value};
        if (!(level == expect))
          return "inner level " + johnson_level_to_string(level) + " vs depth " +
                 depth_to_string(depth) + " on " + word_to_string(w);
      }
      return "";
    });
  }

  suite.run("decomposition-sanity", [&]() -> std::string {
    auto root = decomposition_tree(g);
    std::function<std::string(const DecompNode&)> walk = [&](const DecompNode& node) -> std::string {
      for (const auto& child : node.children) {
        if (child->vertices.size() >= node.vertices.size()) return "child not strictly smaller";
        std::string r = walk(*child);
        if (!r.empty()) return r;
      }
      switch (node.kind) {
        case DecompNode::Kind::Disconnected: {
          size_t covered = node.free_rank;
          for (const auto& child : node.children) covered += child->vertices.size();
          if (covered != node.vertices.size()) return "disconnected split loses vertices";
          break;
        }
        case DecompNode::Kind::CenterSplit:
          if (node.gl_size != static_cast<int>(node.center_class.size()))
            return "gl_size differs from the center class";
          if (node.tr_rank !=
              node.gl_size * static_cast<int>(node.vertices.size() - node.center_class.size()))
            return "tr_rank is not |class| * |link|";
          break;
        case DecompNode::Kind::CenterlessProjection:
          if (node.kernel_note.empty()) return "missing kernel note";
          if (node.children.empty()) return "projection node without children";
          break;
        case DecompNode::Kind::LeafGL:
          if (node.gl_size < 1) return "GL leaf without a size";
          break;
        case DecompNode::Kind::LeafOutF:
          if (node.free_rank < 2) return "Out(F) leaf needs rank >= 2";
          break;
        case DecompNode::Kind::LeafTrivial:
          if (!node.vertices.empty()) return "trivial leaf on a nonempty graph";
          break;
      }
      return "";
    };
    std::string r = walk(*root);
    if (!r.empty()) return r;
    tree_leaves(*root);
    return "";
  });

  return suite.results;
}

std::vector<CorpusEntry> run_corpus(int k, bool parallel) {
  if (k < 1) throw Error(errc::bad_argument, "corpus needs at least 1 vertex");
  if (k > 6) throw Error(errc::cap_exceeded, "corpus guard: max-vertices must be <= 6");
  std::vector<Graph::Ptr> graphs = enumerate_graphs(k);
  std::vector<CorpusEntry> out(graphs.size());
  auto job = [&](int idx) {
    CorpusEntry e;
    std::ostringstream id;
    id << "n" << k << "#" << std::setw(2) << std::setfill('0') << idx;
    e.id = id.str();
    e.graph = graphs[idx];
    e.checks = run_invariant_suite(graphs[idx]);
    e.all_pass = std::all_of(e.checks.begin(), e.checks.end(),
                             [](const CheckResult& c) { return c.pass; });
    out[static_cast<size_t>(idx)] = std::move(e);
  };
  const int total = static_cast<int>(graphs.size());
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < total; ++i) job(i);
  } else {
    for (int i = 0; i < total; ++i) job(i);
  }
  return out;
}

}  // namespace raag
