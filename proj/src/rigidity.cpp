#include "raag/rigidity.hpp"

#include <algorithm>
#include <queue>

namespace raag {

SubgroupSpec build_subgroup_spec(Graph::Ptr g, std::vector<Generator> gens) {
  const int n = g->n();
  SubgroupSpec s;
  s.leq.assign(n, std::vector<bool>(n, false));
  for (int v = 0; v < n; ++v) s.leq[v][v] = true;
  for (const Generator& gen : gens)
    if (gen.kind == Generator::Kind::Transvection) s.leq[gen.i][gen.j] = true;
  // Reflexive-transitive closure (Floyd-Warshall flavoured).
  for (int m = 0; m < n; ++m)
    for (int u = 0; u < n; ++u)
      if (s.leq[u][m])
        for (int v = 0; v < n; ++v)
          if (s.leq[m][v]) s.leq[u][v] = true;

  s.graph = std::move(g);
  s.gens = std::move(gens);

  s.class_of.assign(n, -1);
  for (int v = 0; v < n; ++v) {
    if (s.class_of[v] >= 0) continue;
    int id = static_cast<int>(s.classes.size());
    VertexSet cls;
    for (int u = v; u < n; ++u)
      if (s.class_of[u] < 0 && s.leq[u][v] && s.leq[v][u]) {
        s.class_of[u] = id;
        cls.push_back(u);
      }
    s.classes.push_back(std::move(cls));
  }

  const int k = static_cast<int>(s.classes.size());
  s.abelian.assign(k, true);
  for (int c = 0; c < k; ++c) {
    const VertexSet& cls = s.classes[c];
    for (size_t a = 0; a < cls.size(); ++a)
      for (size_t b = a + 1; b < cls.size(); ++b)
        if (!s.graph->adjacent(cls[a], cls[b])) s.abelian[c] = false;
  }

  s.class_lt.assign(k, std::vector<bool>(k, false));
  for (int c = 0; c < k; ++c)
    for (int d = 0; d < k; ++d)
      if (c != d) s.class_lt[c][d] = s.leq[s.classes[c].front()][s.classes[d].front()];

  std::vector<int> pending(k, 0);
  for (int c = 0; c < k; ++c)
    for (int d = 0; d < k; ++d)
      if (s.class_lt[c][d]) ++pending[d];
  std::priority_queue<std::pair<int, int>, std::vector<std::pair<int, int>>, std::greater<>> ready;
  for (int c = 0; c < k; ++c)
    if (pending[c] == 0) ready.push({s.classes[c].front(), c});
  while (!ready.empty()) {
    int c = ready.top().second;
    ready.pop();
    s.class_starts.push_back(static_cast<int>(s.order.size()));
    s.ordered_classes.push_back(c);
    for (int v : s.classes[c]) s.order.push_back(v);
    for (int d = 0; d < k; ++d)
      if (s.class_lt[c][d] && --pending[d] == 0) ready.push({s.classes[d].front(), d});
  }
  s.class_starts.push_back(n);
  return s;
}

int sl_dimension(const Graph& g) {
  if (g.n() < 1) throw Error(errc::bad_argument, "sl_dimension needs a nonempty graph");
  PreorderAnalysis p = preorder_analysis(g);
  int best = 1;
  for (size_t c = 0; c < p.classes.size(); ++c)
    if (p.abelian[c]) best = std::max(best, static_cast<int>(p.classes[c].size()));
  return best;
}

int sl_dimension_subgroup(const SubgroupSpec& spec) {
  int best = 1;
  for (size_t c = 0; c < spec.classes.size(); ++c)
    if (spec.abelian[c]) best = std::max(best, static_cast<int>(spec.classes[c].size()));
  return best;
}

std::vector<Block> block_profile(const SubgroupSpec& spec) {
  std::vector<Block> out;
  for (int c : spec.ordered_classes)
    out.push_back({spec.classes[c], static_cast<int>(spec.classes[c].size()), spec.abelian[c]});
  return out;
}

bool verify_block_conformance(const SubgroupSpec& spec) {
  const int n = spec.graph->n();
  std::vector<int> pos(n);
  for (int p = 0; p < n; ++p) pos[spec.order[p]] = p;
  std::vector<int> block_of(spec.classes.size());
  for (size_t b = 0; b < spec.ordered_classes.size(); ++b) block_of[spec.ordered_classes[b]] = static_cast<int>(b);
  for (const Generator& gen : spec.gens) {
    if (gen.kind == Generator::Kind::Symmetry) continue;  // symmetries permute blocks
    IntMatrix m = phi_matrix(Automorphism::from_generator(spec.graph, gen));
    for (int row = 0; row < n; ++row)
      for (int col = 0; col < n; ++col) {
        if (m.at(row, col) == 0) continue;
        int bc = spec.class_of[col], br = spec.class_of[row];
        if (bc == br) continue;
        // Entry lives in block (row class, col class): needs col <= row in
        // the subgroup order, which also forces lower-triangular layout.
        if (!spec.class_lt[bc][br]) return false;
        if (block_of[bc] > block_of[br]) return false;
        if (pos[col] > pos[row]) return false;
      }
  }
  return true;
}

std::vector<Generator> out0_generators(const Graph& g) {
  std::vector<Generator> out = enumerate_inversions(g);
  for (auto& x : enumerate_partial_conjugations(g)) out.push_back(std::move(x));
  for (auto& x : enumerate_transvections(g)) out.push_back(std::move(x));
  return out;
}

std::optional<Generator> map_generator_to_subgraph(const Graph::Ptr& g, const Subgraph& target,
                                                   const Generator& gen) {
  const std::vector<int>& down = target.from_parent;
  auto in_target = [&](int v) { return down[v] >= 0; };
  switch (gen.kind) {
    case Generator::Kind::Symmetry:
      throw Error(errc::unsupported_generator, "graph symmetries do not descend along this map");
    case Generator::Kind::Kijk:
      throw Error(errc::unsupported_generator,
                  "commutator transvections are outside the supported generator set");
    case Generator::Kind::Inversion:
      if (!in_target(gen.i)) return std::nullopt;
      return make_inversion(*target.graph, down[gen.i]);
    case Generator::Kind::Transvection:
      if (!in_target(gen.i) || !in_target(gen.j)) return std::nullopt;
      return make_transvection(*target.graph, down[gen.i], down[gen.j]);
    case Generator::Kind::PartialConj:
    case Generator::Kind::ExtendedPartialConj: {
      if (!in_target(gen.j)) return std::nullopt;
      VertexSet displaced;  // in parent coordinates
      for (const VertexSet& c : gen.components) displaced = vs_union(displaced, c);
      std::vector<VertexSet> kept;
      for (const VertexSet& c : components_minus_star(*target.graph, down[gen.j])) {
        bool met = false;
        for (int v : c)
          if (vs_contains(displaced, target.to_parent[v])) met = true;
        if (met) kept.push_back(c);
      }
      if (kept.empty()) return std::nullopt;
      if (kept.size() == 1) return make_partial_conj(*target.graph, down[gen.j], kept[0]);
      return make_extended_partial_conj(*target.graph, down[gen.j], std::move(kept));
    }
  }
  throw std::logic_error("unhandled generator kind");
}

Subgraph projection_link(const Graph::Ptr& g, int v) {
  PreorderAnalysis p = preorder_analysis(*g);
  if (v < 0 || v >= g->n()) throw Error(errc::unknown_vertex, "class representative out of range");
  int c = p.class_of[v];
  if (std::find(p.maximal_classes.begin(), p.maximal_classes.end(), c) == p.maximal_classes.end())
    throw Error(errc::not_maximal, "class of " + g->label(v) + " is not maximal in the domination order");
  return induce(g, g->link_of_set(p.classes[c]));
}

std::optional<Generator> project_generator(const Graph::Ptr& g, int v, const Generator& gen) {
  return map_generator_to_subgraph(g, projection_link(g, v), gen);
}

Subgraph restriction_target(const Graph::Ptr& g, const VertexSet& component) {
  if (is_connected(*g)) throw Error(errc::not_disconnected, "graph is connected");
  auto comps = connected_components(*g);
  if (std::find(comps.begin(), comps.end(), component) == comps.end())
    throw Error(errc::not_a_component, "the given set is not a connected component");
  if (component.size() < 2)
    throw Error(errc::not_a_component, "restriction needs a component with at least 2 vertices");
  return induce(g, component);
}

std::optional<Generator> restrict_to_component(const Graph::Ptr& g, const VertexSet& component,
                                               const Generator& gen) {
  return map_generator_to_subgraph(g, restriction_target(g, component), gen);
}

Subgraph exclusion_target(const Graph::Ptr& g) {
  if (is_connected(*g)) throw Error(errc::not_disconnected, "graph is connected");
  VertexSet isolated;
  for (int v = 0; v < g->n(); ++v)
    if (g->degree(v) == 0) isolated.push_back(v);
  return induce(g, isolated);
}

std::optional<Generator> exclude_to_free(const Graph::Ptr& g, const Generator& gen) {
  return map_generator_to_subgraph(g, exclusion_target(g), gen);
}

static MappedSet map_set(const Graph::Ptr& g, Subgraph target, const std::vector<Generator>& gens) {
  MappedSet out;
  out.target = std::move(target);
  std::vector<Generator> image;
  for (const Generator& gen : gens) {
    out.images.push_back(map_generator_to_subgraph(g, out.target, gen));
    if (out.images.back()) image.push_back(*out.images.back());
  }
  out.d_before = sl_dimension_subgroup(build_subgroup_spec(g, gens));
  out.spec = build_subgroup_spec(out.target.graph, std::move(image));
  out.d_after = sl_dimension_subgroup(out.spec);
  if (out.d_after > out.d_before)
    throw std::logic_error("generator mapping increased the SL dimension");
  return out;
}

MappedSet project_generator_set(const Graph::Ptr& g, int v, const std::vector<Generator>& gens) {
  return map_set(g, projection_link(g, v), gens);
}

MappedSet restrict_generator_set(const Graph::Ptr& g, const VertexSet& component,
                                 const std::vector<Generator>& gens) {
  return map_set(g, restriction_target(g, component), gens);
}

MappedSet exclude_generator_set(const Graph::Ptr& g, const std::vector<Generator>& gens) {
  return map_set(g, exclusion_target(g), gens);
}

std::unique_ptr<DecompNode> decomposition_tree(const Graph::Ptr& g) {
  auto node = std::make_unique<DecompNode>();
  node->vertices = g->labels();
  const int n = g->n();
  if (n == 0) {
    node->kind = DecompNode::Kind::LeafTrivial;
    return node;
  }
  if (n == 1) {
    node->kind = DecompNode::Kind::LeafGL;
    node->gl_size = 1;
    return node;
  }
  if (is_discrete(*g)) {
    node->kind = DecompNode::Kind::LeafOutF;
    node->free_rank = n;
    return node;
  }
  if (!is_connected(*g)) {
    node->kind = DecompNode::Kind::Disconnected;
    for (const VertexSet& c : connected_components(*g)) {
      if (c.size() == 1) {
        ++node->free_rank;
        continue;
      }
      node->children.push_back(decomposition_tree(induce(g, c).graph));
    }
    return node;
  }
  VertexSet center = graph_center(*g);
  if (!center.empty()) {
    VertexSet rest = vs_minus(g->vertices(), center);
    if (rest.empty()) {  // complete graph
      node->kind = DecompNode::Kind::LeafGL;
      node->gl_size = n;
      return node;
    }
    node->kind = DecompNode::Kind::CenterSplit;
    for (int v : center) node->center_class.push_back(g->label(v));
    node->gl_size = static_cast<int>(center.size());
    node->tr_rank = static_cast<int>(center.size() * rest.size());
    node->children.push_back(decomposition_tree(induce(g, rest).graph));
    return node;
  }
  node->kind = DecompNode::Kind::CenterlessProjection;
  node->kernel_note = "finitely generated free abelian";
  PreorderAnalysis p = preorder_analysis(*g);
  for (int c : p.maximal_classes) {
    std::vector<std::string> cls;
    for (int v : p.classes[c]) cls.push_back(g->label(v));
    node->child_classes.push_back(std::move(cls));
    node->children.push_back(decomposition_tree(induce(g, g->link_of_set(p.classes[c])).graph));
  }
  return node;
}

std::vector<std::string> tree_leaves(const DecompNode& n) {
  std::vector<std::string> out;
  switch (n.kind) {
    case DecompNode::Kind::LeafGL:
      out.push_back("GL_" + std::to_string(n.gl_size));
      break;
    case DecompNode::Kind::LeafOutF:
      out.push_back("Out(F_" + std::to_string(n.free_rank) + ")");
      break;
    case DecompNode::Kind::LeafTrivial:
      out.push_back("trivial");
      break;
    default:
      break;
  }
  if (n.kind == DecompNode::Kind::Disconnected && n.free_rank > 0)
    out.push_back("Out(F_" + std::to_string(n.free_rank) + ")");
  for (const auto& c : n.children) {
    auto sub = tree_leaves(*c);
    out.insert(out.end(), sub.begin(), sub.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

RankBoundVerdict rank_bound_check(const Graph& g, int real_rank) {
  RankBoundVerdict v;
  v.d_sl = sl_dimension(g);
  v.f_gamma = static_cast<int>(max_independent_set(g).size());
  v.real_rank = real_rank;
  v.hypothesis_met = real_rank >= 2;
  v.applies = v.hypothesis_met && real_rank >= v.d_sl;
  if (!v.hypothesis_met)
    v.statement = "hypothesis not met: the lattice must have real rank at least 2";
  else if (v.applies)
    v.statement = "every homomorphism from an irreducible lattice of real rank " +
                  std::to_string(real_rank) + " into Out of this group has finite image (" +
                  std::to_string(real_rank) + " >= d_SL = " + std::to_string(v.d_sl) + ")";
  else
    v.statement = "criterion does not apply: real rank " + std::to_string(real_rank) +
                  " is below d_SL = " + std::to_string(v.d_sl);
  return v;
}

ObligationsReport tmain_obligations(const SubgroupSpec& spec) {
  ObligationsReport r;
  r.m = sl_dimension_subgroup(spec);
  r.f = static_cast<int>(max_independent_set(*spec.graph).size());
  r.obligations.push_back("every homomorphism to SL_" + std::to_string(r.m) +
                          "(Z) has finite image");
  for (int N = 1; N <= r.f; ++N)
    r.obligations.push_back("every homomorphism to Out(F_" + std::to_string(N) +
                            ") has finite image");
  r.obligations.push_back("every homomorphism to Z is trivial");
  return r;
}

}  // namespace raag
