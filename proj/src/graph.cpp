#include "raag/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace raag {

bool vs_contains(const VertexSet& s, int v) {
  return std::binary_search(s.begin(), s.end(), v);
}

bool vs_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

VertexSet vs_union(const VertexSet& a, const VertexSet& b) {
  VertexSet r;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

VertexSet vs_intersect(const VertexSet& a, const VertexSet& b) {
  VertexSet r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

VertexSet vs_minus(const VertexSet& a, const VertexSet& b) {
  VertexSet r;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

Graph::Ptr Graph::make(std::vector<std::string> labels,
                       const std::vector<std::pair<int, int>>& edges) {
  auto g = std::shared_ptr<Graph>(new Graph());
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (l.empty()) throw Error(errc::bad_graph, "empty vertex label");
    if (!seen.insert(l).second) throw Error(errc::bad_graph, "duplicate vertex label '" + l + "'");
  }
  g->labels_ = std::move(labels);
  const int n = g->n();
  g->adj_.assign(n, std::vector<bool>(n, false));
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw Error(errc::unknown_vertex, "edge endpoint out of range");
    if (u == v) throw Error(errc::bad_graph, "loop at vertex '" + g->labels_[u] + "'");
    g->adj_[u][v] = g->adj_[v][u] = true;
  }
  return g;
}

Graph::Ptr Graph::make_labeled(std::vector<std::string> labels,
                               const std::vector<std::pair<std::string, std::string>>& edges) {
  std::map<std::string, int> idx;
  for (size_t i = 0; i < labels.size(); ++i) idx[labels[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> e;
  for (const auto& [a, b] : edges) {
    auto ia = idx.find(a), ib = idx.find(b);
    if (ia == idx.end()) throw Error(errc::unknown_vertex, "unknown vertex '" + a + "' in edge list");
    if (ib == idx.end()) throw Error(errc::unknown_vertex, "unknown vertex '" + b + "' in edge list");
    e.emplace_back(ia->second, ib->second);
  }
  return make(std::move(labels), e);
}

std::optional<int> Graph::find(const std::string& label) const {
  for (int i = 0; i < n(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

int Graph::require(const std::string& label) const {
  if (auto i = find(label)) return *i;
  throw Error(errc::unknown_vertex, "unknown vertex '" + label + "'");
}

int Graph::degree(int v) const {
  check(v);
  int d = 0;
  for (int u = 0; u < n(); ++u) d += adj_[v][u] ? 1 : 0;
  return d;
}

VertexSet Graph::link(int v) const {
  check(v);
  VertexSet r;
  for (int u = 0; u < n(); ++u)
    if (adj_[v][u]) r.push_back(u);
  return r;
}

VertexSet Graph::star(int v) const {
  VertexSet r = link(v);
  r.insert(std::lower_bound(r.begin(), r.end(), v), v);
  return r;
}

VertexSet Graph::link_of_set(const VertexSet& s) const {
  if (s.empty()) throw Error(errc::bad_argument, "link_of_set needs a nonempty vertex set");
  VertexSet r = vertices();
  for (int v : s) r = vs_intersect(r, link(v));
  return r;
}

VertexSet Graph::star_of_set(const VertexSet& s) const {
  return vs_union(s, link_of_set(s));
}

VertexSet Graph::vertices() const {
  VertexSet r(n());
  for (int i = 0; i < n(); ++i) r[i] = i;
  return r;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n(); ++i)
    for (int j = i + 1; j < n(); ++j)
      if (adj_[i][j]) e.emplace_back(i, j);
  return e;
}

int Graph::edge_count() const { return static_cast<int>(edges().size()); }

void require_same_graph(const Graph::Ptr& a, const Graph::Ptr& b) {
  if (a == b) return;
  if (!a || !b || *a != *b)
    throw Error(errc::graph_mismatch, "operands live over different defining graphs");
}

static std::vector<VertexSet> components_of_subset(const Graph& g, const VertexSet& verts) {
  std::vector<bool> in(g.n(), false), done(g.n(), false);
  for (int v : verts) in[v] = true;
  std::vector<VertexSet> out;
  for (int s : verts) {
    if (done[s]) continue;
    VertexSet comp;
    std::queue<int> q;
    q.push(s);
    done[s] = true;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      comp.push_back(v);
      for (int u = 0; u < g.n(); ++u)
        if (in[u] && !done[u] && g.adjacent(v, u)) {
          done[u] = true;
          q.push(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
  return out;
}

bool is_connected(const Graph& g) {
  return g.n() == 0 || components_of_subset(g, g.vertices()).size() == 1;
}

bool is_discrete(const Graph& g) { return g.edge_count() == 0; }

bool is_complete(const Graph& g) {
  return 2 * g.edge_count() == g.n() * (g.n() - 1);
}

std::vector<VertexSet> connected_components(const Graph& g) {
  return components_of_subset(g, g.vertices());
}

std::vector<VertexSet> components_minus_star(const Graph& g, int v) {
  return components_of_subset(g, vs_minus(g.vertices(), g.star(v)));
}

VertexSet graph_center(const Graph& g) {
  VertexSet r;
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) == g.n() - 1) r.push_back(v);
  return r;
}

bool dominates_leq(const Graph& g, int u, int v) {
  return vs_subset(g.link(u), g.star(v));
}

PreorderAnalysis preorder_analysis(const Graph& g) {
  const int n = g.n();
  PreorderAnalysis p;
  p.leq.assign(n, std::vector<bool>(n, false));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) p.leq[u][v] = dominates_leq(g, u, v);

  p.class_of.assign(n, -1);
  for (int v = 0; v < n; ++v) {
    if (p.class_of[v] >= 0) continue;
    int id = static_cast<int>(p.classes.size());
    VertexSet cls;
    for (int u = v; u < n; ++u)
      if (p.class_of[u] < 0 && p.leq[u][v] && p.leq[v][u]) {
        p.class_of[u] = id;
        cls.push_back(u);
      }
    p.classes.push_back(std::move(cls));
  }

  const int k = static_cast<int>(p.classes.size());
  p.abelian.assign(k, false);
  for (int c = 0; c < k; ++c) {
    const VertexSet& cls = p.classes[c];
    bool clique = true;
    for (size_t a = 0; a < cls.size(); ++a)
      for (size_t b = a + 1; b < cls.size(); ++b)
        if (!g.adjacent(cls[a], cls[b])) clique = false;
    p.abelian[c] = clique;
  }

  p.class_lt.assign(k, std::vector<bool>(k, false));
  for (int c = 0; c < k; ++c)
    for (int d = 0; d < k; ++d)
      if (c != d) p.class_lt[c][d] = p.leq[p.classes[c].front()][p.classes[d].front()];

  for (int c = 0; c < k; ++c) {
    bool maximal = true;
    for (int d = 0; d < k; ++d)
      if (p.class_lt[c][d]) maximal = false;
    if (maximal) p.maximal_classes.push_back(c);
  }

  // Kahn's algorithm on the strict class order; ties go to the class whose
  // least vertex is smallest, which makes the enumeration deterministic.
  std::vector<int> pending(k, 0);
  for (int c = 0; c < k; ++c)
    for (int d = 0; d < k; ++d)
      if (p.class_lt[c][d]) ++pending[d];
  std::priority_queue<std::pair<int, int>, std::vector<std::pair<int, int>>, std::greater<>>
      ready;
  for (int c = 0; c < k; ++c)
    if (pending[c] == 0) ready.push({p.classes[c].front(), c});
  while (!ready.empty()) {
    int c = ready.top().second;
    ready.pop();
    p.class_starts.push_back(static_cast<int>(p.order.size()));
    p.ordered_classes.push_back(c);
    for (int v : p.classes[c]) p.order.push_back(v);
    for (int d = 0; d < k; ++d)
      if (p.class_lt[c][d] && --pending[d] == 0) ready.push({p.classes[d].front(), d});
  }
  p.class_starts.push_back(n);
  return p;
}

static void mis_search(const Graph& g, VertexSet cand, VertexSet cur, VertexSet& best) {
  if (cur.size() + cand.size() <= best.size()) return;
  if (cand.empty()) {
    best = cur;
    return;
  }
  int v = cand.front();
  VertexSet rest(cand.begin() + 1, cand.end());
  // Branch 1: take v, drop its neighbours.
  VertexSet taken = cur;
  taken.push_back(v);
  mis_search(g, vs_minus(rest, g.link(v)), taken, best);
  // Branch 2: skip v.
  mis_search(g, rest, cur, best);
}

VertexSet max_independent_set(const Graph& g) {
  VertexSet best;
  mis_search(g, g.vertices(), {}, best);
  std::sort(best.begin(), best.end());
  return best;
}

static void aut_search(const Graph& g, std::vector<int>& img, std::vector<bool>& used,
                       std::vector<std::vector<int>>& out) {
  const int n = g.n();
  int v = static_cast<int>(std::find(img.begin(), img.end(), -1) - img.begin());
  if (v == n) {
    out.push_back(img);
    return;
  }
  for (int w = 0; w < n; ++w) {
    if (used[w] || g.degree(w) != g.degree(v)) continue;
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      if (img[u] >= 0 && g.adjacent(u, v) != g.adjacent(img[u], w)) ok = false;
    if (!ok) continue;
    img[v] = w;
    used[w] = true;
    aut_search(g, img, used, out);
    img[v] = -1;
    used[w] = false;
  }
}

std::vector<std::vector<int>> graph_automorphisms(const Graph& g) {
  std::vector<std::vector<int>> out;
  std::vector<int> img(g.n(), -1);
  std::vector<bool> used(g.n(), false);
  aut_search(g, img, used, out);
  std::sort(out.begin(), out.end());
  return out;
}

ConnectedDecomposition connected_decomposition(const Graph::Ptr& g) {
  ConnectedDecomposition d;
  for (const VertexSet& c : connected_components(*g)) {
    if (c.size() >= 2)
      d.components.push_back(induce(g, c));
    else
      ++d.free_rank;
  }
  return d;
}

Subgraph induce(const Graph::Ptr& g, const VertexSet& keep) {
  Subgraph s;
  s.to_parent = keep;
  s.from_parent.assign(g->n(), -1);
  std::vector<std::string> labels;
  for (size_t i = 0; i < keep.size(); ++i) {
    s.from_parent[keep[i]] = static_cast<int>(i);
    labels.push_back(g->label(keep[i]));
  }
  std::vector<std::pair<int, int>> edges;
  for (size_t a = 0; a < keep.size(); ++a)
    for (size_t b = a + 1; b < keep.size(); ++b)
      if (g->adjacent(keep[a], keep[b]))
        edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  s.graph = Graph::make(std::move(labels), edges);
  return s;
}

}  // namespace raag
