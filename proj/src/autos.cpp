#include "raag/autos.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace raag {

namespace {

void check_vertex(const Graph& g, int v, const char* role) {
  if (v < 0 || v >= g.n())
    throw Error(errc::unknown_vertex, std::string(role) + " vertex index out of range");
}

std::string vname(const Graph& g, int v) { return g.label(v); }

std::string set_names(const Graph& g, const VertexSet& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += g.label(s[i]);
  }
  return out + "}";
}

bool is_component_of_minus_star(const Graph& g, int j, const VertexSet& comp) {
  for (const VertexSet& c : components_minus_star(g, j))
    if (c == comp) return true;
  return false;
}

}  // namespace

Generator make_symmetry(const Graph& g, std::vector<int> perm) {
  if (static_cast<int>(perm.size()) != g.n())
    throw Error(errc::constraint_violation, "symmetry permutation has wrong length");
  std::vector<bool> seen(g.n(), false);
  for (int v : perm) {
    check_vertex(g, v, "symmetry image");
    if (seen[v]) throw Error(errc::constraint_violation, "symmetry permutation repeats a vertex");
    seen[v] = true;
  }
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (g.adjacent(u, v) != g.adjacent(perm[u], perm[v]))
        throw Error(errc::constraint_violation,
                    "permutation does not preserve adjacency between " + vname(g, u) + " and " +
                        vname(g, v));
  Generator gen{Generator::Kind::Symmetry};
  gen.perm = std::move(perm);
  return gen;
}

Generator make_inversion(const Graph& g, int i) {
  check_vertex(g, i, "inversion");
  Generator gen{Generator::Kind::Inversion};
  gen.i = i;
  return gen;
}

Generator make_partial_conj(const Graph& g, int j, VertexSet component) {
  check_vertex(g, j, "conjugator");
  std::sort(component.begin(), component.end());
  if (!is_component_of_minus_star(g, j, component))
    throw Error(errc::not_a_component, set_names(g, component) +
                                           " is not a connected component of the graph minus st(" +
                                           vname(g, j) + ")");
  Generator gen{Generator::Kind::PartialConj};
  gen.j = j;
  gen.components = {std::move(component)};
  return gen;
}

Generator make_partial_conj_pair(const Graph& g, int i, int j) {
  check_vertex(g, i, "conjugated");
  check_vertex(g, j, "conjugator");
  if (i == j || g.adjacent(i, j))
    throw Error(errc::constraint_violation,
                vname(g, i) + " lies in st(" + vname(g, j) + "), so no component contains it");
  for (const VertexSet& c : components_minus_star(g, j))
    if (vs_contains(c, i)) return make_partial_conj(g, j, c);
  throw std::logic_error("vertex outside st(j) missing from all components");
}

Generator make_extended_partial_conj(const Graph& g, int j, std::vector<VertexSet> components) {
  check_vertex(g, j, "conjugator");
  if (components.empty())
    throw Error(errc::constraint_violation, "extended partial conjugation needs a component");
  for (VertexSet& c : components) std::sort(c.begin(), c.end());
  std::sort(components.begin(), components.end());
  for (size_t a = 0; a + 1 < components.size(); ++a)
    if (components[a] == components[a + 1])
      throw Error(errc::constraint_violation, "repeated component " + set_names(g, components[a]));
  for (const VertexSet& c : components)
    if (!is_component_of_minus_star(g, j, c))
      throw Error(errc::not_a_component,
                  set_names(g, c) + " is not a connected component of the graph minus st(" +
                      vname(g, j) + ")");
  Generator gen{Generator::Kind::ExtendedPartialConj};
  gen.j = j;
  gen.components = std::move(components);
  return gen;
}

Generator make_transvection(const Graph& g, int i, int j) {
  check_vertex(g, i, "transvected");
  check_vertex(g, j, "dominating");
  if (i == j) throw Error(errc::constraint_violation, "transvection needs distinct vertices");
  if (!dominates_leq(g, i, j))
    throw Error(errc::constraint_violation, "lk(" + vname(g, i) + ") is not contained in st(" +
                                                vname(g, j) + ")");
  Generator gen{Generator::Kind::Transvection};
  gen.i = i;
  gen.j = j;
  return gen;
}

Generator make_kijk(const Graph& g, int i, int j, int k) {
  check_vertex(g, i, "transvected");
  check_vertex(g, j, "bracket");
  check_vertex(g, k, "bracket");
  if (i == j || i == k || j == k)
    throw Error(errc::constraint_violation, "commutator transvection needs three distinct vertices");
  if (g.adjacent(j, k))
    throw Error(errc::constraint_violation, "[" + vname(g, j) + "," + vname(g, k) +
                                                "] is trivial (vertices are adjacent)");
  for (int d : {j, k})
    if (!dominates_leq(g, i, d))
      throw Error(errc::constraint_violation, "lk(" + vname(g, i) + ") is not contained in st(" +
                                                  vname(g, d) + ")");
  Generator gen{Generator::Kind::Kijk};
  gen.i = i;
  gen.j = j;
  gen.k = k;
  return gen;
}

std::vector<GroupElement> generator_images(Graph::Ptr g, const Generator& gen, int exponent) {
  if (exponent != 1 && exponent != -1)
    throw Error(errc::bad_argument, "generator exponent must be +1 or -1");
  const int n = g->n();
  std::vector<GroupElement> img(n);
  for (int v = 0; v < n; ++v) img[v] = generator_element(g, v);
  switch (gen.kind) {
    case Generator::Kind::Symmetry: {
      std::vector<int> p = gen.perm;
      if (exponent < 0) {
        p.assign(n, 0);
        for (int v = 0; v < n; ++v) p[gen.perm[v]] = v;
      }
      for (int v = 0; v < n; ++v) img[v] = generator_element(g, p[v]);
      break;
    }
    case Generator::Kind::Inversion:
      img[gen.i] = generator_element(g, gen.i, -1);
      break;
    case Generator::Kind::PartialConj:
    case Generator::Kind::ExtendedPartialConj: {
      GroupElement c = generator_element(g, gen.j, exponent);
      for (const VertexSet& comp : gen.components)
        for (int v : comp) img[v] = conjugate(img[v], c);
      break;
    }
    case Generator::Kind::Transvection:
      img[gen.i] = multiply(img[gen.i], generator_element(g, gen.j, exponent));
      break;
    case Generator::Kind::Kijk: {
      GroupElement br = commutator(generator_element(g, gen.j), generator_element(g, gen.k));
      if (exponent < 0) br = inverse(br);
      img[gen.i] = multiply(img[gen.i], br);
      break;
    }
  }
  return img;
}

Generator conjugate_by_symmetry(const Graph& g, const Generator& sigma, const Generator& gen) {
  if (sigma.kind != Generator::Kind::Symmetry)
    throw Error(errc::bad_argument, "conjugation is by a graph symmetry");
  const std::vector<int>& s = sigma.perm;
  auto map_set = [&](const VertexSet& c) {
    VertexSet out;
    for (int v : c) out.push_back(s[v]);
    std::sort(out.begin(), out.end());
    return out;
  };
  switch (gen.kind) {
    case Generator::Kind::Symmetry: {
      std::vector<int> sinv(g.n());
      for (int v = 0; v < g.n(); ++v) sinv[s[v]] = v;
      std::vector<int> p(g.n());
      for (int v = 0; v < g.n(); ++v) p[v] = s[gen.perm[sinv[v]]];
      return make_symmetry(g, std::move(p));
    }
    case Generator::Kind::Inversion:
      return make_inversion(g, s[gen.i]);
    case Generator::Kind::PartialConj:
      return make_partial_conj(g, s[gen.j], map_set(gen.components[0]));
    case Generator::Kind::ExtendedPartialConj: {
      std::vector<VertexSet> comps;
      for (const VertexSet& c : gen.components) comps.push_back(map_set(c));
      return make_extended_partial_conj(g, s[gen.j], std::move(comps));
    }
    case Generator::Kind::Transvection:
      return make_transvection(g, s[gen.i], s[gen.j]);
    case Generator::Kind::Kijk:
      return make_kijk(g, s[gen.i], s[gen.j], s[gen.k]);
  }
  throw std::logic_error("unhandled generator kind");
}

std::string generator_to_string(const Graph& g, const Generator& gen) {
  auto one = [](int v) { return std::to_string(v + 1); };
  switch (gen.kind) {
    case Generator::Kind::Symmetry: {
      // Cycle notation over 1-based indices.
      std::string out = "sym:";
      std::vector<bool> done(g.n(), false);
      bool any = false;
      for (int v = 0; v < g.n(); ++v) {
        if (done[v] || gen.perm[v] == v) continue;
        out += "(";
        int w = v;
        bool first = true;
        while (!done[w]) {
          if (!first) out += " ";
          out += one(w);
          done[w] = true;
          first = false;
          w = gen.perm[w];
        }
        out += ")";
        any = true;
      }
      if (!any) out += "()";
      return out;
    }
    case Generator::Kind::Inversion:
      return "inv:" + one(gen.i);
    case Generator::Kind::PartialConj:
    case Generator::Kind::ExtendedPartialConj: {
      std::string out =
          (gen.kind == Generator::Kind::PartialConj ? "pc:" : "epc:") + one(gen.j) + "/";
      for (const VertexSet& c : gen.components) {
        out += "{";
        for (size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + one(c[i]);
        out += "}";
      }
      return out;
    }
    case Generator::Kind::Transvection:
      return "tv:" + one(gen.i) + "," + one(gen.j);
    case Generator::Kind::Kijk:
      return "kijk:" + one(gen.i) + "," + one(gen.j) + "," + one(gen.k);
  }
  throw std::logic_error("unhandled generator kind");
}

namespace {

int parse_index(const Graph& g, const std::string& tok) {
  try {
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    if (v < 1 || v > g.n())
      throw Error(errc::unknown_vertex,
                  "vertex index " + tok + " out of range 1.." + std::to_string(g.n()));
    return v - 1;
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error(errc::parse_error, "expected a vertex index, got '" + tok + "'");
  }
}

std::vector<int> parse_index_list(const Graph& g, const std::string& body, char sep) {
  std::vector<int> out;
  std::string cur;
  for (char ch : body + std::string(1, sep)) {
    if (ch == sep) {
      if (!cur.empty()) out.push_back(parse_index(g, cur));
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  return out;
}

}  // namespace

Generator parse_generator(const Graph& g, const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw Error(errc::parse_error, "generator '" + text + "' is missing its kind prefix");
  std::string kind = text.substr(0, colon);
  std::string body = text.substr(colon + 1);
  if (kind == "sym") {
    std::vector<int> perm(g.n());
    for (int v = 0; v < g.n(); ++v) perm[v] = v;
    size_t pos = 0;
    bool saw_cycle = false;
    while (pos < body.size()) {
      if (std::isspace(static_cast<unsigned char>(body[pos]))) {
        ++pos;
        continue;
      }
      if (body[pos] != '(') throw Error(errc::parse_error, "expected '(' in symmetry '" + text + "'");
      auto close = body.find(')', pos);
      if (close == std::string::npos)
        throw Error(errc::parse_error, "unclosed cycle in symmetry '" + text + "'");
      std::vector<int> cyc = parse_index_list(g, body.substr(pos + 1, close - pos - 1), ' ');
      for (size_t t = 0; t < cyc.size(); ++t) perm[cyc[t]] = cyc[(t + 1) % cyc.size()];
      saw_cycle = true;
      pos = close + 1;
    }
    if (!saw_cycle) throw Error(errc::parse_error, "symmetry '" + text + "' has no cycles");
    return make_symmetry(g, std::move(perm));
  }
  if (kind == "inv") return make_inversion(g, parse_index(g, body));
  if (kind == "pc" || kind == "epc") {
    auto slash = body.find('/');
    if (slash == std::string::npos) {
      if (kind == "epc") throw Error(errc::parse_error, "epc needs the form epc:j/{..}");
      std::vector<int> ij = parse_index_list(g, body, ',');
      if (ij.size() != 2) throw Error(errc::parse_error, "pc:i,j needs exactly two indices");
      return make_partial_conj_pair(g, ij[0], ij[1]);
    }
    int j = parse_index(g, body.substr(0, slash));
    std::vector<VertexSet> comps;
    size_t pos = slash + 1;
    while (pos < body.size()) {
      if (std::isspace(static_cast<unsigned char>(body[pos]))) {
        ++pos;
        continue;
      }
      if (body[pos] != '{')
        throw Error(errc::parse_error, "expected '{' in component list of '" + text + "'");
      auto close = body.find('}', pos);
      if (close == std::string::npos)
        throw Error(errc::parse_error, "unclosed component in '" + text + "'");
      std::vector<int> c = parse_index_list(g, body.substr(pos + 1, close - pos - 1), ',');
      comps.push_back(VertexSet(c.begin(), c.end()));
      pos = close + 1;
    }
    if (comps.empty()) throw Error(errc::parse_error, "no components given in '" + text + "'");
    if (kind == "pc") {
      if (comps.size() != 1) throw Error(errc::parse_error, "pc takes one component; use epc");
      return make_partial_conj(g, j, comps[0]);
    }
    return make_extended_partial_conj(g, j, std::move(comps));
  }
  if (kind == "tv") {
    std::vector<int> ij = parse_index_list(g, body, ',');
    if (ij.size() != 2) throw Error(errc::parse_error, "tv:i,j needs exactly two indices");
    return make_transvection(g, ij[0], ij[1]);
  }
  if (kind == "kijk") {
    std::vector<int> v = parse_index_list(g, body, ',');
    if (v.size() != 3) throw Error(errc::parse_error, "kijk:i,j,k needs exactly three indices");
    return make_kijk(g, v[0], v[1], v[2]);
  }
  throw Error(errc::parse_error, "unknown generator kind '" + kind + "'");
}

std::vector<Generator> enumerate_symmetries(const Graph& g) {
  std::vector<Generator> out;
  for (auto& p : graph_automorphisms(g)) out.push_back(make_symmetry(g, p));
  return out;
}

std::vector<Generator> enumerate_inversions(const Graph& g) {
  std::vector<Generator> out;
  for (int v = 0; v < g.n(); ++v) out.push_back(make_inversion(g, v));
  return out;
}

std::vector<Generator> enumerate_partial_conjugations(const Graph& g) {
  std::vector<Generator> out;
  for (int j = 0; j < g.n(); ++j)
    for (const VertexSet& c : components_minus_star(g, j)) out.push_back(make_partial_conj(g, j, c));
  return out;
}

std::vector<Generator> enumerate_transvections(const Graph& g) {
  std::vector<Generator> out;
  for (int i = 0; i < g.n(); ++i)
    for (int j = 0; j < g.n(); ++j)
      if (i != j && dominates_leq(g, i, j)) out.push_back(make_transvection(g, i, j));
  return out;
}

std::vector<Generator> laurence_generators(const Graph& g) {
  std::vector<Generator> out = enumerate_symmetries(g);
  auto app = [&](std::vector<Generator> v) {
    for (auto& x : v) out.push_back(std::move(x));
  };
  app(enumerate_inversions(g));
  app(enumerate_partial_conjugations(g));
  app(enumerate_transvections(g));
  return out;
}

std::vector<Generator> torelli_generators(const Graph& g) {
  std::vector<Generator> out = enumerate_partial_conjugations(g);
  for (int i = 0; i < g.n(); ++i)
    for (int j = 0; j < g.n(); ++j)
      for (int k = j + 1; k < g.n(); ++k) {
        if (i == j || i == k || g.adjacent(j, k)) continue;
        if (dominates_leq(g, i, j) && dominates_leq(g, i, k)) out.push_back(make_kijk(g, i, j, k));
      }
  return out;
}

static IntMatrix phi_of_images(const Graph& g, const std::vector<GroupElement>& images) {
  IntMatrix m(g.n(), g.n());
  for (int v = 0; v < g.n(); ++v)
    for (const Letter& l : images[v].word()) m.at(l.vertex, v) += l.sign;
  return m;
}

Automorphism Automorphism::from_images(Graph::Ptr g, std::vector<GroupElement> images) {
  if (static_cast<int>(images.size()) != g->n())
    throw Error(errc::bad_argument, "image table has wrong length");
  for (const GroupElement& e : images) require_same_graph(g, e.graph());
  for (auto [u, v] : g->edges())
    if (!commutator(images[u], images[v]).is_identity())
      throw Error(errc::constraint_violation, "images of adjacent " + g->label(u) + ", " +
                                                  g->label(v) + " do not commute");
  int64_t d = matdet(phi_of_images(*g, images));
  if (d != 1 && d != -1)
    throw Error(errc::constraint_violation,
                "abelianization determinant is " + std::to_string(d) + ", not a unit");
  Automorphism a;
  a.graph_ = std::move(g);
  a.images_ = std::move(images);
  return a;
}

Automorphism Automorphism::from_generator(Graph::Ptr g, const Generator& gen, int exponent) {
  Automorphism a = from_images(g, generator_images(g, gen, exponent));
  a.word_ = std::vector<std::pair<Generator, int>>{{gen, exponent}};
  return a;
}

Automorphism Automorphism::identity_automorphism(Graph::Ptr g) {
  std::vector<GroupElement> img;
  for (int v = 0; v < g->n(); ++v) img.push_back(generator_element(g, v));
  Automorphism a = from_images(std::move(g), std::move(img));
  a.word_ = std::vector<std::pair<Generator, int>>{};
  return a;
}

Automorphism Automorphism::from_word(Graph::Ptr g,
                                     const std::vector<std::pair<Generator, int>>& word) {
  Automorphism acc = identity_automorphism(std::move(g));
  for (const auto& [gen, exp] : word) acc = compose(acc, from_generator(acc.graph(), gen, exp));
  return acc;
}

bool Automorphism::is_identity() const {
  for (int v = 0; v < graph_->n(); ++v)
    if (!(images_[v] == generator_element(graph_, v))) return false;
  return true;
}

bool Automorphism::operator==(const Automorphism& o) const {
  require_same_graph(graph_, o.graph_);
  return images_ == o.images_;
}

GroupElement apply(const Automorphism& a, const GroupElement& x) {
  require_same_graph(a.graph(), x.graph());
  std::vector<Letter> out;
  for (const Letter& l : x.word()) {
    GroupElement img = a.images()[l.vertex];
    if (l.sign < 0) img = inverse(img);
    out.insert(out.end(), img.word().begin(), img.word().end());
  }
  return GroupElement::make(a.graph(), std::move(out));
}

Automorphism compose(const Automorphism& a, const Automorphism& b) {
  require_same_graph(a.graph(), b.graph());
  std::vector<GroupElement> img;
  img.reserve(b.images().size());
  for (const GroupElement& e : b.images()) img.push_back(apply(a, e));
  Automorphism c;
  c.graph_ = a.graph();
  c.images_ = std::move(img);
  if (a.word() && b.word()) {
    auto w = *a.word();
    w.insert(w.end(), b.word()->begin(), b.word()->end());
    c.word_ = std::move(w);
  }
  return c;
}

Automorphism invert(const Automorphism& a) {
  if (!a.word())
    throw Error(errc::missing_word,
                "cannot invert an automorphism given only by its image table");
  std::vector<std::pair<Generator, int>> w(a.word()->rbegin(), a.word()->rend());
  for (auto& [gen, exp] : w) exp = -exp;
  return Automorphism::from_word(a.graph(), w);
}

Automorphism inner_automorphism(const GroupElement& g) {
  std::vector<GroupElement> img;
  for (int v = 0; v < g.graph()->n(); ++v)
    img.push_back(conjugate(generator_element(g.graph(), v), g));
  return Automorphism::from_images(g.graph(), std::move(img));
}

IntMatrix phi_matrix(const Automorphism& a) { return phi_of_images(*a.graph(), a.images()); }

bool is_torelli(const Automorphism& a) {
  return phi_matrix(a) == IntMatrix::identity(a.graph()->n());
}

IntMatrix tau1_matrix(const Automorphism& a) {
  if (!is_torelli(a))
    throw Error(errc::not_torelli, "first Johnson homomorphism needs a Torelli automorphism");
  const Graph& g = *a.graph();
  auto basis = l2_basis(g);
  IntMatrix m(g.n(), static_cast<int>(basis.size()));
  for (int l = 0; l < g.n(); ++l) {
    GroupElement w = multiply(a.images()[l], generator_element(a.graph(), l, -1));
    std::vector<int64_t> coords = l2_coordinates(w);
    for (size_t b = 0; b < basis.size(); ++b) m.at(l, static_cast<int>(b)) = coords[b];
  }
  return m;
}

IntMatrix tau1_formula(const Graph& g, const Generator& gen) {
  auto basis = l2_basis(g);
  std::map<std::pair<int, int>, int> col;
  for (size_t b = 0; b < basis.size(); ++b) col[basis[b]] = static_cast<int>(b);
  IntMatrix m(g.n(), static_cast<int>(basis.size()));
  auto put = [&](int row, int x, int y) {
    // Coordinates of the bracket [v_x, v_y] in the (i<j) pair basis.
    if (x < y)
      m.at(row, col.at({x, y})) += 1;
    else
      m.at(row, col.at({y, x})) -= 1;
  };
  switch (gen.kind) {
    case Generator::Kind::PartialConj:
    case Generator::Kind::ExtendedPartialConj:
      for (const VertexSet& c : gen.components)
        for (int l : c) put(l, gen.j, l);
      break;
    case Generator::Kind::Kijk:
      put(gen.i, gen.j, gen.k);
      break;
    default:
      throw Error(errc::bad_argument,
                  "closed-form tau1 covers partial conjugations and commutator transvections");
  }
  return m;
}

JohnsonLevel johnson_level(const Automorphism& a, int cap) {
  if (cap < 1) throw Error(errc::bad_argument, "johnson_level needs cap >= 1");
  if (!is_torelli(a))
    throw Error(errc::not_torelli, "Johnson filtration level needs a Torelli automorphism");
  // a is in G_c iff every phi(v_l) v_l^-1 lies in gamma_{c+1}, so the level
  // is (least depth among the nonidentity w_l) - 1. Depths are certified up
  // to cap+1, which decides Finite(c) for all c <= cap exactly.
  int min_depth = -1;
  for (int l = 0; l < a.graph()->n(); ++l) {
    GroupElement w = multiply(a.images()[l], generator_element(a.graph(), l, -1));
    if (w.is_identity()) continue;
    LcsDepth d = lcs_depth(w, cap + 1);
    if (d.kind == LcsDepth::Kind::Finite && (min_depth < 0 || d.value < min_depth))
      min_depth = d.value;
  }
  if (min_depth < 0) return {JohnsonLevel::Kind::AtLeast, cap};
  return {JohnsonLevel::Kind::Finite, min_depth - 1};
}

std::string johnson_level_to_string(const JohnsonLevel& l) {
  if (l.kind == JohnsonLevel::Kind::AtLeast) return ">=" + std::to_string(l.value);
  return std::to_string(l.value);
}

H1Report torelli_h1_report(const Graph& g) {
  std::vector<Generator> gens = torelli_generators(g);
  auto basis = l2_basis(g);
  const int wide = g.n() * static_cast<int>(basis.size());
  IntMatrix stacked(static_cast<int>(gens.size()), wide);
  for (size_t r = 0; r < gens.size(); ++r) {
    IntMatrix t = tau1_formula(g, gens[r]);
    for (int i = 0; i < t.rows(); ++i)
      for (int j = 0; j < t.cols(); ++j)
        stacked.at(static_cast<int>(r), i * t.cols() + j) = t.at(i, j);
  }
  return {static_cast<int64_t>(gens.size()), matrank(stacked), wide};
}

}  // namespace raag
