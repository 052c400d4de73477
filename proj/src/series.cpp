#include "raag/series.hpp"

#include <algorithm>

namespace raag {

namespace {

using i128 = __int128;

int64_t reduce_coeff(i128 c, int64_t mod) {
  if (mod) {
    i128 r = c % mod;
    if (r < 0) r += mod;
    return static_cast<int64_t>(r);
  }
  if (c > i128(INT64_MAX) || c < i128(INT64_MIN))
    throw std::overflow_error("series coefficient overflow");
  return static_cast<int64_t>(c);
}

std::vector<int> canonical_mono(const Graph& g, std::vector<int> mono) {
  std::vector<Letter> w(mono.size());
  for (size_t i = 0; i < mono.size(); ++i) w[i] = {mono[i], 1};
  w = lex_min_shuffle(g, std::move(w));
  for (size_t i = 0; i < mono.size(); ++i) mono[i] = w[i].vertex;
  return mono;
}

void require_compatible(const Series& a, const Series& b) {
  require_same_graph(a.graph(), b.graph());
  if (a.cap() != b.cap())
    throw Error(errc::cap_mismatch, "series caps differ (" + std::to_string(a.cap()) + " vs " +
                                    std::to_string(b.cap()) + ")");
  if (a.mod() != b.mod())
    throw Error(errc::cap_mismatch, "series moduli differ (" + std::to_string(a.mod()) + " vs " +
                                    std::to_string(b.mod()) + ")");
}

}  // namespace

int64_t Series::coeff(const Monomial& m) const {
  if (!graph_) return 0;
  auto it = terms_.find(Monomial{canonical_mono(*graph_, m.v)});
  return it == terms_.end() ? 0 : it->second;
}

void Series::add_term(std::vector<int> mono, int64_t c) {
  if (!graph_) throw Error(errc::bad_graph, "series has no graph");
  if (static_cast<int>(mono.size()) > cap_) return;
  for (int v : mono)
    if (v < 0 || v >= graph_->n())
      throw Error(errc::unknown_vertex, "monomial vertex out of range");
  Monomial key{canonical_mono(*graph_, std::move(mono))};
  int64_t next = reduce_coeff(i128(terms_[key]) + c, mod_);
  if (next == 0)
    terms_.erase(key);
  else
    terms_[key] = next;
}

bool Series::operator==(const Series& o) const {
  if (graph_ && o.graph_) require_compatible(*this, o);
  return terms_ == o.terms_;
}

Series series_zero(Graph::Ptr g, int cap, int64_t mod) { return Series(std::move(g), cap, mod); }

Series series_one(Graph::Ptr g, int cap, int64_t mod) {
  Series s(std::move(g), cap, mod);
  s.add_term({}, 1);
  return s;
}

Series series_generator(Graph::Ptr g, int cap, int64_t mod, int vertex) {
  Series s(std::move(g), cap, mod);
  s.add_term({vertex}, 1);
  return s;
}

Series series_add(const Series& a, const Series& b) {
  require_compatible(a, b);
  Series r = a;
  for (const auto& [m, c] : b.terms()) r.add_term(m.v, c);
  return r;
}

Series series_neg(const Series& a) { return series_scale(a, -1); }

Series series_sub(const Series& a, const Series& b) { return series_add(a, series_neg(b)); }

Series series_scale(const Series& a, int64_t c) {
  Series r(a.graph(), a.cap(), a.mod());
  for (const auto& [m, c0] : a.terms()) r.add_term(m.v, reduce_coeff(i128(c0) * c, a.mod()));
  return r;
}

Series series_mul(const Series& a, const Series& b) {
  require_compatible(a, b);
  Series r(a.graph(), a.cap(), a.mod());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      if (ma.degree() + mb.degree() > a.cap()) continue;
      std::vector<int> mono = ma.v;
      mono.insert(mono.end(), mb.v.begin(), mb.v.end());
      r.add_term(std::move(mono), reduce_coeff(i128(ca) * cb, a.mod()));
    }
  }
  return r;
}

Series lie_bracket(const Series& a, const Series& b) {
  return series_sub(series_mul(a, b), series_mul(b, a));
}

Series homogeneous_part(const Series& a, int degree) {
  Series r(a.graph(), a.cap(), a.mod());
  for (const auto& [m, c] : a.terms())
    if (m.degree() == degree) r.add_term(m.v, c);
  return r;
}

std::optional<int> lowest_positive_degree(const Series& a) {
  std::optional<int> best;
  for (const auto& [m, c] : a.terms())
    if (m.degree() >= 1 && (!best || m.degree() < *best)) best = m.degree();
  return best;
}

VertexSet part_support(const Series& a, int degree) {
  VertexSet s;
  for (const auto& [m, c] : a.terms())
    if (m.degree() == degree) s.insert(s.end(), m.v.begin(), m.v.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

Series series_invert(const Series& a) {
  if (a.coeff(Monomial{}) != 1)
    throw Error(errc::bad_argument, "series_invert needs constant term 1");
  std::vector<Series> apart(a.cap() + 1, Series(a.graph(), a.cap(), a.mod()));
  for (int d = 1; d <= a.cap(); ++d) apart[d] = homogeneous_part(a, d);
  std::vector<Series> bpart(a.cap() + 1, Series(a.graph(), a.cap(), a.mod()));
  bpart[0] = series_one(a.graph(), a.cap(), a.mod());
  Series out = bpart[0];
  for (int j = 1; j <= a.cap(); ++j) {
    Series acc(a.graph(), a.cap(), a.mod());
    for (int i = 1; i <= j; ++i) acc = series_add(acc, series_mul(apart[i], bpart[j - i]));
    bpart[j] = series_neg(acc);
    out = series_add(out, bpart[j]);
  }
  return out;
}

Series magnus(const GroupElement& g, int cap, int64_t mod) {
  if (cap < 1) throw Error(errc::bad_argument, "magnus needs cap >= 1");
  Series r = series_one(g.graph(), cap, mod);
  for (const Letter& l : g.word()) {
    Series f(g.graph(), cap, mod);
    if (l.sign > 0) {
      f.add_term({}, 1);
      f.add_term({l.vertex}, 1);
    } else {
      // Closed form for (1 + v)^-1 truncated at cap.
      int64_t sign = 1;
      std::vector<int> mono;
      for (int t = 0; t <= cap; ++t) {
        f.add_term(mono, sign);
        mono.push_back(l.vertex);
        sign = -sign;
      }
    }
    r = series_mul(r, f);
  }
  return r;
}

bool lcs_membership(const GroupElement& g, int c) {
  if (c < 1) throw Error(errc::bad_argument, "lcs_membership needs c >= 1");
  if (c == 1) return true;
  Series s = magnus(g, c - 1, 0);
  return s == series_one(g.graph(), c - 1, 0);
}

LcsDepth lcs_depth(const GroupElement& g, int cap) {
  if (cap < 1) throw Error(errc::bad_argument, "lcs_depth needs cap >= 1");
  if (g.is_identity()) return {LcsDepth::Kind::Infinite, 0};
  Series s = magnus(g, cap, 0);
  if (auto d = lowest_positive_degree(s)) return {LcsDepth::Kind::Finite, *d};
  return {LcsDepth::Kind::AtLeast, cap + 1};
}

std::string depth_to_string(const LcsDepth& d) {
  switch (d.kind) {
    case LcsDepth::Kind::Finite:
      return std::to_string(d.value);
    case LcsDepth::Kind::AtLeast:
      return ">=" + std::to_string(d.value);
    default:
      return "infinite";
  }
}

std::vector<std::pair<int, int>> l2_basis(const Graph& g) {
  std::vector<std::pair<int, int>> basis;
  for (int i = 0; i < g.n(); ++i)
    for (int j = i + 1; j < g.n(); ++j)
      if (!g.adjacent(i, j)) basis.emplace_back(i, j);
  return basis;
}

std::vector<Series> l2_basis_images(const Graph::Ptr& g, int64_t mod) {
  std::vector<Series> out;
  for (auto [i, j] : l2_basis(*g)) {
    Series s(g, 2, mod);
    s.add_term({i, j}, 1);
    s.add_term({j, i}, -1);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<int64_t> l2_coordinates(const GroupElement& g) {
  Series s = magnus(g, 2, 0);
  if (!homogeneous_part(s, 1).is_zero())
    throw Error(errc::not_in_gamma2, "element is not in gamma_2 (word '" + word_to_string(g) + "')");
  Series d2 = homogeneous_part(s, 2);
  auto basis = l2_basis(*g.graph());
  std::vector<int64_t> coords(basis.size(), 0);
  Series rebuilt(g.graph(), 2, 0);
  for (size_t b = 0; b < basis.size(); ++b) {
    auto [i, j] = basis[b];
    // v_i v_j with i < j non-adjacent is already canonical.
    coords[b] = d2.coeff(Monomial{{i, j}});
    rebuilt.add_term({i, j}, coords[b]);
    rebuilt.add_term({j, i}, -coords[b]);
  }
  if (rebuilt != d2)
    throw std::logic_error("degree-2 part of a gamma_2 element is not a combination of basis brackets");
  return coords;
}

static BracketExpr parse_bracket_at(const Graph& g, const std::string& s, size_t& pos);

static void skip_ws(const std::string& s, size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

static BracketExpr parse_bracket_at(const Graph& g, const std::string& s, size_t& pos) {
  skip_ws(s, pos);
  if (pos >= s.size()) throw Error(errc::parse_error, "unexpected end of bracket expression");
  BracketExpr e;
  if (s[pos] == '[') {
    ++pos;
    e.left = std::make_unique<BracketExpr>(parse_bracket_at(g, s, pos));
    skip_ws(s, pos);
    if (pos >= s.size() || s[pos] != ',')
      throw Error(errc::parse_error, "expected ',' in bracket expression");
    ++pos;
    e.right = std::make_unique<BracketExpr>(parse_bracket_at(g, s, pos));
    skip_ws(s, pos);
    if (pos >= s.size() || s[pos] != ']')
      throw Error(errc::parse_error, "expected ']' in bracket expression");
    ++pos;
    return e;
  }
  size_t start = pos;
  while (pos < s.size() && s[pos] != ',' && s[pos] != ']' && s[pos] != '[' &&
         !std::isspace(static_cast<unsigned char>(s[pos])))
    ++pos;
  if (start == pos) throw Error(errc::parse_error, "expected vertex name in bracket expression");
  e.leaf = g.require(s.substr(start, pos - start));
  return e;
}

BracketExpr parse_bracket(const Graph& g, const std::string& text) {
  size_t pos = 0;
  BracketExpr e = parse_bracket_at(g, text, pos);
  skip_ws(text, pos);
  if (pos != text.size())
    throw Error(errc::parse_error, "trailing input after bracket expression");
  return e;
}

static GroupElement bracket_element(const Graph::Ptr& g, const BracketExpr& e) {
  if (e.is_leaf()) return generator_element(g, e.leaf);
  return commutator(bracket_element(g, *e.left), bracket_element(g, *e.right));
}

static Series bracket_ring(const Graph::Ptr& g, const BracketExpr& e, int cap, int64_t mod) {
  if (e.is_leaf()) return series_generator(g, cap, mod, e.leaf);
  return lie_bracket(bracket_ring(g, *e.left, cap, mod), bracket_ring(g, *e.right, cap, mod));
}

BracketValue bracket_eval(Graph::Ptr g, const BracketExpr& e, int cap, int64_t mod) {
  if (cap < e.weight())
    throw Error(errc::bad_argument, "bracket evaluation needs cap >= weight (" +
                                        std::to_string(e.weight()) + ")");
  BracketValue v{bracket_element(g, e), Series(), bracket_ring(g, e, cap, mod), e.weight()};
  v.series = magnus(v.element, cap, mod);
  return v;
}

std::optional<int> centralizer_witness(const Series& a, int upto) {
  if (a.is_zero()) throw Error(errc::zero_series, "centralizer probe needs a nonzero series");
  if (upto < 1 || a.cap() < upto + 1)
    throw Error(errc::bad_argument, "centralizer probe needs 1 <= upto <= cap - 1");
  const Graph::Ptr& g = a.graph();
  auto nonzero_bracket = [&](int v) {
    Series c = lie_bracket(series_generator(g, a.cap(), a.mod(), v), a);
    for (int d = 1; d <= upto + 1; ++d)
      if (!homogeneous_part(c, d).is_zero()) return true;
    return false;
  };
  if (auto d = lowest_positive_degree(a); d && *d <= upto) {
    VertexSet supp = part_support(a, *d);
    for (int v = 0; v < g->n(); ++v)
      if (!vs_subset(supp, g->star(v)) && nonzero_bracket(v)) return v;
  }
  for (int v = 0; v < g->n(); ++v)
    if (nonzero_bracket(v)) return v;
  return std::nullopt;
}

}  // namespace raag
