#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "raag/series.hpp"

using namespace raag;
using fixtures::error_code_of;

namespace {

Series build(const Graph::Ptr& g, int cap, int64_t mod,
             const std::vector<std::pair<std::vector<int>, int64_t>>& terms) {
  Series s(g, cap, mod);
  for (const auto& [m, c] : terms) s.add_term(m, c);
  return s;
}

Series reduce_mod(const Series& a, int64_t p) {
  Series out(a.graph(), a.cap(), p);
  for (const auto& [m, c] : a.terms()) out.add_term(m.v, c);
  return out;
}

GroupElement w(const Graph::Ptr& g, const std::string& text) { return parse_word(g, text); }

GroupElement random_word(const Graph::Ptr& g, std::mt19937& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> vert(0, g->n() - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<Letter> letters;
  int l = len(rng);
  for (int i = 0; i < l; ++i) letters.push_back({vert(rng), coin(rng) ? 1 : -1});
  return GroupElement::make(g, letters);
}

}  // namespace

TEST_CASE("series construction and term bookkeeping") {
  auto pent = fixtures::pentagon();
  CHECK(error_code_of([&] { Series(pent, -1, 0); }) == errc::bad_argument);
  CHECK(error_code_of([&] { Series(pent, 2, 1); }) == errc::bad_argument);
  CHECK(error_code_of([&] { Series(pent, 2, -2); }) == errc::bad_argument);

  Series s(pent, 2, 0);
  CHECK(s.is_zero());
  s.add_term({1, 0}, 1);  // adjacent pair canonicalizes
  CHECK(s.coeff(Monomial{{0, 1}}) == 1);
  CHECK(s.coeff(Monomial{{1, 0}}) == 1);
  s.add_term({0, 1}, -1);  // cancels to zero and is dropped
  CHECK(s.is_zero());

  s.add_term({2, 0}, 3);  // non-adjacent pair stays put
  CHECK(s.coeff(Monomial{{2, 0}}) == 3);
  CHECK(s.coeff(Monomial{{0, 2}}) == 0);
  s.add_term({0, 1, 2}, 5);  // above the cap, dropped
  CHECK(s.terms().size() == 1);

  CHECK(error_code_of([&] { s.add_term({9}, 1); }) == errc::unknown_vertex);
  CHECK(error_code_of([&] { Series().add_term({0}, 1); }) == errc::bad_graph);
}

TEST_CASE("modular coefficients") {
  auto pent = fixtures::pentagon();
  Series s(pent, 2, 2);
  s.add_term({0}, 1);
  s.add_term({0}, 1);
  CHECK(s.is_zero());
  s.add_term({0}, -1);  // normalizes into 0..p-1
  CHECK(s.coeff(Monomial{{0}}) == 1);

  Series t(pent, 2, 3);
  t.add_term({0}, 5);
  CHECK(t.coeff(Monomial{{0}}) == 2);
}

TEST_CASE("series arithmetic") {
  auto pent = fixtures::pentagon();
  Series one = series_one(pent, 2, 0);
  Series v1 = series_generator(pent, 2, 0, 0);
  Series a = series_add(one, v1);

  // (1 + v1)^2 = 1 + 2 v1 + v1^2
  CHECK(series_mul(a, a) ==
        build(pent, 2, 0, {{{}, 1}, {{0}, 2}, {{0, 0}, 1}}));

  // adjacent generators give the same monomial in either order
  Series v2 = series_generator(pent, 2, 0, 1);
  CHECK(series_mul(v1, v2) == series_mul(v2, v1));

  // non-adjacent ones do not commute
  Series v3 = series_generator(pent, 2, 0, 2);
  Series comm = series_sub(series_mul(v1, v3), series_mul(v3, v1));
  CHECK(comm == build(pent, 2, 0, {{{0, 2}, 1}, {{2, 0}, -1}}));

  CHECK(series_sub(a, a).is_zero());
  CHECK(series_neg(v1) == series_scale(v1, -1));
  CHECK(series_scale(v1, 0).is_zero());

  // grading: the product of monomials adds degrees
  Series m1 = build(pent, 4, 0, {{{0, 2}, 1}});
  Series m2 = build(pent, 4, 0, {{{1}, 1}});
  Series prod = series_mul(m1, m2);
  REQUIRE(prod.terms().size() == 1);
  CHECK(prod.terms().begin()->first.degree() == 3);
}

TEST_CASE("series compatibility guards") {
  auto pent = fixtures::pentagon();
  Series a(pent, 2, 0), b(pent, 3, 0), c(pent, 2, 2), d(fixtures::complete(5), 2, 0);
  a.add_term({0}, 1);
  CHECK(error_code_of([&] { series_add(a, b); }) == errc::cap_mismatch);
  CHECK(error_code_of([&] { series_mul(a, c); }) == errc::cap_mismatch);
  CHECK(error_code_of([&] { series_add(a, d); }) == errc::graph_mismatch);
}

TEST_CASE("series inversion") {
  auto pent = fixtures::pentagon();
  Series one3 = series_one(pent, 3, 0);
  Series a = series_add(one3, series_generator(pent, 3, 0, 0));
  CHECK(series_invert(a) ==
        build(pent, 3, 0, {{{}, 1}, {{0}, -1}, {{0, 0}, 1}, {{0, 0, 0}, -1}}));
  CHECK(series_invert(one3) == one3);

  auto d2 = fixtures::discrete(2);
  Series b = build(d2, 2, 0, {{{}, 1}, {{0}, 1}, {{1}, 1}});
  CHECK(series_invert(b) == build(d2, 2, 0, {{{}, 1},
                                             {{0}, -1},
                                             {{1}, -1},
                                             {{0, 0}, 1},
                                             {{0, 1}, 1},
                                             {{1, 0}, 1},
                                             {{1, 1}, 1}}));

  std::mt19937 rng(717273);
  for (int trial = 0; trial < 30; ++trial) {
    GroupElement g = random_word(pent, rng, 5);
    Series m = magnus(g, 4);
    CHECK(series_mul(m, series_invert(m)) == series_one(pent, 4, 0));
    CHECK(series_invert(series_invert(m)) == m);
  }

  Series no_unit(pent, 2, 0);
  no_unit.add_term({0}, 1);
  CHECK(error_code_of([&] { series_invert(no_unit); }) == errc::bad_argument);
}

TEST_CASE("magnus expansion basics") {
  auto pent = fixtures::pentagon();
  CHECK(magnus(w(pent, "v1"), 2) == build(pent, 2, 0, {{{}, 1}, {{0}, 1}}));
  CHECK(magnus(identity_element(pent), 3) == series_one(pent, 3, 0));
  CHECK(magnus(w(pent, "v1^-1"), 3) ==
        build(pent, 3, 0, {{{}, 1}, {{0}, -1}, {{0, 0}, 1}, {{0, 0, 0}, -1}}));
  CHECK(magnus(w(pent, "v1 v3 v1^-1 v3^-1"), 2) ==
        build(pent, 2, 0, {{{}, 1}, {{0, 2}, 1}, {{2, 0}, -1}}));
  CHECK(error_code_of([&] { magnus(w(pent, "v1"), 0); }) == errc::bad_argument);
}

TEST_CASE("magnus is a homomorphism") {
  std::mt19937 rng(818283);
  for (const auto& g : {fixtures::pentagon(), fixtures::discrete(2), fixtures::path(4)}) {
    for (int trial = 0; trial < 40; ++trial) {
      GroupElement a = random_word(g, rng, 5);
      GroupElement b = random_word(g, rng, 5);
      CHECK(magnus(multiply(a, b), 4) == series_mul(magnus(a, 4), magnus(b, 4)));
      CHECK(magnus(inverse(a), 4) == series_invert(magnus(a, 4)));
      CHECK(series_mul(magnus(a, 4), magnus(inverse(a), 4)) == series_one(g, 4, 0));
    }
  }
}

TEST_CASE("magnus commutes with reduction mod p") {
  std::mt19937 rng(919293);
  auto pent = fixtures::pentagon();
  for (int64_t p : {2, 3, 5}) {
    for (int trial = 0; trial < 20; ++trial) {
      GroupElement a = random_word(pent, rng, 5);
      CHECK(reduce_mod(magnus(a, 3), p) == magnus(a, 3, p));
    }
  }
}

TEST_CASE("homogeneous parts") {
  auto pent = fixtures::pentagon();
  Series m = magnus(w(pent, "v1 v3"), 2);
  CHECK(homogeneous_part(m, 0) == series_one(pent, 2, 0));
  CHECK(homogeneous_part(m, 1) ==
        build(pent, 2, 0, {{{0}, 1}, {{2}, 1}}));
  CHECK(lowest_positive_degree(m) == 1);
  CHECK(part_support(m, 1) == VertexSet{0, 2});

  Series c = magnus(commutator(w(pent, "v1"), w(pent, "v3")), 3);
  CHECK(homogeneous_part(c, 1).is_zero());
  CHECK_FALSE(homogeneous_part(c, 2).is_zero());
  CHECK(lowest_positive_degree(c) == 2);
  CHECK_FALSE(lowest_positive_degree(series_one(pent, 2, 0)).has_value());
}

TEST_CASE("lower central series membership and depth") {
  auto pent = fixtures::pentagon();
  GroupElement c13 = commutator(w(pent, "v1"), w(pent, "v3"));
  CHECK(lcs_membership(c13, 1));
  CHECK(lcs_membership(c13, 2));
  CHECK_FALSE(lcs_membership(c13, 3));
  CHECK(lcs_membership(w(pent, "v1"), 1));
  CHECK_FALSE(lcs_membership(w(pent, "v1"), 2));

  GroupElement nested = commutator(c13, w(pent, "v5"));
  CHECK(lcs_membership(nested, 3));

  CHECK(lcs_depth(w(pent, "v1"), 8) == LcsDepth{LcsDepth::Kind::Finite, 1});
  CHECK(lcs_depth(c13, 8) == LcsDepth{LcsDepth::Kind::Finite, 2});
  CHECK(lcs_depth(nested, 8) == LcsDepth{LcsDepth::Kind::Finite, 3});
  CHECK(lcs_depth(identity_element(pent), 8) == LcsDepth{LcsDepth::Kind::Infinite, 0});
  CHECK(lcs_depth(c13, 1) == LcsDepth{LcsDepth::Kind::AtLeast, 2});

  // a commutator of adjacent generators is trivial, hence infinitely deep
  auto k3 = fixtures::complete(3);
  CHECK(lcs_depth(commutator(w(k3, "v1"), w(k3, "v2")), 4) ==
        LcsDepth{LcsDepth::Kind::Infinite, 0});

  CHECK(depth_to_string({LcsDepth::Kind::Finite, 2}) == "2");
  CHECK(depth_to_string({LcsDepth::Kind::AtLeast, 2}) == ">=2");
  CHECK(depth_to_string({LcsDepth::Kind::Infinite, 0}) == "infinite");

  CHECK(error_code_of([&] { lcs_depth(c13, 0); }) == errc::bad_argument);
  CHECK(error_code_of([&] { lcs_membership(c13, 0); }) == errc::bad_argument);
}

TEST_CASE("degree-2 basis") {
  auto pairs = l2_basis(*fixtures::pentagon());
  CHECK(pairs == std::vector<std::pair<int, int>>{{0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}});
  CHECK(l2_basis(*fixtures::complete(4)).empty());
  CHECK(l2_basis(*fixtures::discrete(3)).size() == 3);

  auto images = l2_basis_images(fixtures::pentagon());
  REQUIRE(images.size() == 5);
  CHECK(images[0] == build(fixtures::pentagon(), 2, 0, {{{0, 2}, 1}, {{2, 0}, -1}}));
}

TEST_CASE("degree-2 coordinates") {
  auto pent = fixtures::pentagon();
  GroupElement c13 = commutator(w(pent, "v1"), w(pent, "v3"));
  CHECK(l2_coordinates(c13) == std::vector<int64_t>{1, 0, 0, 0, 0});
  CHECK(l2_coordinates(commutator(w(pent, "v3"), w(pent, "v1"))) ==
        std::vector<int64_t>{-1, 0, 0, 0, 0});

  GroupElement prod = multiply(c13, commutator(w(pent, "v2"), w(pent, "v5")));
  CHECK(l2_coordinates(prod) == std::vector<int64_t>{1, 0, 0, 1, 0});

  CHECK(l2_coordinates(identity_element(pent)) == std::vector<int64_t>(5, 0));
  CHECK(error_code_of([&] { l2_coordinates(w(pent, "v1")); }) == errc::not_in_gamma2);
}

TEST_CASE("bracket expressions") {
  auto pent = fixtures::pentagon();
  BracketExpr leaf = parse_bracket(*pent, "v3");
  CHECK(leaf.is_leaf());
  CHECK(leaf.weight() == 1);

  BracketExpr e = parse_bracket(*pent, "[[v1,v3],v5]");
  CHECK(e.weight() == 3);
  CHECK_FALSE(e.is_leaf());
  CHECK(e.left->left->leaf == 0);
  CHECK(e.right->leaf == 4);

  CHECK(error_code_of([&] { parse_bracket(*pent, "[v1,v3"); }) == errc::parse_error);
  CHECK(error_code_of([&] { parse_bracket(*pent, "[v1 v3]"); }) == errc::parse_error);
  CHECK(error_code_of([&] { parse_bracket(*pent, "[v1,v3]]"); }) == errc::parse_error);
  CHECK(error_code_of([&] { parse_bracket(*pent, "vx"); }) == errc::unknown_vertex);
}

TEST_CASE("bracket evaluation") {
  auto pent = fixtures::pentagon();
  BracketValue b = bracket_eval(pent, parse_bracket(*pent, "[v1,v3]"), 3);
  CHECK(b.weight == 2);
  CHECK(b.element == commutator(w(pent, "v1"), w(pent, "v3")));
  CHECK(b.element.length() == 4);
  CHECK(b.ring == build(pent, 3, 0, {{{0, 2}, 1}, {{2, 0}, -1}}));
  CHECK(homogeneous_part(b.series, 2) == b.ring);

  // bracket across an edge collapses
  BracketValue edge = bracket_eval(pent, parse_bracket(*pent, "[v1,v2]"), 2);
  CHECK(edge.element.is_identity());
  CHECK(edge.ring.is_zero());

  BracketValue nested = bracket_eval(pent, parse_bracket(*pent, "[[v1,v3],v5]"), 4);
  CHECK(nested.weight == 3);
  CHECK(homogeneous_part(nested.series, 3) == nested.ring);
  CHECK_FALSE(nested.ring.is_zero());

  CHECK(error_code_of([&] {
          bracket_eval(pent, parse_bracket(*pent, "[[v1,v3],v5]"), 2);
        }) == errc::bad_argument);
}

TEST_CASE("centralizer probes") {
  auto pent = fixtures::pentagon();

  // commutator class: any vertex whose star misses part of the support works
  Series a = build(pent, 4, 0, {{{0, 2}, 1}, {{2, 0}, -1}});
  auto witness = centralizer_witness(a, 3);
  REQUIRE(witness.has_value());
  Series br = lie_bracket(series_generator(pent, 4, 0, *witness), a);
  CHECK_FALSE(br.is_zero());

  // single generator mod 2: first probe with v1 outside its star is v3
  Series b(pent, 3, 2);
  b.add_term({0}, 1);
  CHECK(centralizer_witness(b, 1) == 2);

  // abelian group: every bracket vanishes
  auto k3 = fixtures::complete(3);
  Series c(k3, 3, 0);
  c.add_term({0}, 1);
  CHECK_FALSE(centralizer_witness(c, 2).has_value());

  CHECK(error_code_of([&] { centralizer_witness(Series(pent, 3, 0), 1); }) ==
        errc::zero_series);
  CHECK(error_code_of([&] { centralizer_witness(a, 4); }) == errc::bad_argument);
  CHECK(error_code_of([&] { centralizer_witness(a, 0); }) == errc::bad_argument);
}
