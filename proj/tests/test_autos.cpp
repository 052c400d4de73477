#include <doctest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "raag/autos.hpp"

using namespace raag;
using fixtures::error_code_of;

namespace {

GroupElement w(const Graph::Ptr& g, const std::string& text) { return parse_word(g, text); }

Automorphism from_gen(const Graph::Ptr& g, const std::string& text, int exp = 1) {
  return Automorphism::from_generator(g, parse_generator(*g, text), exp);
}

}  // namespace

TEST_CASE("generator factories enforce their constraints") {
  auto pent = fixtures::pentagon();
  auto k3 = fixtures::complete(3);
  auto p3 = fixtures::path(3);
  auto d3 = fixtures::discrete(3);

  // pentagon has no transvections at all
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      if (i != j)
        CHECK(error_code_of([&] { make_transvection(*pent, i, j); }) ==
              errc::constraint_violation);
  CHECK(make_transvection(*k3, 0, 1).kind == Generator::Kind::Transvection);
  CHECK(make_transvection(*p3, 0, 1).i == 0);
  CHECK(error_code_of([&] { make_transvection(*p3, 1, 0); }) == errc::constraint_violation);
  CHECK(error_code_of([&] { make_transvection(*k3, 1, 1); }) == errc::constraint_violation);

  Generator k13 = make_partial_conj(*pent, 2, {0, 4});
  CHECK(k13.j == 2);
  CHECK(k13.components == std::vector<VertexSet>{{0, 4}});
  CHECK(make_partial_conj_pair(*pent, 0, 2) == k13);
  CHECK(make_partial_conj_pair(*pent, 4, 2) == k13);  // same component, same generator
  CHECK(error_code_of([&] { make_partial_conj(*pent, 2, {0}); }) == errc::not_a_component);
  CHECK(error_code_of([&] { make_partial_conj(*pent, 2, {0, 1}); }) == errc::not_a_component);
  CHECK(error_code_of([&] { make_partial_conj_pair(*pent, 1, 2); }) ==
        errc::constraint_violation);

  CHECK(make_kijk(*d3, 0, 1, 2).kind == Generator::Kind::Kijk);
  CHECK(error_code_of([&] { make_kijk(*pent, 0, 2, 4); }) == errc::constraint_violation);
  CHECK(error_code_of([&] { make_kijk(*p3, 0, 1, 2); }) == errc::constraint_violation);
  CHECK(error_code_of([&] { make_kijk(*d3, 0, 0, 2); }) == errc::constraint_violation);

  CHECK(make_inversion(*pent, 3).i == 3);
  CHECK(error_code_of([&] { make_inversion(*pent, 9); }) == errc::unknown_vertex);

  CHECK(make_symmetry(*pent, {1, 2, 3, 4, 0}).kind == Generator::Kind::Symmetry);
  CHECK(error_code_of([&] { make_symmetry(*pent, {1, 0, 2, 3, 4}); }) ==
        errc::constraint_violation);
  CHECK(error_code_of([&] { make_symmetry(*pent, {0, 0, 2, 3, 4}); }) ==
        errc::constraint_violation);

  CHECK(make_extended_partial_conj(*d3, 0, {{1}, {2}}).components.size() == 2);
  CHECK(error_code_of([&] { make_extended_partial_conj(*d3, 0, {{1}, {1}}); }) ==
        errc::constraint_violation);
  CHECK(error_code_of([&] { make_extended_partial_conj(*d3, 0, {}); }) ==
        errc::constraint_violation);
}

TEST_CASE("generator images") {
  auto pent = fixtures::pentagon();
  auto images = generator_images(pent, make_partial_conj(*pent, 2, {0, 4}));
  CHECK(images[0] == w(pent, "v3 v1 v3^-1"));
  CHECK(images[1] == w(pent, "v2"));
  CHECK(images[4] == w(pent, "v3 v5 v3^-1"));
  auto undo = generator_images(pent, make_partial_conj(*pent, 2, {0, 4}), -1);
  CHECK(undo[0] == w(pent, "v3^-1 v1 v3"));

  auto k3 = fixtures::complete(3);
  auto tv = generator_images(k3, make_transvection(*k3, 0, 1));
  CHECK(tv[0] == w(k3, "v1 v2"));
  CHECK(tv[1] == w(k3, "v2"));
  auto tv_inv = generator_images(k3, make_transvection(*k3, 0, 1), -1);
  CHECK(tv_inv[0] == w(k3, "v1 v2^-1"));

  auto inv = generator_images(pent, make_inversion(*pent, 0));
  CHECK(inv[0] == w(pent, "v1^-1"));
  CHECK(inv[1] == w(pent, "v2"));

  auto d3 = fixtures::discrete(3);
  auto kk = generator_images(d3, make_kijk(*d3, 0, 1, 2));
  CHECK(kk[0] == w(d3, "v1 v2 v3 v2^-1 v3^-1"));
  auto kk_inv = generator_images(d3, make_kijk(*d3, 0, 1, 2), -1);
  CHECK(kk_inv[0] == w(d3, "v1 v3 v2 v3^-1 v2^-1"));

  auto rot = generator_images(pent, make_symmetry(*pent, {1, 2, 3, 4, 0}));
  CHECK(rot[0] == w(pent, "v2"));
  CHECK(rot[4] == w(pent, "v1"));

  CHECK(error_code_of([&] { generator_images(pent, make_inversion(*pent, 0), 2); }) ==
        errc::bad_argument);
}

TEST_CASE("generator text round trips") {
  auto pent = fixtures::pentagon();
  auto k3 = fixtures::complete(3);
  auto d3 = fixtures::discrete(3);
  for (const char* text : {"pc:3/{1,5}", "tv:1,2", "inv:2", "sym:(1 2 3 4 5)"}) {
    const Graph& g = std::string(text).rfind("tv", 0) == 0 ? *k3 : *pent;
    Generator gen = parse_generator(g, text);
    CHECK(generator_to_string(g, gen) == text);
  }
  CHECK(generator_to_string(*d3, parse_generator(*d3, "kijk:1,2,3")) == "kijk:1,2,3");
  CHECK(generator_to_string(*d3, parse_generator(*d3, "epc:1/{2}{3}")) == "epc:1/{2}{3}");

  // pc:i,j sugar resolves to the component containing i
  CHECK(parse_generator(*pent, "pc:1,3") == parse_generator(*pent, "pc:3/{1,5}"));
  CHECK(generator_to_string(*pent, make_symmetry(*pent, {0, 1, 2, 3, 4})) == "sym:()");

  CHECK(error_code_of([&] { parse_generator(*pent, "tv:1"); }) == errc::parse_error);
  CHECK(error_code_of([&] { parse_generator(*pent, "frob:1"); }) == errc::parse_error);
  CHECK(error_code_of([&] { parse_generator(*pent, "pc:3"); }) == errc::parse_error);
  CHECK(error_code_of([&] { parse_generator(*pent, "sym:(1 2"); }) == errc::parse_error);
  CHECK(error_code_of([&] { parse_generator(*pent, "inv:9"); }) == errc::unknown_vertex);
  CHECK(error_code_of([&] { parse_generator(*pent, "inv:x"); }) == errc::parse_error);
}

TEST_CASE("applying automorphisms") {
  auto pent = fixtures::pentagon();
  Automorphism k13 = from_gen(pent, "pc:3/{1,5}");
  CHECK(apply(k13, w(pent, "v1")) == w(pent, "v3 v1 v3^-1"));
  CHECK(apply(k13, w(pent, "v2")) == w(pent, "v2"));

  Automorphism id = Automorphism::identity_automorphism(pent);
  GroupElement g = w(pent, "v1 v3^-1 v4");
  CHECK(apply(id, g) == g);

  auto p3 = fixtures::path(3);
  Automorphism rho = from_gen(p3, "tv:1,3");
  CHECK(apply(rho, w(p3, "v1 v2")) == w(p3, "v1 v3 v2"));

  // substitution is a homomorphism
  std::mt19937 rng(212223);
  std::uniform_int_distribution<int> vert(0, 4);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Letter> la, lb;
    for (int i = 0; i < 4; ++i) {
      la.push_back({vert(rng), coin(rng) ? 1 : -1});
      lb.push_back({vert(rng), coin(rng) ? 1 : -1});
    }
    GroupElement a = GroupElement::make(pent, la), b = GroupElement::make(pent, lb);
    CHECK(apply(k13, multiply(a, b)) == multiply(apply(k13, a), apply(k13, b)));
    CHECK(apply(k13, inverse(a)) == inverse(apply(k13, a)));
  }
}

TEST_CASE("composition applies the left factor last") {
  auto d3 = fixtures::discrete(3);
  Automorphism r12 = from_gen(d3, "tv:1,2");
  Automorphism r13 = from_gen(d3, "tv:1,3");
  Automorphism c = compose(r12, r13);
  CHECK(c.images()[0] == w(d3, "v1 v2 v3"));
  CHECK(c.images()[1] == w(d3, "v2"));

  // and the other order gives v1 v3 v2
  CHECK(compose(r13, r12).images()[0] == w(d3, "v1 v3 v2"));
}

TEST_CASE("inversion by generator word") {
  auto pent = fixtures::pentagon();
  Automorphism k13 = from_gen(pent, "pc:3/{1,5}");
  CHECK(compose(k13, invert(k13)).is_identity());
  CHECK(compose(invert(k13), k13).is_identity());

  Automorphism s1 = from_gen(pent, "inv:1");
  CHECK(compose(s1, s1).is_identity());
  CHECK(invert(s1) == s1);

  auto d3 = fixtures::discrete(3);
  Automorphism chain = Automorphism::from_word(
      d3, {{parse_generator(*d3, "tv:1,2"), 1},
           {parse_generator(*d3, "kijk:1,2,3"), -1},
           {parse_generator(*d3, "tv:2,3"), 1}});
  CHECK(compose(chain, invert(chain)).is_identity());

  Automorphism table = Automorphism::from_images(pent, k13.images());
  CHECK(table == k13);
  CHECK(error_code_of([&] { invert(table); }) == errc::missing_word);
}

TEST_CASE("image table validation") {
  auto p3 = fixtures::path(3);
  CHECK(error_code_of([&] {
          Automorphism::from_images(p3, {w(p3, "v1"), w(p3, "v2")});
        }) == errc::bad_argument);
  // swapping the path's endpoints with its middle breaks an edge relation
  CHECK(error_code_of([&] {
          Automorphism::from_images(p3, {w(p3, "v2"), w(p3, "v1"), w(p3, "v3")});
        }) == errc::constraint_violation);
  // determinant +-1 is required
  auto d2 = fixtures::discrete(2);
  CHECK(error_code_of([&] {
          Automorphism::from_images(d2, {w(d2, "v1 v1"), w(d2, "v2")});
        }) == errc::constraint_violation);
  // legitimate endpoint swap of the path is fine
  Automorphism flip = Automorphism::from_images(p3, {w(p3, "v3"), w(p3, "v2"), w(p3, "v1")});
  CHECK_FALSE(flip.is_identity());
}

TEST_CASE("inner automorphisms") {
  auto pent = fixtures::pentagon();
  Automorphism ad3 = inner_automorphism(w(pent, "v3"));
  CHECK(ad3 == from_gen(pent, "pc:3/{1,5}"));
  CHECK(inner_automorphism(identity_element(pent)) ==
        Automorphism::identity_automorphism(pent));
  CHECK(is_torelli(ad3));

  GroupElement gel = w(pent, "v1 v3^-1");
  Automorphism ad = inner_automorphism(gel);
  for (int v = 0; v < 5; ++v)
    CHECK(ad.images()[v] == conjugate(generator_element(pent, v), gel));
}

TEST_CASE("abelianization matrices") {
  auto k3 = fixtures::complete(3);
  IntMatrix t = phi_matrix(from_gen(k3, "tv:1,2"));
  IntMatrix expect = IntMatrix::identity(3);
  expect.at(1, 0) = 1;  // I + E_21 in 1-based terms
  CHECK(t == expect);

  auto pent = fixtures::pentagon();
  IntMatrix s = phi_matrix(from_gen(pent, "inv:1"));
  IntMatrix ds = IntMatrix::identity(5);
  ds.at(0, 0) = -1;
  CHECK(s == ds);

  CHECK(phi_matrix(from_gen(pent, "pc:3/{1,5}")) == IntMatrix::identity(5));

  IntMatrix rot = phi_matrix(from_gen(pent, "sym:(1 2 3 4 5)"));
  for (int c = 0; c < 5; ++c)
    for (int r = 0; r < 5; ++r) CHECK(rot.at(r, c) == (r == (c + 1) % 5 ? 1 : 0));
  CHECK(matdet(rot) == 1);
  CHECK(matdet(s) == -1);

  auto d3 = fixtures::discrete(3);
  CHECK(phi_matrix(from_gen(d3, "kijk:1,2,3")) == IntMatrix::identity(3));
}

TEST_CASE("phi is multiplicative over random generator words") {
  std::mt19937 rng(313233);
  for (const auto& g : {fixtures::complete(3), fixtures::path(4), fixtures::discrete(3)}) {
    auto gens = laurence_generators(*g);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(gens.size()) - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<std::pair<Generator, int>> word;
      for (int i = 0; i < 4; ++i) word.push_back({gens[pick(rng)], coin(rng) ? 1 : -1});
      Automorphism a = Automorphism::from_word(g, word);
      IntMatrix prod = IntMatrix::identity(g->n());
      for (const auto& [gen, exp] : word)
        prod = matmul(prod, phi_matrix(Automorphism::from_generator(g, gen, exp)));
      CHECK(phi_matrix(a) == prod);
    }
  }
}

TEST_CASE("torelli membership") {
  auto pent = fixtures::pentagon();
  CHECK(is_torelli(from_gen(pent, "pc:3/{1,5}")));
  CHECK_FALSE(is_torelli(from_gen(pent, "inv:1")));
  CHECK_FALSE(is_torelli(from_gen(pent, "sym:(1 2 3 4 5)")));
  auto k3 = fixtures::complete(3);
  CHECK_FALSE(is_torelli(from_gen(k3, "tv:1,2")));
  auto d3 = fixtures::discrete(3);
  CHECK(is_torelli(from_gen(d3, "kijk:1,2,3")));
  CHECK(is_torelli(Automorphism::identity_automorphism(pent)));
}

TEST_CASE("standard generating set counts") {
  auto pent = fixtures::pentagon();
  CHECK(enumerate_symmetries(*pent).size() == 10);
  CHECK(enumerate_inversions(*pent).size() == 5);
  CHECK(enumerate_partial_conjugations(*pent).size() == 5);
  CHECK(enumerate_transvections(*pent).empty());
  CHECK(laurence_generators(*pent).size() == 20);

  auto d2 = fixtures::discrete(2);
  CHECK(enumerate_symmetries(*d2).size() == 2);
  CHECK(enumerate_inversions(*d2).size() == 2);
  CHECK(enumerate_partial_conjugations(*d2).size() == 2);
  CHECK(enumerate_transvections(*d2).size() == 2);

  auto k2 = fixtures::complete(2);
  CHECK(enumerate_symmetries(*k2).size() == 2);
  CHECK(enumerate_partial_conjugations(*k2).empty());
  CHECK(enumerate_transvections(*k2).size() == 2);
}

TEST_CASE("torelli generating sets") {
  auto pent = fixtures::pentagon();
  auto gens = torelli_generators(*pent);
  REQUIRE(gens.size() == 5);
  std::set<std::pair<int, VertexSet>> got;
  for (const auto& g : gens) {
    CHECK(g.kind == Generator::Kind::PartialConj);
    got.insert({g.j, g.components[0]});
  }
  std::set<std::pair<int, VertexSet>> expect{
      {0, {2, 3}}, {1, {3, 4}}, {2, {0, 4}}, {3, {0, 1}}, {4, {1, 2}}};
  CHECK(got == expect);

  CHECK(torelli_generators(*fixtures::discrete(2)).size() == 2);
  auto d3 = torelli_generators(*fixtures::discrete(3));
  CHECK(d3.size() == 9);
  int kijks = 0;
  for (const auto& g : d3)
    if (g.kind == Generator::Kind::Kijk) {
      CHECK(g.j < g.k);
      ++kijks;
    }
  CHECK(kijks == 3);

  CHECK(torelli_generators(*fixtures::complete(4)).empty());
}

TEST_CASE("conjugating generators by symmetries") {
  auto pent = fixtures::pentagon();
  Generator rot = make_symmetry(*pent, {1, 2, 3, 4, 0});
  Generator k13 = make_partial_conj(*pent, 2, {0, 4});
  Generator image = conjugate_by_symmetry(*pent, rot, k13);
  CHECK(image == make_partial_conj(*pent, 3, {0, 1}));

  CHECK(conjugate_by_symmetry(*pent, rot, make_inversion(*pent, 0)) ==
        make_inversion(*pent, 1));

  Generator ident = make_symmetry(*pent, {0, 1, 2, 3, 4});
  CHECK(conjugate_by_symmetry(*pent, ident, k13) == k13);

  // table identity: sigma gen sigma^-1 == conjugated generator
  Automorphism lhs = compose(
      compose(Automorphism::from_generator(pent, rot),
              Automorphism::from_generator(pent, k13)),
      Automorphism::from_generator(pent, rot, -1));
  CHECK(lhs == Automorphism::from_generator(pent, image));

  CHECK(error_code_of([&] { conjugate_by_symmetry(*pent, k13, k13); }) == errc::bad_argument);
}

TEST_CASE("tau1 closed form matches its definition") {
  auto pent = fixtures::pentagon();
  // basis pairs: (1,3),(1,4),(2,4),(2,5),(3,5) 1-based
  IntMatrix k13 = tau1_formula(*pent, parse_generator(*pent, "pc:3/{1,5}"));
  REQUIRE(k13.rows() == 5);
  REQUIRE(k13.cols() == 5);
  std::vector<int64_t> row0{-1, 0, 0, 0, 0}, row4{0, 0, 0, 0, 1};
  for (int c = 0; c < 5; ++c) {
    CHECK(k13.at(0, c) == row0[c]);
    CHECK(k13.at(4, c) == row4[c]);
    CHECK(k13.at(1, c) == 0);
    CHECK(k13.at(2, c) == 0);
    CHECK(k13.at(3, c) == 0);
  }

  IntMatrix k24 = tau1_formula(*pent, parse_generator(*pent, "pc:4/{1,2}"));
  CHECK(k24.at(0, 1) == -1);  // row v1 = -e_(1,4)
  CHECK(k24.at(1, 2) == -1);  // row v2 = -e_(2,4)

  auto d3 = fixtures::discrete(3);
  IntMatrix k123 = tau1_formula(*d3, parse_generator(*d3, "kijk:1,2,3"));
  CHECK(k123.at(0, 2) == 1);  // row v1 = +e_(2,3)
  for (int c = 0; c < 3; ++c) {
    CHECK(k123.at(1, c) == 0);
    CHECK(k123.at(2, c) == 0);
  }

  for (const auto& g : {fixtures::pentagon(), fixtures::discrete(3), fixtures::path(4),
                        fixtures::star4()}) {
    for (const Generator& gen : torelli_generators(*g))
      CHECK(tau1_formula(*g, gen) == tau1_matrix(Automorphism::from_generator(g, gen)));
  }

  CHECK(error_code_of([&] {
          tau1_formula(*fixtures::complete(3), parse_generator(*fixtures::complete(3), "tv:1,2"));
        }) == errc::bad_argument);
}

TEST_CASE("tau1 is additive") {
  auto d3 = fixtures::discrete(3);
  Automorphism k123 = from_gen(d3, "kijk:1,2,3");
  IntMatrix once = tau1_matrix(k123);
  IntMatrix twice = tau1_matrix(compose(k123, k123));
  CHECK(twice == matadd(once, once));

  auto pent = fixtures::pentagon();
  Automorphism a = from_gen(pent, "pc:3/{1,5}");
  Automorphism b = from_gen(pent, "pc:4/{1,2}");
  CHECK(tau1_matrix(compose(a, b)) == matadd(tau1_matrix(a), tau1_matrix(b)));

  CHECK(tau1_matrix(Automorphism::identity_automorphism(pent)) == IntMatrix(5, 5));
  CHECK(error_code_of([&] { tau1_matrix(from_gen(pent, "inv:1")); }) == errc::not_torelli);
}

TEST_CASE("johnson filtration levels") {
  auto pent = fixtures::pentagon();
  Automorphism k13 = from_gen(pent, "pc:3/{1,5}");
  CHECK(johnson_level(k13, 3) == JohnsonLevel{JohnsonLevel::Kind::Finite, 1});

  CHECK(johnson_level(Automorphism::identity_automorphism(pent), 3) ==
        JohnsonLevel{JohnsonLevel::Kind::AtLeast, 3});

  GroupElement c13 = commutator(w(pent, "v1"), w(pent, "v3"));
  CHECK(johnson_level(inner_automorphism(c13), 3) ==
        JohnsonLevel{JohnsonLevel::Kind::Finite, 2});

  // [G_1, G_1] lands in G_2
  Automorphism k24 = from_gen(pent, "pc:4/{1,2}");
  Automorphism comm = compose(compose(k13, k24), compose(invert(k13), invert(k24)));
  JohnsonLevel l = johnson_level(comm, 3);
  bool at_least_two =
      (l.kind == JohnsonLevel::Kind::Finite && l.value >= 2) ||
      (l.kind == JohnsonLevel::Kind::AtLeast);
  CHECK(at_least_two);

  CHECK(johnson_level_to_string({JohnsonLevel::Kind::Finite, 2}) == "2");
  CHECK(johnson_level_to_string({JohnsonLevel::Kind::AtLeast, 4}) == ">=4");

  auto k3 = fixtures::complete(3);
  CHECK(error_code_of([&] { johnson_level(from_gen(k3, "tv:1,2"), 3); }) ==
        errc::not_torelli);
  CHECK(error_code_of([&] { johnson_level(k13, 0); }) == errc::bad_argument);
}

TEST_CASE("torelli abelianization ranks") {
  H1Report pent = torelli_h1_report(*fixtures::pentagon());
  CHECK(pent.generators == 5);
  CHECK(pent.rank == 5);
  CHECK(pent.ambient == 25);

  H1Report d3 = torelli_h1_report(*fixtures::discrete(3));
  CHECK(d3.generators == 9);
  CHECK(d3.rank == 9);
  CHECK(d3.ambient == 9);

  H1Report d2 = torelli_h1_report(*fixtures::discrete(2));
  CHECK(d2.generators == 2);
  CHECK(d2.rank == 2);
  CHECK(d2.ambient == 2);

  H1Report k3 = torelli_h1_report(*fixtures::complete(3));
  CHECK(k3.generators == 0);
  CHECK(k3.rank == 0);
  CHECK(k3.ambient == 0);
}
