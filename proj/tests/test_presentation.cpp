#include <doctest.h>

#include <random>

#include "monspec/congruence.hpp"
#include "monspec/corpus.hpp"
#include "monspec/presentation.hpp"
#include "oracles.hpp"

using namespace monspec;

TEST_SUITE("presentation") {
  TEST_CASE("parse examples") {
    const auto n = parse_presentation("gens: t");
    CHECK(n.generators == std::vector<std::string>{"t"});
    CHECK(n.relations.empty());

    const auto p = parse_presentation("gens: x y\nrels: x^2 y = y^3");
    REQUIRE(p.relations.size() == 1);
    CHECK(p.relations[0].first.exponents == std::vector<std::size_t>{2, 1});
    CHECK(p.relations[0].second.exponents == std::vector<std::size_t>{0, 3});

    const auto c = parse_presentation("gens: x\nrels: x^2 = x^0");
    REQUIRE(c.relations.size() == 1);
    CHECK(c.relations[0].second.exponents == std::vector<std::size_t>{0});
    CHECK(parse_presentation("gens: x\nrels: x^2 = 1").relations[0] == c.relations[0]);
  }

  TEST_CASE("parse accepts comments, repeated factors and several relations") {
    const auto p = parse_presentation("# two relations\ngens: a b c\n\nrels: a b a = c ; b^2 = 1  # trailing\n");
    REQUIRE(p.relations.size() == 2);
    CHECK(p.relations[0].first.exponents == std::vector<std::size_t>{2, 1, 0});
    CHECK(p.relations[1].second.exponents == std::vector<std::size_t>{0, 0, 0});
  }

  TEST_CASE("parse errors carry positions") {
    auto where = [](const char* text) {
      try {
        parse_presentation(text);
      } catch (const ParseError& e) {
        return std::pair<std::size_t, std::size_t>{e.line(), e.column()};
      }
      return std::pair<std::size_t, std::size_t>{0, 0};
    };
    CHECK(where("gens: x y\nrels: x^-1 = y") == std::pair<std::size_t, std::size_t>{2, 9});
    CHECK(where("gens: x\nrels: x = z") == std::pair<std::size_t, std::size_t>{2, 11});
    CHECK(where("gens: x x") == std::pair<std::size_t, std::size_t>{1, 9});
    CHECK(where("rels: x = 1") == std::pair<std::size_t, std::size_t>{1, 1});
    CHECK(where("gens:") == std::pair<std::size_t, std::size_t>{1, 6});
    CHECK(where("gens: x\nrels: x 2 = 1").first == 2);
    CHECK(where("gens: x\nrels: x = 0").first == 2);
    CHECK(where("gens: x\nrels: x\n") == std::pair<std::size_t, std::size_t>{2, 8});
    CHECK(where("gens: x\nrels: x = 1\nrels: x = x") == std::pair<std::size_t, std::size_t>{3, 1});
    CHECK(where("gens: x\nrels: x = 1 x = 1").first == 2);
    CHECK(where("gens: x\nrels: x^99999999999999999999 = 1").first == 2);
    CHECK_THROWS_WITH_AS(parse_presentation("gens: x\nrels: x^-2 = 1"), doctest::Contains("negative exponent"),
                         ParseError);
  }

  TEST_CASE("format round trip") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
      const auto p = random_presentation(rng, 5);
      const auto q = parse_presentation(format_presentation(p));
      CHECK(q.generators == p.generators);
      CHECK(q.relations == p.relations);
    }
    CHECK(format_presentation(parse_presentation("gens: x y\nrels: y^3 = x^2 y")) == "gens: x y\nrels: y^3 = x^2 y\n");
  }

  TEST_CASE("free semilattices") {
    CHECK(free_semilattice(0).size() == 1);
    const auto one = free_semilattice(1);
    CHECK(one.monoid().same_table(sierpinski()));
    const auto two = free_semilattice(2, {"x", "y"});
    CHECK(two.size() == 4);
    CHECK(two.names() == std::vector<std::string>{"{}", "{x}", "{y}", "{x,y}"});
    const auto t = oracle::table_of(two.monoid());
    CHECK(oracle::is_monoid(t, 0));
    for (int a = 0; a < 4; ++a) CHECK(t[a][a] == a);
    CHECK(free_semilattice_index(2, ElementSet(2, {0, 1})) == 3);
    CHECK(free_semilattice_index(4, ElementSet(4, {})) == 0);
    CHECK(free_semilattice_index(4, ElementSet::full(4)) == 15);
    CHECK_THROWS_AS(free_semilattice(kMaxGeneratorCap + 1, {}, 100), CapExceeded);
    CHECK_THROWS_AS(free_semilattice(5, {}, 4), CapExceeded);
  }

  TEST_CASE("free semilattice order is subset inclusion") {
    const auto l = free_semilattice(3);
    std::vector<ElementSet> subsets;
    for (unsigned mask = 0; mask < 8; ++mask) {
      ElementSet s(3);
      for (Elem g = 0; g < 3; ++g) {
        if ((mask >> g) & 1u) s.insert(g);
      }
      subsets.push_back(s);
    }
    for (const auto& a : subsets) {
      for (const auto& b : subsets) {
        CHECK(l.leq(free_semilattice_index(3, a), free_semilattice_index(3, b)) == a.is_subset_of(b));
        CHECK(l.join(free_semilattice_index(3, a), free_semilattice_index(3, b)) == free_semilattice_index(3, a | b));
      }
    }
  }

  TEST_CASE("reflection of presentations") {
    const auto n = sl_of_presentation(parse_presentation("gens: t"));
    CHECK(n.semilattice.monoid().same_table(sierpinski()));
    CHECK(n.generator_images == std::vector<Elem>{1});

    const auto p = sl_of_presentation(parse_presentation("gens: x y\nrels: x^2 y = y^3"));
    REQUIRE(p.semilattice.size() == 3);
    CHECK(p.semilattice.monoid().same_table(chain_monoid(3)));
    CHECK(p.generator_images == std::vector<Elem>{1, 2});

    CHECK(sl_of_presentation(parse_presentation("gens: x\nrels: x^2 = 1")).semilattice.size() == 1);
    CHECK_THROWS_AS(sl_of_presentation(parse_presentation("gens: a b c d e"), 4), CapExceeded);
  }

  TEST_CASE("presentation of a table recovers the reflection") {
    const auto corpus = build_corpus();
    for (const auto& e : corpus.monoids) {
      if (e.monoid.size() > 6) continue;
      CAPTURE(e.name);
      const auto p = presentation_of_table(e.monoid);
      CHECK(p.rank() == e.monoid.size());
      const auto a = oracle::table_of(sl_of_presentation(p).semilattice.monoid());
      const auto b = oracle::table_of(sl_reflection(e.monoid).first.monoid());
      CHECK(oracle::isomorphic(a, b));
    }
  }
}
