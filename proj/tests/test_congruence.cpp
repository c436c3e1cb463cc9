#include <doctest.h>

#include <random>

#include "monspec/congruence.hpp"
#include "monspec/corpus.hpp"
#include "oracles.hpp"

using namespace monspec;

namespace {

std::vector<int> labels_of(const Congruence& c) {
  std::vector<int> out;
  for (Elem x = 0; x < c.universe(); ++x) out.push_back(static_cast<int>(c.representative(x)));
  return out;
}

std::vector<std::pair<Elem, Elem>> squares(const FiniteMonoid& m) {
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem x = 0; x < m.size(); ++x) out.emplace_back(x, m.mul(x, x));
  return out;
}

}  // namespace

TEST_SUITE("congruence") {
  TEST_CASE("closure examples") {
    CHECK(congruence_closure(sierpinski(), {{0, 1}}).class_count() == 1);
    const auto z2 = cyclic_monoid(0, 2);
    CHECK(congruence_closure(z2, {}) == Congruence::discrete(2));
    const auto m = cyclic_monoid(2, 2);
    const auto c = congruence_closure(m, squares(m));
    CHECK(c.classes() == std::vector<std::vector<Elem>>{{0}, {1, 2, 3}});
    CHECK(is_congruence(m, c));
    CHECK_THROWS_AS(congruence_closure(m, {{0, 9}}), InputError);
  }

  TEST_CASE("closure matches the saturation oracle") {
    std::mt19937_64 rng(5);
    const auto corpus = build_corpus();
    for (const auto& e : corpus.monoids) {
      const auto& m = e.monoid;
      if (m.size() > 8) continue;
      std::vector<std::pair<Elem, Elem>> pairs;
      std::vector<std::pair<int, int>> ipairs;
      const auto k = rng() % 3;
      for (std::size_t i = 0; i < k; ++i) {
        const auto a = static_cast<Elem>(rng() % m.size());
        const auto b = static_cast<Elem>(rng() % m.size());
        pairs.emplace_back(a, b);
        ipairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
      }
      CAPTURE(e.name);
      const auto c = congruence_closure(m, pairs);
      CHECK(labels_of(c) == oracle::congruence_closure(oracle::table_of(m), ipairs));
      CHECK(is_congruence(m, c));
    }
  }

  TEST_CASE("partition validity") {
    CHECK_THROWS(Congruence({1, 1}));
    CHECK_THROWS(Congruence({0, 0, 1}));
    CHECK(Congruence({0, 0, 2}).class_count() == 2);
    // In the 3-chain, {0} | {1, 2} is compatible; {0, 2} | {1} is not (0*1 = 1, 2*1 = 2).
    CHECK(is_congruence(chain_monoid(3), Congruence({0, 1, 1})));
    CHECK_FALSE(is_congruence(chain_monoid(3), Congruence({0, 1, 0})));
  }

  TEST_CASE("quotients") {
    const auto m = cyclic_monoid(2, 2);
    const auto [same, q0] = quotient(m, Congruence::discrete(m.size()));
    CHECK(same.same_table(m));
    CHECK(q0.images == identity_map(m).images);
    CHECK(quotient(m, congruence_closure(m, {{0, 1}})).first.size() == 1);
    const auto [two, q] = quotient(m, congruence_closure(m, squares(m)));
    CHECK(two.same_table(sierpinski()));
    CHECK(is_hom(q));
  }

  TEST_CASE("idempotent reflection") {
    const auto [li, qi] = sl_reflection(sierpinski());
    CHECK(li.monoid().same_table(sierpinski()));
    CHECK(qi.images == std::vector<Elem>{0, 1});
    CHECK(sl_reflection(cyclic_monoid(0, 2)).first.size() == 1);
    CHECK(sl_reflection(cyclic_monoid(2, 2)).first.monoid().same_table(sierpinski()));
  }

  TEST_CASE("grillet relation examples") {
    CHECK(grillet_relation(sierpinski()).classes() == std::vector<std::vector<Elem>>{{0}, {1}});
    CHECK(grillet_relation(cyclic_monoid(0, 2)).class_count() == 1);
    CHECK(grillet_relation(cyclic_monoid(2, 2)).classes() == std::vector<std::vector<Elem>>{{0}, {1, 2, 3}});
    CHECK(grillet_related(cyclic_monoid(2, 2), 1, 3));
    CHECK_FALSE(grillet_related(sierpinski(), 0, 1));
  }

  TEST_CASE("grillet relation matches the oracle and the reflection") {
    const auto corpus = build_corpus();
    for (const auto& e : corpus.monoids) {
      if (e.monoid.size() > 7) continue;
      CAPTURE(e.name);
      const auto g = grillet_relation(e.monoid);
      CHECK(labels_of(g) == oracle::grillet_classes(oracle::table_of(e.monoid)));
      CHECK(g == congruence_closure(e.monoid, squares(e.monoid)));
    }
  }
}
