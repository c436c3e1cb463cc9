#include <doctest.h>

#include "monspec/corpus.hpp"
#include "monspec/topology.hpp"
#include "oracles.hpp"

using namespace monspec;

TEST_SUITE("topology") {
  TEST_CASE("basic opens of I") {
    const auto i = sierpinski();
    const auto s = spec_monoid(i);
    const auto d = basis_D(i, s);
    CHECK(oracle::to_family(d) == oracle::Family{{0, 1}, {0}});
    const auto t = spec_topology(i, s);
    CHECK(oracle::to_family(t.opens()) == oracle::Family{{}, {0}, {0, 1}});
  }

  TEST_CASE("D of the identity is everything") {
    const auto corpus = build_corpus();
    for (const auto& e : corpus.monoids) {
      const auto s = spec_monoid(e.monoid);
      ElementSet d(s.size());
      for (std::size_t p = 0; p < s.size(); ++p) {
        if (!s.point(p).contains(0)) d.insert(static_cast<Elem>(p));
      }
      CHECK(d == ElementSet::full(s.size()));
    }
  }

  TEST_CASE("D over the Boolean square") {
    const auto m = free_semilattice(2).monoid();
    CHECK(basis_D(m, spec_monoid(m)).size() == 4);
  }

  TEST_CASE("topologies from bases") {
    CHECK(topology_from_basis(3, {ElementSet::full(3)}).opens().size() == 2);
    const auto discrete = topology_from_basis(3, {ElementSet(3, {0}), ElementSet(3, {1}), ElementSet(3, {2})});
    CHECK(discrete.opens().size() == 8);
    const auto s = spec_monoid(sierpinski());
    CHECK(topology_from_basis(2, basis_D(sierpinski(), s)).opens().size() == 3);
  }

  TEST_CASE("generated topology matches the closure oracle") {
    const std::vector<std::vector<ElementSet>> families{
        {},
        {ElementSet(4, {0, 1}), ElementSet(4, {1, 2})},
        {ElementSet(4, {0}), ElementSet(4, {3}), ElementSet(4, {1, 2})},
        {ElementSet(4, {0, 1, 2}), ElementSet(4, {1, 2, 3}), ElementSet(4, {2})},
    };
    for (const auto& f : families) {
      const auto t = generate_topology(4, f);
      CHECK(oracle::to_family(t.opens()) == oracle::topology_closure(4, oracle::to_family(f)));
      for (const auto& o : t.opens()) CHECK(t.is_open(o));
    }
  }

  TEST_CASE("open families are validated") {
    CHECK_THROWS_AS(FiniteTopology::from_opens(2, {ElementSet(2, {0})}), InputError);
    CHECK_THROWS_AS(FiniteTopology::from_opens(3, {ElementSet(3), ElementSet::full(3), ElementSet(3, {0}),
                                                   ElementSet(3, {1})}),
                    InputError);
    const auto t = FiniteTopology::from_opens(2, {ElementSet(2), ElementSet::full(2), ElementSet(2, {1})});
    CHECK(t.neighborhood(1) == ElementSet(2, {1}));
    CHECK(t.neighborhood(0) == ElementSet::full(2));
    CHECK_FALSE(t.is_open(ElementSet(2, {0})));
  }

  TEST_CASE("ideal topologies") {
    const auto c = ideal_opens(chain(3));
    CHECK(oracle::to_family(c.opens()) == oracle::Family{{}, {2}, {1, 2}, {0, 1, 2}});
    CHECK(ideal_opens(chain(1)).opens().size() == 2);
    CHECK(ideal_opens(free_semilattice(2)).opens().size() == 6);
    const auto corpus = build_corpus();
    for (const auto& e : corpus.semilattices) {
      const auto& l = e.semilattice;
      CHECK(oracle::to_family(ideal_opens(l).opens()) ==
            oracle::upsets(static_cast<int>(l.size()), oracle::order_of(l)));
    }
  }

  TEST_CASE("product topology on homomorphisms") {
    const auto i = sierpinski();
    const auto homs = homs_to_I(i);
    const auto t = product_topology_on_homs(i, homs);
    CHECK(t.opens().size() == 3);
    CHECK(t.is_open(ElementSet(2, {0})));
    CHECK(product_topology_on_homs(trivial_monoid(), homs_to_I(trivial_monoid())).opens().size() == 2);
    CHECK(product_topology_on_homs(cyclic_monoid(0, 2), homs_to_I(cyclic_monoid(0, 2))).opens().size() == 2);
  }

  TEST_CASE("homeomorphisms and continuity") {
    const auto sier = FiniteTopology::from_opens(2, {ElementSet(2), ElementSet::full(2), ElementSet(2, {0})});
    const auto disc = topology_from_basis(2, {ElementSet(2, {0}), ElementSet(2, {1})});
    const std::vector<std::size_t> id{0, 1};
    CHECK(is_homeomorphism(id, sier, sier));
    CHECK(is_homeomorphism(id, disc, disc));
    CHECK_FALSE(is_homeomorphism(id, sier, disc));
    CHECK(is_continuous(id, disc, sier));
    CHECK_FALSE(is_continuous(id, sier, disc));
    const std::vector<std::size_t> not_bijective{0, 0};
    CHECK_THROWS_AS(is_homeomorphism(not_bijective, sier, sier), InputError);

    const auto i = sierpinski();
    const auto homs = homs_to_I(i);
    const auto s = spec_monoid(i);
    std::vector<std::size_t> th;
    for (const auto& f : homs) th.push_back(s.find(theta(f)));
    CHECK(is_homeomorphism(th, product_topology_on_homs(i, homs), spec_topology(i, s)));
  }

  TEST_CASE("union is continuous on spectra") {
    const auto m = direct_product(sierpinski(), cyclic_monoid(1, 2));
    const auto s = spec_monoid(m);
    const auto t = spec_topology(m, s);
    CHECK(is_continuous_binary([&](std::size_t p, std::size_t q) { return s.union_index(p, q); }, t, t, t));
    CHECK(is_continuous_binary([](std::size_t, std::size_t) { return std::size_t{0}; }, t, t, t));
    const auto sier = FiniteTopology::from_opens(2, {ElementSet(2), ElementSet::full(2), ElementSet(2, {0})});
    CHECK_FALSE(is_continuous_binary([](std::size_t p, std::size_t) { return 1 - p; }, sier, sier, sier));
  }
}
