#include <doctest.h>

#include "monspec/congruence.hpp"
#include "monspec/corpus.hpp"
#include "monspec/spectrum.hpp"
#include "oracles.hpp"

using namespace monspec;

namespace {

FiniteMonoid z2() { return cyclic_monoid(0, 2); }

std::vector<std::string> rendered(const Spectrum& s) { return s.rendered_points(); }

}  // namespace

TEST_SUITE("spectrum") {
  TEST_CASE("prime ideal predicate") {
    const auto i = sierpinski();
    CHECK(is_prime_ideal(i, ElementSet(2)));
    CHECK(is_prime_ideal(i, ElementSet(2, {1})));
    CHECK_FALSE(is_prime_ideal(i, ElementSet(2, {0, 1})));
    const auto m = cyclic_monoid(2, 2);
    CHECK(is_prime_ideal(m, ElementSet(4, {1, 2, 3})));
    // {t^2, t^3} is an ideal but t * t lies in it.
    CHECK_FALSE(is_prime_ideal(m, ElementSet(4, {2, 3})));
  }

  TEST_CASE("brute force examples") {
    const auto si = primes_bruteforce(sierpinski());
    CHECK(rendered(si) == std::vector<std::string>{"{}", "{0}"});
    CHECK(primes_bruteforce(z2()).size() == 1);
    CHECK(primes_bruteforce(free_semilattice(2).monoid()).size() == 4);
    CHECK(primes_bruteforce(trivial_monoid()).size() == 1);
    CHECK_THROWS_AS(primes_bruteforce(chain_monoid(17)), CapExceeded);
    CHECK_THROWS_AS(primes_bruteforce(chain_monoid(9), 8), CapExceeded);
  }

  TEST_CASE("homomorphisms into I") {
    CHECK(homs_to_I(sierpinski()).size() == 2);
    CHECK(homs_to_I(z2()).size() == 1);
    CHECK(homs_to_I(trivial_monoid()).size() == 1);
    const auto homs = homs_to_I(sierpinski());
    CHECK(theta(homs[0]).empty());
    CHECK(theta(homs[1]) == ElementSet(2, {1}));
    CHECK(homs[1].images == identity_map(sierpinski()).images);
    CHECK(theta_inverse(sierpinski(), ElementSet(2, {1})).images == identity_map(sierpinski()).images);
    CHECK(theta(hom_product(homs[0], homs[1])) == ElementSet(2, {1}));
  }

  TEST_CASE("hom monoid is the spectrum under union") {
    const auto m = cyclic_monoid(1, 2);
    const auto [h, homs] = hom_monoid(m);
    CHECK(h.size() == homs.size());
    CHECK(find_isomorphism(h, primes_bruteforce(m).as_monoid()).has_value());
  }

  TEST_CASE("alpha and beta on a chain") {
    const auto c = chain(3);
    CHECK(alpha(c, 1) == ElementSet(3, {2}));
    CHECK(alpha(c, c.top()).empty());
    CHECK(alpha(c, 0) == ElementSet(3, {1, 2}));
    CHECK(beta(c, ElementSet(3, {2})) == 1);
    CHECK(beta(c, ElementSet(3)) == c.top());
    CHECK(beta(c, ElementSet(3, {1, 2})) == 0);
  }

  TEST_CASE("spectra of presentations") {
    const auto n = spec_presentation(parse_presentation("gens: t"));
    CHECK(rendered(n) == std::vector<std::string>{"{}", "(t)"});
    CHECK(n.kind() == PointKind::kGeneratorSupport);
    const auto n2 = spec_presentation(parse_presentation("gens: x y"));
    CHECK(rendered(n2) == std::vector<std::string>{"{}", "(x)", "(y)", "(x, y)"});
    CHECK(spec_monoid(z2()).size() == 1);
    const auto rel = spec_presentation(parse_presentation("gens: x y\nrels: x^2 y = y^3"));
    CHECK(rendered(rel) == std::vector<std::string>{"{}", "(y)", "(x, y)"});
    CHECK(spec_presentation(parse_presentation("gens: x\nrels: x^2 = 1")).size() == 1);
    CHECK_THROWS_AS(spec_presentation_bruteforce(parse_presentation("gens: a b c d e"), 4), CapExceeded);
  }

  TEST_CASE("union of primes") {
    const auto s = primes_bruteforce(free_semilattice(2).monoid());
    for (std::size_t p = 0; p < s.size(); ++p) {
      CHECK(spec_union(s, 0, p) == p);
      CHECK(spec_union(s, p, p) == p);
    }
    CHECK(spec_union(s, 1, 2) == 3);
    CHECK(s.point(3) == (s.point(1) | s.point(2)));
    CHECK(oracle::is_monoid(oracle::table_of(s.as_monoid()), 0));
    CHECK(is_idempotent(s.as_monoid()));
  }

  TEST_CASE("point families are validated") {
    CHECK_THROWS_AS(Spectrum::from_points({ElementSet(3, {1})}, {"a", "b", "c"}), IntegrityError);
    CHECK_THROWS_AS(Spectrum::from_points({ElementSet(3), ElementSet(3, {1}), ElementSet(3, {2})}, {"a", "b", "c"}),
                    IntegrityError);
    const auto s = Spectrum::from_points({ElementSet(3, {1}), ElementSet(3), ElementSet(3, {1})}, {"a", "b", "c"});
    CHECK(s.size() == 2);
    CHECK(s.find(ElementSet(3, {1})) == 1);
    CHECK(s.find(ElementSet(3, {2})) == static_cast<std::size_t>(-1));
  }

  TEST_CASE("three routes agree with the subset oracle on the corpus") {
    const auto corpus = build_corpus();
    for (const auto& e : corpus.monoids) {
      CAPTURE(e.name);
      const auto expected = oracle::primes(oracle::table_of(e.monoid));
      const auto brute = primes_bruteforce(e.monoid);
      CHECK(oracle::to_family(brute.points()) == expected);
      CHECK(spec_via_homs(e.monoid) == brute);
      CHECK(spec_monoid(e.monoid) == brute);
    }
    for (const auto& e : corpus.presentations) {
      CAPTURE(e.name);
      const auto expected = oracle::presentation_primes(e.presentation);
      const auto a = spec_presentation(e.presentation);
      CHECK(oracle::to_family(a.points()) == expected);
      CHECK(spec_presentation_bruteforce(e.presentation) == a);
      CHECK(spec_presentation_homs(e.presentation) == a);
    }
  }

  TEST_CASE("induced maps") {
    const auto m = cyclic_monoid(2, 2);
    const auto s = spec_monoid(m);
    const auto id = induced_spec_map(identity_map(m), s, s);
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(id[i] == i);

    const auto [l, q] = sl_reflection(m);
    const auto sl = spec_monoid(l.monoid());
    const auto back = induced_spec_map(q, sl, s);
    CHECK(sl.size() == s.size());
    CHECK(std::set<std::size_t>(back.begin(), back.end()).size() == s.size());

    const auto i = sierpinski();
    const auto ii = direct_product(i, i);
    const MonoidMap first{i, ii, {0, 2}};
    REQUIRE(is_hom(first));
    const auto si = spec_monoid(i);
    const auto sii = spec_monoid(ii);
    CHECK(sii.size() == 4);
    const auto pre = induced_spec_map(first, sii, si);
    for (auto idx : pre) CHECK(idx < si.size());
  }

  TEST_CASE("naturality square") {
    const auto id = identity_map(free_semilattice(2));
    CHECK(naturality_square(id));
    const MonotoneMap f{chain(2), chain(3), {0, 1}};
    CHECK(naturality_square(f));
    CHECK(naturality_square(f, right_adjoint(f)));
    const MonotoneMap wrong{chain(3), chain(2), {0, 0, 1}};
    CHECK_FALSE(naturality_square(f, wrong));
  }

  TEST_CASE("double dual and iterated spectra") {
    CHECK(ev_check(sierpinski()));
    CHECK(ev_check(trivial_monoid()));
    CHECK(ev_check(free_semilattice(2).monoid()));
    CHECK(spec_spec_check(JoinSemilattice::from_monoid(sierpinski())));
    CHECK(spec_spec_check(chain(3)));
    CHECK(spec_spec_check(free_semilattice(2)));
    CHECK(spec_cubed_check(cyclic_monoid(2, 3)));
    CHECK(spec_cubed_check(direct_product(z2(), sierpinski())));
  }

  TEST_CASE("power submonoids") {
    const auto a = cyclic_monoid(2, 2);
    CHECK(power_submonoid_check(a, ElementSet::full(4)) == PowerSubmonoidOutcome::kBijective);
    // t^2 t^2 = t^4 = t^2, so t^2 generates {1, t^2}; t^3 has square t^2.
    const auto b = submonoid_closure(a, ElementSet(4, {2}));
    CHECK(b == ElementSet(4, {0, 2}));
    CHECK(power_submonoid_check(a, b) == PowerSubmonoidOutcome::kBijective);
    CHECK(primes_bruteforce(a).size() == 2);
    CHECK(primes_bruteforce(restrict_to(a, b).first).size() == 2);
    CHECK(power_submonoid_check(a, ElementSet(4, {0, 2, 3})) == PowerSubmonoidOutcome::kBijective);
    CHECK(power_submonoid_check(z2(), ElementSet(2, {0})) == PowerSubmonoidOutcome::kBijective);
    CHECK(power_submonoid_check(sierpinski(), ElementSet(2, {0})) == PowerSubmonoidOutcome::kHypothesisFails);
    CHECK(power_submonoid_check(a, ElementSet(4, {0, 1})) == PowerSubmonoidOutcome::kNotSubmonoid);
    CHECK(std::string(to_string(PowerSubmonoidOutcome::kBijective)) == "bijective");
  }

  TEST_CASE("text and dot output") {
    const auto n2 = spec_presentation(parse_presentation("gens: x y"));
    CHECK(n2.to_text() == "{}\n(x)\n(y)\n(x, y)\n");
    const auto dot = n2.to_dot();
    CHECK(dot.find("n0 -> n1;") != std::string::npos);
    CHECK(dot.find("n2 -> n3;") != std::string::npos);
    CHECK(dot.find("n0 -> n3;") == std::string::npos);
  }
}
