#include "monspec/corpus.hpp"

#include "monspec/congruence.hpp"
#include "monspec/limits.hpp"

namespace monspec {

namespace {

// Portable uniform-ish pick; std distributions differ between libraries.
std::size_t pick(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

}  // namespace

FiniteMonoid nilpotent_monoid(std::size_t k) {
  const std::size_t n = k + 2;
  const Elem zero = static_cast<Elem>(n - 1);
  std::vector<Elem> table(n * n, zero);
  std::vector<std::string> names(n);
  for (Elem a = 0; a < n; ++a) {
    names[a] = a == 0 ? "1" : (a == zero ? "0" : "x" + std::to_string(a));
    table[a] = a;
    table[a * n] = a;
  }
  return FiniteMonoid::from_trusted(n, std::move(table), std::move(names));
}

Presentation random_presentation(std::mt19937_64& rng, std::size_t max_generators) {
  Presentation p;
  const std::size_t k = 1 + pick(rng, max_generators);
  for (std::size_t g = 0; g < k; ++g) p.generators.push_back(std::string(1, static_cast<char>('a' + g)));
  const std::size_t rels = pick(rng, 5);
  auto word = [&] {
    Word w{std::vector<std::size_t>(k, 0)};
    for (std::size_t g = 0; g < k; ++g) {
      if (pick(rng, 5) < 2) w.exponents[g] = 1 + pick(rng, 3);
    }
    return w;
  };
  for (std::size_t r = 0; r < rels; ++r) p.relations.emplace_back(word(), word());
  return p;
}

std::vector<ElementSet> random_submonoid_chain(const FiniteMonoid& m, std::mt19937_64& rng) {
  std::vector<ElementSet> chain;
  ElementSet current = submonoid_closure(m, ElementSet(m.size()));
  chain.push_back(current);
  const auto full = ElementSet::full(m.size());
  while (!(current == full)) {
    std::vector<Elem> outside;
    for (Elem x = 0; x < m.size(); ++x) {
      if (!current.contains(x)) outside.push_back(x);
    }
    ElementSet add = current;
    add.insert(outside[pick(rng, outside.size())]);
    current = submonoid_closure(m, add);
    // Occasionally skip recording a stage so chains vary in length.
    if (pick(rng, 3) != 0 || current == full) chain.push_back(current);
  }
  return chain;
}

Corpus build_corpus(const CorpusOptions& options) {
  std::mt19937_64 rng(options.seed);
  Corpus c;
  const std::size_t cap = options.max_table_size;
  auto add = [&](std::string name, FiniteMonoid m) {
    if (m.size() <= cap) c.monoids.push_back({std::move(name), std::move(m)});
  };

  add("trivial", trivial_monoid());
  add("I", sierpinski());
  for (std::size_t n = 2; n <= std::min<std::size_t>(cap, 6); ++n) add("Z/" + std::to_string(n), cyclic_monoid(0, n));
  for (std::size_t i = 1; i < cap; ++i) {
    for (std::size_t p = 1; i + p <= cap; ++p) {
      add("cyclic(" + std::to_string(i) + "," + std::to_string(p) + ")", cyclic_monoid(i, p));
    }
  }
  for (std::size_t n = 3; n <= cap; ++n) add("chain" + std::to_string(n), chain_monoid(n));
  for (std::size_t k = 2; (std::size_t{1} << k) <= cap; ++k) {
    add("free_sl(" + std::to_string(k) + ")", free_semilattice(k).monoid());
  }
  for (std::size_t k = 1; k + 2 <= cap; ++k) add("nil(" + std::to_string(k) + ")", nilpotent_monoid(k));

  const std::vector<CorpusMonoid> small = [&] {
    std::vector<CorpusMonoid> s;
    for (const auto& e : c.monoids) {
      if (e.monoid.size() >= 2 && e.monoid.size() <= 5) s.push_back(e);
    }
    return s;
  }();
  for (std::size_t i = 0; i < small.size(); ++i) {
    for (std::size_t j = i; j < small.size(); ++j) {
      if (small[i].monoid.size() * small[j].monoid.size() > cap) continue;
      // Keep the product family a manageable share of the corpus.
      if (pick(rng, 3) != 0) continue;
      add(small[i].name + "x" + small[j].name, direct_product(small[i].monoid, small[j].monoid));
    }
  }

  // Random quotients of products that may exceed the cap before quotienting.
  std::vector<FiniteMonoid> bases;
  for (const auto& e : small) bases.push_back(e.monoid);
  for (std::size_t made = 0, tries = 0; made < options.random_quotients && tries < 20 * options.random_quotients; ++tries) {
    FiniteMonoid base = bases[pick(rng, bases.size())];
    if (pick(rng, 2) == 0) base = direct_product(base, bases[pick(rng, bases.size())]);
    std::vector<std::pair<Elem, Elem>> pairs;
    const std::size_t np = 1 + pick(rng, 2);
    for (std::size_t k = 0; k < np; ++k) {
      pairs.emplace_back(static_cast<Elem>(pick(rng, base.size())), static_cast<Elem>(pick(rng, base.size())));
    }
    auto q = quotient(base, congruence_closure(base, pairs)).first;
    if (q.size() < 2 || q.size() > cap) continue;
    add("quotient#" + std::to_string(made), std::move(q));
    ++made;
  }

  for (const auto& e : c.monoids) {
    if (is_idempotent(e.monoid)) {
      c.semilattices.push_back({e.name, JoinSemilattice::from_monoid(e.monoid)});
    } else {
      c.semilattices.push_back({e.name + "^sl", sl_reflection(e.monoid).first});
    }
  }
  const auto b4 = free_semilattice(4);
  for (std::size_t made = 0, tries = 0; made < options.random_subsemilattices && tries < 20 * options.random_subsemilattices; ++tries) {
    ElementSet gens(b4.size());
    const std::size_t ng = 2 + pick(rng, 3);
    for (std::size_t k = 0; k < ng; ++k) gens.insert(static_cast<Elem>(pick(rng, b4.size())));
    const auto sub = generated_subsemilattice(b4, gens);
    if (sub.count() < 3 || sub.count() > cap) continue;
    c.semilattices.push_back({"sub_B4#" + std::to_string(made),
                              JoinSemilattice::from_monoid(restrict_to(b4.monoid(), sub).first)});
    ++made;
  }

  auto pres = [&](std::string name, const std::string& text) {
    c.presentations.push_back({std::move(name), parse_presentation(text)});
  };
  pres("N", "gens: t");
  pres("N^2", "gens: x y");
  pres("x2y=y3", "gens: x y\nrels: x^2 y = y^3");
  pres("x2=1", "gens: x\nrels: x^2 = 1");
  pres("N^3", "gens: x y z");
  pres("xy=1", "gens: x y z\nrels: x y = 1");
  pres("xy=z", "gens: x y z\nrels: x y = z");
  for (std::size_t i = 0; i <= 3; ++i) {
    for (std::size_t p = 1; p <= 3; ++p) {
      pres("cyclic_pres(" + std::to_string(i) + "," + std::to_string(p) + ")",
           "gens: t\nrels: t^" + std::to_string(i + p) + " = t^" + std::to_string(i));
    }
  }
  for (std::size_t k = 0; k < options.random_presentations; ++k) {
    c.presentations.push_back({"random_pres#" + std::to_string(k), random_presentation(rng, options.max_generators)});
  }
  return c;
}

}  // namespace monspec
