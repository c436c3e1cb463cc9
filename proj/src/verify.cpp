#include "monspec/verify.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "monspec/congruence.hpp"
#include "monspec/limits.hpp"
#include "monspec/spectrum.hpp"
#include "monspec/topology.hpp"

namespace monspec {

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

class Runner {
 public:
  void check(const std::string& property, const std::string& item, const std::function<bool()>& body) {
    auto& r = slot(property);
    ++r.checked;
    bool ok = false;
    try {
      ok = body();
    } catch (const Error&) {
      ok = false;
    }
    if (ok) {
      ++r.passed;
    } else if (r.first_failure.empty()) {
      r.first_failure = item;
    }
  }

  std::vector<PropertyResult> take() { return std::move(results_); }

 private:
  PropertyResult& slot(const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) return results_[it->second];
    index_.emplace(name, results_.size());
    results_.push_back({name, 0, 0, {}});
    return results_.back();
  }

  std::vector<PropertyResult> results_;
  std::map<std::string, std::size_t> index_;
};

// Every join semilattice with at most four elements, up to isomorphism.
std::vector<JoinSemilattice> small_semilattices() {
  return {chain(1), chain(2), chain(3), chain(4), free_semilattice(2)};
}

struct JoinMorphism {
  std::string label;
  MonotoneMap map;
};

// Monoid homomorphisms between semilattices are exactly the join morphisms.
std::vector<JoinMorphism> sample_join_morphisms(const std::vector<CorpusSemilattice>& pool, std::mt19937_64& rng,
                                                std::size_t wanted) {
  std::vector<JoinMorphism> out;
  if (pool.empty()) return out;
  for (std::size_t tries = 0; out.size() < wanted && tries < 20 * wanted; ++tries) {
    const auto& a = pool[pick(rng, pool.size())];
    const auto& b = pool[pick(rng, pool.size())];
    auto homs = homomorphisms(a.semilattice.monoid(), b.semilattice.monoid(), 8);
    if (homs.empty()) continue;
    auto& h = homs[pick(rng, homs.size())];
    out.push_back({a.name + " -> " + b.name, MonotoneMap{a.semilattice, b.semilattice, std::move(h.images)}});
  }
  return out;
}

std::vector<ElementSet> d_sets(const FiniteMonoid& m, const Spectrum& s) {
  std::vector<ElementSet> d(m.size(), ElementSet(s.size()));
  for (Elem a = 0; a < m.size(); ++a) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (!s.point(i).contains(a)) d[a].insert(static_cast<Elem>(i));
    }
  }
  return d;
}

void monoid_suite(Runner& run, const Corpus& c) {
  for (const auto& e : c.monoids) {
    const auto& m = e.monoid;
    run.check("monoid.units_submonoid", e.name, [&] { return is_submonoid(m, units(m)); });
    run.check("monoid.revalidate", e.name, [&] {
      std::vector<std::vector<Elem>> rows;
      for (Elem a = 0; a < m.size(); ++a) rows.emplace_back(m.row(a).begin(), m.row(a).end());
      return FiniteMonoid::validate(rows, 0).same_table(m);
    });
    if (m.size() <= 8) {
      run.check("monoid.hom_composition", e.name, [&] {
        const auto [l, q] = sl_reflection(m);
        for (const auto& f : homomorphisms(l.monoid(), sierpinski())) {
          if (!is_hom(compose(f, q))) return false;
        }
        return is_hom(q) && is_hom(compose(q, identity_map(m)));
      });
    }
  }
}

void congruence_suite(Runner& run, const Corpus& c) {
  const auto targets = small_semilattices();
  for (const auto& e : c.monoids) {
    const auto& m = e.monoid;
    if (m.size() <= 7) {
      run.check("congruence.grillet_equals_reflection", e.name, [&] {
        std::vector<std::pair<Elem, Elem>> squares;
        for (Elem x = 0; x < m.size(); ++x) squares.emplace_back(x, m.mul(x, x));
        return grillet_relation(m) == congruence_closure(m, squares);
      });
    }
    run.check("congruence.reflection_is_semilattice", e.name, [&] {
      const auto [l, q] = sl_reflection(m);
      return is_idempotent(l.monoid()) && is_hom(q);
    });
    if (m.size() <= 8) {
      run.check("congruence.reflection_universal", e.name, [&] {
        const auto [l, q] = sl_reflection(m);
        for (const auto& t : targets) {
          const auto from_m = homomorphisms(m, t.monoid());
          if (from_m.size() != homomorphisms(l.monoid(), t.monoid()).size()) return false;
          for (const auto& f : from_m) {
            for (Elem x = 0; x < m.size(); ++x) {
              for (Elem y = 0; y < m.size(); ++y) {
                if (q(x) == q(y) && f(x) != f(y)) return false;
              }
            }
          }
        }
        return true;
      });
    }
  }
}

void presentation_suite(Runner& run, const Corpus& c) {
  for (const auto& e : c.presentations) {
    run.check("presentation.three_routes", e.name, [&] {
      const auto a = spec_presentation(e.presentation);
      return a == spec_presentation_bruteforce(e.presentation) && a == spec_presentation_homs(e.presentation);
    });
  }
  for (const auto& e : c.monoids) {
    if (e.monoid.size() > 6) continue;
    run.check("presentation.table_consistency", e.name, [&] {
      const auto p = presentation_of_table(e.monoid);
      const auto ps = sl_of_presentation(p);
      if (!find_isomorphism(ps.semilattice.monoid(), sl_reflection(e.monoid).first.monoid())) return false;
      return spec_presentation(p).points() == primes_bruteforce(e.monoid).points();
    });
  }
  for (std::size_t k = 0; k <= 4; ++k) {
    run.check("presentation.free_spectrum_size", "rank " + std::to_string(k), [&] {
      Presentation p;
      for (std::size_t g = 0; g < k; ++g) p.generators.push_back("x" + std::to_string(g));
      return spec_presentation(p).size() == (std::size_t{1} << k);
    });
  }
}

void semilattice_suite(Runner& run, const Corpus& c, std::mt19937_64& rng) {
  for (const auto& e : c.semilattices) {
    const auto& l = e.semilattice;
    run.check("semilattice.lattice_laws", e.name, [&] {
      for (Elem a = 0; a < l.size(); ++a) {
        for (Elem b = 0; b < l.size(); ++b) {
          if (l.join(a, l.meet(a, b)) != a || l.meet(a, l.join(a, b)) != a) return false;
          if (l.leq(a, b) != (l.meet(a, b) == a)) return false;
        }
      }
      return true;
    });
    run.check("semilattice.identity_adjoint", e.name, [&] {
      const auto id = identity_map(l);
      return right_adjoint(id).images == id.images && left_adjoint(id).images == id.images;
    });
  }

  std::vector<CorpusSemilattice> pool;
  for (const auto& e : c.semilattices) {
    if (e.semilattice.size() <= 8) pool.push_back(e);
  }
  for (const auto& f : sample_join_morphisms(pool, rng, 150)) {
    run.check("semilattice.adjoint_roundtrip", f.label, [&] {
      const auto r = right_adjoint(f.map);
      return check_adjunction(f.map, r) && preserves_meets(r) && left_adjoint(r).images == f.map.images;
    });
  }
  for (std::size_t k = 0, tries = 0; k < 100 && tries < 2000 && !pool.empty(); ++tries) {
    const auto& a = pool[pick(rng, pool.size())];
    const auto& b = pool[pick(rng, pool.size())];
    const auto& d = pool[pick(rng, pool.size())];
    auto fs = homomorphisms(a.semilattice.monoid(), b.semilattice.monoid(), 8);
    auto gs = homomorphisms(b.semilattice.monoid(), d.semilattice.monoid(), 8);
    if (fs.empty() || gs.empty()) continue;
    const MonotoneMap f{a.semilattice, b.semilattice, fs[pick(rng, fs.size())].images};
    const MonotoneMap g{b.semilattice, d.semilattice, gs[pick(rng, gs.size())].images};
    ++k;
    run.check("semilattice.adjoint_of_composite", a.name + " -> " + b.name + " -> " + d.name, [&] {
      return right_adjoint(compose(g, f)).images == compose(right_adjoint(f), right_adjoint(g)).images;
    });
  }
}

void spectrum_suite(Runner& run, const Corpus& c, const VerifyOptions& options, std::mt19937_64& rng) {
  for (const auto& e : c.monoids) {
    const auto& m = e.monoid;
    run.check("spectrum.three_routes", e.name, [&] {
      const auto brute = primes_bruteforce(options.mutate ? mutate_table(m) : m);
      return brute == spec_via_homs(m) && brute == spec_monoid(m);
    });
    run.check("spectrum.largest_prime_is_nonunits", e.name, [&] {
      const auto s = spec_monoid(m);
      for (const auto& p : s.points()) {
        if (!p.is_subset_of(s.points().back())) return false;
      }
      return s.points().back() == units(m).complement();
    });
    if (m.size() > 8) continue;
    run.check("spectrum.theta_isomorphism", e.name, [&] {
      const auto homs = homs_to_I(m);
      const auto s = primes_bruteforce(m);
      if (homs.size() != s.size()) return false;
      std::vector<std::size_t> bij;
      for (const auto& f : homs) bij.push_back(s.find(theta(f)));
      for (std::size_t i = 0; i < homs.size(); ++i) {
        if (theta_inverse(m, theta(homs[i])).images != homs[i].images) return false;
        for (std::size_t j = 0; j < homs.size(); ++j) {
          if (theta(hom_product(homs[i], homs[j])) != (theta(homs[i]) | theta(homs[j]))) return false;
        }
      }
      return is_homeomorphism(bij, product_topology_on_homs(m, homs), spec_topology(m, s));
    });
    run.check("spectrum.spec_cubed", e.name, [&] { return spec_cubed_check(m); });
  }

  for (const auto& e : c.semilattices) {
    const auto& l = e.semilattice;
    run.check("spectrum.alpha_beta", e.name, [&] {
      const auto s = primes_bruteforce(l.monoid());
      if (!(spec_alpha(l).points() == s.points())) return false;
      std::vector<std::size_t> bij;
      for (Elem a = 0; a < l.size(); ++a) {
        const auto pa = alpha(l, a);
        bij.push_back(s.find(pa));
        if (beta(l, pa) != a) return false;
        for (Elem b = 0; b < l.size(); ++b) {
          if (alpha(l, l.meet(a, b)) != (pa | alpha(l, b))) return false;
          if (l.leq(a, b) != alpha(l, b).is_subset_of(pa)) return false;
        }
      }
      return is_homeomorphism(bij, ideal_opens(l), spec_topology(l.monoid(), s));
    });
    if (l.size() <= 8) {
      run.check("spectrum.ev_dualizing", e.name, [&] { return ev_check(l.monoid()) && spec_spec_check(l); });
    }
  }

  std::vector<CorpusSemilattice> pool;
  for (const auto& e : c.semilattices) {
    if (e.semilattice.size() <= 8) pool.push_back(e);
  }
  for (const auto& f : sample_join_morphisms(pool, rng, 120)) {
    run.check("spectrum.naturality", f.label, [&] { return naturality_square(f.map); });
  }

  // (g . f)^* = f^* . g^* for monoid homomorphisms M -> N -> P.
  std::vector<const CorpusMonoid*> small;
  for (const auto& e : c.monoids) {
    if (e.monoid.size() <= 6) small.push_back(&e);
  }
  for (std::size_t k = 0, tries = 0; k < 60 && tries < 1000 && !small.empty(); ++tries) {
    const auto& m1 = *small[pick(rng, small.size())];
    const auto& m2 = *small[pick(rng, small.size())];
    const auto& m3 = *small[pick(rng, small.size())];
    auto fs = homomorphisms(m1.monoid, m2.monoid, 8);
    auto gs = homomorphisms(m2.monoid, m3.monoid, 8);
    if (fs.empty() || gs.empty()) continue;
    const auto& f = fs[pick(rng, fs.size())];
    const auto& g = gs[pick(rng, gs.size())];
    ++k;
    run.check("spectrum.induced_maps_compose", m1.name + " -> " + m2.name + " -> " + m3.name, [&] {
      const auto s1 = spec_monoid(m1.monoid);
      const auto s2 = spec_monoid(m2.monoid);
      const auto s3 = spec_monoid(m3.monoid);
      const auto gf = induced_spec_map(compose(g, f), s3, s1);
      const auto g_star = induced_spec_map(g, s3, s2);
      const auto f_star = induced_spec_map(f, s2, s1);
      for (std::size_t i = 0; i < s3.size(); ++i) {
        if (gf[i] != f_star[g_star[i]]) return false;
      }
      return true;
    });
  }

  for (const auto& e : c.monoids) {
    for (std::size_t n = 2; n <= 3; ++n) {
      const auto& m = e.monoid;
      ElementSet powers(m.size());
      for (Elem a = 0; a < m.size(); ++a) powers.insert(m.power(a, n));
      if (pick(rng, 2) == 0) powers.insert(static_cast<Elem>(pick(rng, m.size())));
      const auto b = submonoid_closure(m, powers);
      run.check("spectrum.power_submonoid", e.name + " n=" + std::to_string(n),
                [&] { return power_submonoid_check(m, b) == PowerSubmonoidOutcome::kBijective; });
    }
  }
}

void topology_suite(Runner& run, const Corpus& c) {
  for (const auto& e : c.monoids) {
    const auto& m = e.monoid;
    run.check("topology.d_basis_multiplicative", e.name, [&] {
      const auto s = spec_monoid(m);
      const auto d = d_sets(m, s);
      for (Elem a = 0; a < m.size(); ++a) {
        for (Elem b = 0; b < m.size(); ++b) {
          if ((d[a] & d[b]) != d[m.mul(a, b)]) return false;
        }
      }
      return true;
    });
    run.check("topology.union_continuous", e.name, [&] {
      const auto s = spec_monoid(m);
      const auto t = spec_topology(m, s);
      return is_continuous_binary([&](std::size_t p, std::size_t q) { return s.union_index(p, q); }, t, t, t);
    });
  }
  for (const auto& e : c.semilattices) {
    run.check("topology.ideals_generate", e.name, [&] {
      const auto& l = e.semilattice;
      std::vector<ElementSet> ups;
      for (Elem a = 0; a < l.size(); ++a) ups.push_back(l.upset(a));
      return generate_topology(l.size(), ups) == ideal_opens(l);
    });
  }
}

void limits_suite(Runner& run, const Corpus& c, std::mt19937_64& rng) {
  std::size_t chains = 0;
  for (std::size_t round = 0; round < 4 && chains < 60; ++round) {
    for (const auto& e : c.monoids) {
      if (e.monoid.size() > 8 || e.monoid.size() < 2) continue;
      const auto ch = random_submonoid_chain(e.monoid, rng);
      ++chains;
      run.check("limits.zg", e.name, [&] { return zg_check(e.monoid, ch); });
    }
  }
  for (const auto& e : c.semilattices) {
    const auto& l = e.semilattice;
    run.check("limits.profinite", e.name, [&] {
      const auto subs = all_subsemilattices(l);
      const auto pf = profinite_spec(l, subs);
      if (!pf.bijective || pf.families.size() != l.size()) return false;
      const auto top = find_canonical(subs, ElementSet::full(l.size()));
      for (std::size_t i = 0; i < pf.families.size(); ++i) {
        if (pf.primes[i] != alpha(l, static_cast<Elem>(pf.families[i].choice[top]))) return false;
      }
      return true;
    });
  }
}

}  // namespace

FiniteMonoid mutate_table(const FiniteMonoid& m) {
  if (m.size() < 2) return m;
  std::vector<Elem> t(m.table().begin(), m.table().end());
  const std::size_t n = m.size();
  t[n + 1] = static_cast<Elem>((t[n + 1] + 1) % n);
  return FiniteMonoid::from_trusted(n, std::move(t), m.names());
}

bool VerifyReport::all_passed() const {
  for (const auto& p : properties) {
    if (!p.ok()) return false;
  }
  return true;
}

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  out << "seed " << seed << ": " << monoids << " monoids, " << semilattices << " semilattices, " << presentations
      << " presentations\n";
  for (const auto& p : properties) {
    out << (p.ok() ? "PASS " : "FAIL ") << p.name << " " << p.passed << "/" << p.checked;
    if (!p.ok()) out << " (first failure: " << p.first_failure << ")";
    out << "\n";
  }
  out << (all_passed() ? "all properties passed" : "some properties failed") << "\n";
  return out.str();
}

VerifyReport run_verify(const VerifyOptions& options) {
  const auto corpus = build_corpus(options.corpus);
  std::mt19937_64 rng(options.corpus.seed ^ 0x9e3779b97f4a7c15ULL);
  Runner run;
  monoid_suite(run, corpus);
  congruence_suite(run, corpus);
  presentation_suite(run, corpus);
  semilattice_suite(run, corpus, rng);
  spectrum_suite(run, corpus, options, rng);
  topology_suite(run, corpus);
  limits_suite(run, corpus, rng);

  VerifyReport report;
  report.seed = options.corpus.seed;
  report.monoids = corpus.monoids.size();
  report.semilattices = corpus.semilattices.size();
  report.presentations = corpus.presentations.size();
  report.properties = run.take();
  return report;
}

}  // namespace monspec
