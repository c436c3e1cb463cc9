#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "monspec/monoid.hpp"
#include "monspec/presentation.hpp"
#include "monspec/semilattice.hpp"

namespace monspec {

struct CorpusMonoid {
  std::string name;
  FiniteMonoid monoid;
};

struct CorpusSemilattice {
  std::string name;
  JoinSemilattice semilattice;
};

struct CorpusPresentation {
  std::string name;
  Presentation presentation;
};

struct CorpusOptions {
  std::uint64_t seed = 1;
  std::size_t max_table_size = 10;
  std::size_t max_generators = 6;
  std::size_t random_quotients = 120;
  std::size_t random_subsemilattices = 30;
  std::size_t random_presentations = 80;
};

/// Deterministic test corpus for a given seed.
///
/// Monoids: trivial, I, cyclic monoids <t | t^(i+p) = t^i>, chains, free
/// semilattices, monoids with zero and nilpotent generators, products of
/// these, and random quotients. Semilattices: the idempotent monoids, the
/// reflections of all corpus monoids, and random subsemilattices of the
/// free semilattice on four generators. Presentations: named examples,
/// cyclic presentations and random ones.
struct Corpus {
  std::vector<CorpusMonoid> monoids;
  std::vector<CorpusSemilattice> semilattices;
  std::vector<CorpusPresentation> presentations;
};

Corpus build_corpus(const CorpusOptions& options = {});

/// {1, x_1, ..., x_k, 0} with x_i x_j = 0 and 0 absorbing.
FiniteMonoid nilpotent_monoid(std::size_t k);

/// A random presentation with 1..max_generators generators.
Presentation random_presentation(std::mt19937_64& rng, std::size_t max_generators);

/// A random increasing chain of submonoids of `m`, ending at `m`.
std::vector<ElementSet> random_submonoid_chain(const FiniteMonoid& m, std::mt19937_64& rng);

}  // namespace monspec
