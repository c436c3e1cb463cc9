#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "monspec/monoid.hpp"
#include "monspec/semilattice.hpp"

namespace monspec {

/// Default and hard upper limit on the generator count of anything that
/// materializes the free semilattice on the generators (2^k elements).
inline constexpr std::size_t kDefaultGeneratorCap = 10;
inline constexpr std::size_t kMaxGeneratorCap = 12;

/// A commutative word: one exponent per generator.
struct Word {
  std::vector<std::size_t> exponents;

  /// Generators occurring with positive exponent.
  ElementSet support() const;
  friend bool operator==(const Word&, const Word&) = default;
};

/// A finitely presented commutative monoid <generators | relations>.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<std::pair<Word, Word>> relations;

  std::size_t rank() const noexcept { return generators.size(); }
};

// Grammar (one construct per line, '#' starts a comment):
//
//   file      := gens-line [rels-line]
//   gens-line := "gens:" name+
//   rels-line := "rels:" relation (";" relation)*
//   relation  := word "=" word
//   word      := "1" | factor+
//   factor    := name ["^" integer]
//
// Names match [A-Za-z][A-Za-z0-9_]*.
Presentation parse_presentation(std::string_view text);

std::string format_word(const Presentation& p, const Word& w);
std::string format_presentation(const Presentation& p);

/// Subsets of k generators under union, ordered by size and then
/// lexicographically; the empty set is the identity. Element names are
/// `{a,b}` over `generator_names` (default g0, g1, ...).
JoinSemilattice free_semilattice(std::size_t k, std::vector<std::string> generator_names = {},
                                 std::size_t cap = kDefaultGeneratorCap);

/// Element of `free_semilattice(k)` holding the given subset.
Elem free_semilattice_index(std::size_t k, const ElementSet& subset);

struct PresentedSemilattice {
  JoinSemilattice semilattice;
  /// Image of each generator in the semilattice.
  std::vector<Elem> generator_images;
};

/// The idempotent reflection of a presented monoid: the free semilattice
/// on the generators modulo supp(u) = supp(v) for every relation u = v.
PresentedSemilattice sl_of_presentation(const Presentation& p, std::size_t cap = kDefaultGeneratorCap);

/// One generator per element and one relation per table entry
/// (g_a g_b = g_ab), plus g_identity = 1.
Presentation presentation_of_table(const FiniteMonoid& m);

}  // namespace monspec
