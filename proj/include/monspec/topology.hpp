#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "monspec/element_set.hpp"
#include "monspec/monoid.hpp"
#include "monspec/semilattice.hpp"
#include "monspec/spectrum.hpp"

namespace monspec {

/// A topology on the points 0..n-1, stored as its full canonically ordered
/// family of open sets.
class FiniteTopology {
 public:
  /// Throws `InputError` unless the family contains the empty and full sets
  /// and is closed under pairwise union and intersection.
  static FiniteTopology from_opens(std::size_t points, std::vector<ElementSet> opens);

  FiniteTopology() = default;

  std::size_t point_count() const noexcept { return points_; }
  const std::vector<ElementSet>& opens() const noexcept { return opens_; }
  bool is_open(const ElementSet& s) const;

  /// Smallest open set containing x.
  const ElementSet& neighborhood(Elem x) const { return neighborhoods_.at(x); }

  /// One open per line, canonical order, points named by `labels`.
  std::string to_text(std::span<const std::string> labels = {}) const;

  friend bool operator==(const FiniteTopology& a, const FiniteTopology& b) {
    return a.points_ == b.points_ && a.opens_ == b.opens_;
  }

 private:
  std::size_t points_ = 0;
  std::vector<ElementSet> opens_;
  std::vector<ElementSet> neighborhoods_;
};

/// The coarsest topology in which every set of `family` is open: the
/// closure of the family under finite unions and intersections, together
/// with the empty and full sets.
FiniteTopology generate_topology(std::size_t points, std::vector<ElementSet> family);

/// D(a) = {p in Spec | a not in p} for every element a, duplicates removed.
std::vector<ElementSet> basis_D(const FiniteMonoid& m, const Spectrum& s);

FiniteTopology topology_from_basis(std::size_t points, std::vector<ElementSet> basis);

/// The topology on Spec(M) generated by the sets D(a).
FiniteTopology spec_topology(const FiniteMonoid& m, const Spectrum& s);

/// Opens are the ideals of L (equivalently its up-sets).
FiniteTopology ideal_opens(const JoinSemilattice& l);

/// Product topology on maps into I, generated by U_m = {f | f(m) = 1}.
FiniteTopology product_topology_on_homs(const FiniteMonoid& m, std::span<const MonoidMap> homs);

/// Whether `bijection` (point i of t1 to point bijection[i] of t2) maps
/// opens to opens in both directions. Throws `InputError` if it is not a
/// bijection.
bool is_homeomorphism(std::span<const std::size_t> bijection, const FiniteTopology& t1,
                      const FiniteTopology& t2);

/// Preimages of opens are open.
bool is_continuous(std::span<const std::size_t> map, const FiniteTopology& from, const FiniteTopology& to);

/// Continuity of a binary map (i, j) -> map(i, j) out of the product space.
bool is_continuous_binary(const std::function<std::size_t(std::size_t, std::size_t)>& map,
                          const FiniteTopology& left, const FiniteTopology& right,
                          const FiniteTopology& to);

}  // namespace monspec
