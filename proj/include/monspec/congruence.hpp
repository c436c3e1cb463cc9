#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "monspec/monoid.hpp"
#include "monspec/semilattice.hpp"

namespace monspec {

/// A partition of a monoid's elements. Each element maps to the least
/// index of its class.
class Congruence {
 public:
  Congruence() = default;
  /// `representative[x]` must be the least member of x's class.
  explicit Congruence(std::vector<Elem> representative);

  static Congruence discrete(std::size_t n);

  std::size_t universe() const noexcept { return rep_.size(); }
  Elem representative(Elem x) const { return rep_.at(x); }
  bool same(Elem a, Elem b) const { return rep_.at(a) == rep_.at(b); }
  std::size_t class_count() const noexcept;
  /// Classes ordered by representative; members ascending.
  std::vector<std::vector<Elem>> classes() const;

  friend bool operator==(const Congruence&, const Congruence&) = default;

 private:
  std::vector<Elem> rep_;
};

/// Partition check plus compatibility with multiplication.
bool is_congruence(const FiniteMonoid& m, const Congruence& c);

/// Least congruence containing `pairs`.
Congruence congruence_closure(const FiniteMonoid& m, const std::vector<std::pair<Elem, Elem>>& pairs);

/// The quotient monoid on class representatives (in ascending order) and
/// the projection onto it.
std::pair<FiniteMonoid, MonoidMap> quotient(const FiniteMonoid& m, const Congruence& c);

/// M^sl = M modulo the least congruence identifying x with x*x, with the
/// canonical projection q : M -> M^sl.
std::pair<JoinSemilattice, MonoidMap> sl_reflection(const FiniteMonoid& m);

/// a ~ b iff a^i = u*b and b^j = v*a for some i, j >= 1 and u, v in M.
bool grillet_related(const FiniteMonoid& m, Elem a, Elem b);

/// The partition induced by `grillet_related` (classes are closed under
/// the relation transitively).
Congruence grillet_relation(const FiniteMonoid& m);

}  // namespace monspec
