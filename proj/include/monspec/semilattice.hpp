#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "monspec/element_set.hpp"
#include "monspec/monoid.hpp"

namespace monspec {

/// A finite join semilattice: an idempotent commutative monoid read as a
/// poset via x <= y iff x * y = y. The identity is the least element and
/// the product is the join. Finite, so meets exist as well.
class JoinSemilattice {
 public:
  /// Throws `InputError` if `m` is not idempotent.
  static JoinSemilattice from_monoid(const FiniteMonoid& m);

  JoinSemilattice() : JoinSemilattice(from_monoid(trivial_monoid())) {}

  const FiniteMonoid& monoid() const noexcept { return monoid_; }
  std::size_t size() const noexcept { return monoid_.size(); }
  const std::vector<std::string>& names() const noexcept { return monoid_.names(); }

  bool leq(Elem a, Elem b) const noexcept { return (*leq_)[a * size() + b] != 0; }
  Elem join(Elem a, Elem b) const noexcept { return monoid_.mul(a, b); }
  static constexpr Elem least() noexcept { return FiniteMonoid::identity(); }
  Elem top() const noexcept { return top_; }

  /// Greatest element of {x | x <= a and x <= b}.
  Elem meet(Elem a, Elem b) const;

  /// {x | x <= a}.
  ElementSet downset(Elem a) const;
  /// {x | a <= x}; equals the principal ideal a * L.
  ElementSet upset(Elem a) const;

  /// Contains the least element and is closed under joins.
  bool is_subsemilattice(const ElementSet& s) const;

  /// Greatest element of `s` under leq, if `s` has one.
  std::optional<Elem> max_of(const ElementSet& s) const;
  std::optional<Elem> min_of(const ElementSet& s) const;

 private:
  JoinSemilattice(FiniteMonoid m, std::shared_ptr<const std::vector<char>> leq, Elem top)
      : monoid_(std::move(m)), leq_(std::move(leq)), top_(top) {}

  FiniteMonoid monoid_;
  std::shared_ptr<const std::vector<char>> leq_;
  Elem top_ = 0;
};

inline JoinSemilattice from_monoid(const FiniteMonoid& m) { return JoinSemilattice::from_monoid(m); }

/// 0 < 1 < ... < n-1.
JoinSemilattice chain(std::size_t n);

/// A set map between semilattices; `is_monotone` says whether it is one.
struct MonotoneMap {
  JoinSemilattice source;
  JoinSemilattice target;
  std::vector<Elem> images;

  Elem operator()(Elem x) const { return images.at(x); }
};

/// Raised when a requested adjoint does not exist. `witness` is the
/// target element whose candidate set lacks the required extremum.
class NoAdjoint : public InputError {
 public:
  NoAdjoint(const std::string& what, Elem witness) : InputError(what), witness_(witness) {}
  Elem witness() const noexcept { return witness_; }

 private:
  Elem witness_;
};

bool is_monotone(const MonotoneMap& f);
/// Preserves binary joins and the least element.
bool preserves_joins(const MonotoneMap& f);
/// Preserves binary meets and the top element.
bool preserves_meets(const MonotoneMap& f);

MonotoneMap identity_map(const JoinSemilattice& l);
MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f);

/// f^dagger(y) = Max{x | f(x) <= y}, so that f(x) <= y iff x <= f^dagger(y).
///
/// With `must_be_join_morphism`, rejects f unless it preserves joins and the
/// least element; the maximum then always exists. Without the flag the
/// pointwise existence criterion is applied as is and `NoAdjoint` reports
/// the first y whose candidate set has no greatest element.
MonotoneMap right_adjoint(const MonotoneMap& f, bool must_be_join_morphism = true);

/// g^*(y) = Min{x | y <= g(x)}, so that g^*(y) <= x iff y <= g(x). Dual of
/// `right_adjoint`; the flag requires g to preserve meets and the top.
MonotoneMap left_adjoint(const MonotoneMap& g, bool must_be_meet_morphism = true);

/// Exhaustively checks lower(x) <= y iff x <= upper(y), where
/// lower : X -> Y and upper : Y -> X.
bool check_adjunction(const MonotoneMap& lower, const MonotoneMap& upper);

/// Hasse diagram in DOT. `leq(i, j)` is the order on 0..labels.size()-1;
/// edges go from each element to its covers, in index order.
std::string hasse_dot(std::span<const std::string> labels,
                      const std::function<bool(std::size_t, std::size_t)>& leq,
                      const std::string& graph_name = "hasse");

std::string hasse_dot(const JoinSemilattice& l, const std::string& graph_name = "hasse");

}  // namespace monspec
