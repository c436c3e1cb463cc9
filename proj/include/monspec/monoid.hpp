#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "monspec/element_set.hpp"
#include "monspec/error.hpp"

namespace monspec {

/// Element limit for operations that enumerate subsets of a monoid.
inline constexpr std::size_t kDefaultSubsetCap = 16;

/// A finite commutative monoid given by its multiplication table.
///
/// Immutable and cheap to copy (the table is shared). The identity is
/// always element 0; `validate` relabels the input so that this holds.
class FiniteMonoid {
 public:
  /// Checks the monoid laws and returns the normalized monoid. Throws
  /// `InputError` naming the first violated law and its witnesses.
  static FiniteMonoid validate(const std::vector<std::vector<Elem>>& table, Elem identity,
                               std::vector<std::string> names = {});

  /// Builds a monoid from a flat row-major table whose identity is
  /// element 0, without checking the laws. Callers guarantee them.
  static FiniteMonoid from_trusted(std::size_t size, std::vector<Elem> table,
                                   std::vector<std::string> names = {});

  FiniteMonoid();

  std::size_t size() const noexcept { return data_->size; }
  static constexpr Elem identity() noexcept { return 0; }

  Elem mul(Elem a, Elem b) const noexcept { return data_->table[a * data_->size + b]; }
  std::span<const Elem> row(Elem a) const noexcept {
    return {data_->table.data() + a * data_->size, data_->size};
  }
  std::span<const Elem> table() const noexcept { return data_->table; }

  /// a^n for n >= 0.
  Elem power(Elem a, std::size_t n) const noexcept;

  const std::vector<std::string>& names() const noexcept { return data_->names; }
  const std::string& name(Elem a) const { return data_->names.at(a); }
  /// Element with the given name, if any.
  std::optional<Elem> find(const std::string& name) const;

  /// Same size and same table (names are ignored).
  bool same_table(const FiniteMonoid& other) const noexcept;

 private:
  struct Data {
    std::size_t size = 0;
    std::vector<Elem> table;
    std::vector<std::string> names;
  };
  explicit FiniteMonoid(std::shared_ptr<const Data> d) : data_(std::move(d)) {}

  std::shared_ptr<const Data> data_;
};

/// A set map between finite monoids. Not necessarily a homomorphism;
/// see `is_hom`.
struct MonoidMap {
  FiniteMonoid source;
  FiniteMonoid target;
  std::vector<Elem> images;

  Elem operator()(Elem x) const { return images.at(x); }
};

inline FiniteMonoid validate_monoid(const std::vector<std::vector<Elem>>& table, Elem identity,
                                    std::vector<std::string> names = {}) {
  return FiniteMonoid::validate(table, identity, std::move(names));
}

bool is_idempotent(const FiniteMonoid& m);

/// Invertible elements.
ElementSet units(const FiniteMonoid& m);

/// Smallest submonoid containing `s`.
ElementSet submonoid_closure(const FiniteMonoid& m, const ElementSet& s);

bool is_submonoid(const FiniteMonoid& m, const ElementSet& s);

/// Componentwise product; pair (i, j) is element i * n.size() + j.
FiniteMonoid direct_product(const FiniteMonoid& m, const FiniteMonoid& n);

/// Whether the map preserves the identity and products.
bool is_hom(const MonoidMap& f);

MonoidMap identity_map(const FiniteMonoid& m);

/// g after f. Throws if the endpoints do not match.
MonoidMap compose(const MonoidMap& g, const MonoidMap& f);

/// The submonoid `s` as a monoid in its own right, with the inclusion map.
/// Elements keep their relative order. Throws unless `s` is a submonoid.
std::pair<FiniteMonoid, MonoidMap> restrict_to(const FiniteMonoid& m, const ElementSet& s);

/// Homomorphisms m -> n in lexicographic order of their image arrays,
/// stopping after `limit`.
std::vector<MonoidMap> homomorphisms(const FiniteMonoid& m, const FiniteMonoid& n,
                                     std::size_t limit = static_cast<std::size_t>(-1));

/// An isomorphism m -> n as an image array, if one exists.
std::optional<std::vector<Elem>> find_isomorphism(const FiniteMonoid& m, const FiniteMonoid& n);

// Standard small monoids.

FiniteMonoid trivial_monoid();

/// The two-element monoid {1, 0} under multiplication. Element 0 is the
/// number 1 (the identity), element 1 is the number 0.
FiniteMonoid sierpinski();
namespace sierpinski_elem {
inline constexpr Elem kOne = 0;
inline constexpr Elem kZero = 1;
}  // namespace sierpinski_elem

/// <t | t^(index + period) = t^index>, elements 1, t, ..., t^(index+period-1).
/// index = 0 gives the cyclic group of order `period`.
FiniteMonoid cyclic_monoid(std::size_t index, std::size_t period);

/// The chain 0 < 1 < ... < n-1 under max.
FiniteMonoid chain_monoid(std::size_t n);

}  // namespace monspec
