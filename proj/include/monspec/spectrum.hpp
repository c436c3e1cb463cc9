#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "monspec/element_set.hpp"
#include "monspec/monoid.hpp"
#include "monspec/presentation.hpp"
#include "monspec/semilattice.hpp"

namespace monspec {

/// An ideal p not containing the identity whose complement is closed under
/// multiplication. The empty set qualifies.
bool is_prime_ideal(const FiniteMonoid& m, const ElementSet& p);

/// How the points of a spectrum are described.
enum class PointKind {
  /// Points are subsets of the monoid's elements.
  kElements,
  /// Points are sets of generators Z of a presented monoid, standing for
  /// the prime ideal of all words that involve some generator in Z.
  kGeneratorSupport,
};

/// The prime spectrum as a canonically ordered point list together with
/// its union table. Point 0 is always the empty prime.
class Spectrum {
 public:
  /// Canonicalizes `points`. Throws `IntegrityError` if the family is not
  /// closed under union or lacks the empty set.
  static Spectrum from_points(std::vector<ElementSet> points, std::vector<std::string> labels,
                              PointKind kind = PointKind::kElements);

  Spectrum() = default;

  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<ElementSet>& points() const noexcept { return points_; }
  const ElementSet& point(std::size_t i) const { return points_.at(i); }
  PointKind kind() const noexcept { return kind_; }
  /// Names of the underlying elements (or generators).
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Index of `p`, or npos.
  std::size_t find(const ElementSet& p) const;

  /// Index of the union of points p and q.
  std::size_t union_index(std::size_t p, std::size_t q) const {
    return union_table_.at(p * size() + q);
  }

  /// The union monoid on the points (identity: the empty prime).
  FiniteMonoid as_monoid() const;
  JoinSemilattice as_semilattice() const { return JoinSemilattice::from_monoid(as_monoid()); }

  std::string render_point(std::size_t i) const;
  std::vector<std::string> rendered_points() const;
  /// One line per prime, canonical order.
  std::string to_text() const;
  /// Hasse diagram of the inclusion order.
  std::string to_dot(const std::string& graph_name = "spec") const;

  friend bool operator==(const Spectrum& a, const Spectrum& b) {
    return a.kind_ == b.kind_ && a.points_ == b.points_;
  }

 private:
  std::vector<ElementSet> points_;
  std::vector<std::size_t> union_table_;
  std::vector<std::string> labels_;
  PointKind kind_ = PointKind::kElements;
};

/// Index of the union of points p and q.
std::size_t spec_union(const Spectrum& s, std::size_t p, std::size_t q);

// Route 1: enumerate all subsets.
Spectrum primes_bruteforce(const FiniteMonoid& m, std::size_t cap = kDefaultSubsetCap);

// Route 2: homomorphisms into the two-element monoid.

/// All homomorphisms m -> sierpinski(), ordered canonically by kernel.
std::vector<MonoidMap> homs_to_I(const FiniteMonoid& m, std::size_t cap = kDefaultSubsetCap);

/// f^{-1}(0).
ElementSet theta(const MonoidMap& f);
/// The indicator homomorphism: 0 on p, 1 off p.
MonoidMap theta_inverse(const FiniteMonoid& m, const ElementSet& p);

/// Pointwise product of two maps into the two-element monoid.
MonoidMap hom_product(const MonoidMap& f, const MonoidMap& g);

Spectrum spec_via_homs(const FiniteMonoid& m, std::size_t cap = kDefaultSubsetCap);

/// Hom(m, I) as a monoid under pointwise product, with its elements.
/// Element order follows `homs_to_I`; the constant-1 map is the identity.
std::pair<FiniteMonoid, std::vector<MonoidMap>> hom_monoid(const FiniteMonoid& m,
                                                           std::size_t cap = kDefaultSubsetCap);

// Route 3: reduce to a semilattice and use alpha.

/// L minus the down-set of a.
ElementSet alpha(const JoinSemilattice& l, Elem a);
/// Greatest element of L minus p.
Elem beta(const JoinSemilattice& l, const ElementSet& p);

/// {alpha(a) : a in L}.
Spectrum spec_alpha(const JoinSemilattice& l);

/// Spec(M) as q^{-1}(alpha(a)) over a in M^sl.
Spectrum spec_monoid(const FiniteMonoid& m);

/// Spectrum of a presented monoid via its reflection, as generator supports.
Spectrum spec_presentation(const Presentation& p, std::size_t cap = kDefaultGeneratorCap);

/// Presented-monoid spectrum by checking every generator subset against
/// the relations.
Spectrum spec_presentation_bruteforce(const Presentation& p, std::size_t cap = kDefaultGeneratorCap);

/// Presented-monoid spectrum by backtracking over generator values in I.
Spectrum spec_presentation_homs(const Presentation& p, std::size_t cap = kDefaultGeneratorCap);

/// For f : M1 -> M2, the map Spec(M2) -> Spec(M1), q -> f^{-1}(q), as point
/// indices. Throws `IntegrityError` if a preimage is not a point of `source_spec`.
std::vector<std::size_t> induced_spec_map(const MonoidMap& f, const Spectrum& target_spec,
                                          const Spectrum& source_spec);

/// alpha_L . upper == f^{-1} . alpha_{L'} on every element of L', where
/// f : L -> L' and upper : L' -> L.
bool naturality_square(const MonotoneMap& f, const MonotoneMap& upper);
/// The same square with upper = right_adjoint(f).
bool naturality_square(const MonotoneMap& f);

/// ev : M -> Hom(Hom(M, I), I) is a monoid isomorphism (M idempotent).
bool ev_check(const FiniteMonoid& m, std::size_t cap = kDefaultSubsetCap);

/// alpha_{Spec L} . alpha_L : L -> Spec(Spec(L)) is a semilattice isomorphism.
bool spec_spec_check(const JoinSemilattice& l);

/// Spec^3(M) is naturally in bijection with Spec(M).
bool spec_cubed_check(const FiniteMonoid& m, std::size_t cap = kDefaultSubsetCap);

enum class PowerSubmonoidOutcome {
  kBijective,
  kNotSubmonoid,
  kHypothesisFails,
  kNotBijective,
};

const char* to_string(PowerSubmonoidOutcome o);

/// For a submonoid B of A with a^n in B for every a, checks that
/// p -> p \cap B is a bijection Spec(A) -> Spec(B).
PowerSubmonoidOutcome power_submonoid_check(const FiniteMonoid& a, const ElementSet& b,
                                            std::size_t cap = kDefaultSubsetCap);

}  // namespace monspec
