#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "monspec/element_set.hpp"
#include "monspec/monoid.hpp"
#include "monspec/semilattice.hpp"
#include "monspec/spectrum.hpp"

namespace monspec {

/// A diagram of finite point sets indexed by a finite poset, with maps
/// running downward: for stages i <= j a map from stage j to stage i.
struct InverseSystem {
  std::vector<std::size_t> stage_sizes;
  /// shape[i][j] iff i <= j.
  std::vector<std::vector<bool>> shape;
  /// transitions[{i, j}] for i <= j: image in stage i of each point of stage j.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> transitions;

  std::size_t stage_count() const noexcept { return stage_sizes.size(); }
};

/// Throws `InputError` if the shape is not a partial order, a transition
/// is missing or malformed, t(i,i) is not the identity, or
/// t(i,j) . t(j,k) != t(i,k).
void validate_system(const InverseSystem& system);

/// One point per stage, compatible with every transition.
struct CoherentFamily {
  std::vector<std::size_t> choice;
  friend bool operator==(const CoherentFamily&, const CoherentFamily&) = default;
  friend auto operator<=>(const CoherentFamily&, const CoherentFamily&) = default;
};

/// All coherent families, lexicographically ordered. Validates first.
std::vector<CoherentFamily> inverse_limit(const InverseSystem& system);

struct SubmonoidChainColimit {
  FiniteMonoid colimit;
  /// Each stage as a monoid with its inclusion into `colimit`.
  std::vector<std::pair<FiniteMonoid, MonoidMap>> stages;
};

/// Union of an increasing chain of submonoids of `ambient`.
SubmonoidChainColimit colimit_of_submonoid_chain(const FiniteMonoid& ambient,
                                                 const std::vector<ElementSet>& chain);

struct ZgReport {
  std::size_t spec_points = 0;
  std::size_t limit_families = 0;
  bool bijective = false;
};

/// Compares Spec(colimit) with the inverse limit of the stage spectra under
/// p -> (p \cap M_j)_j.
ZgReport zg_report(const FiniteMonoid& ambient, const std::vector<ElementSet>& chain);
bool zg_check(const FiniteMonoid& ambient, const std::vector<ElementSet>& chain);

/// Subsemilattice generated by `gens`: the least element plus all joins of
/// nonempty subsets, so at most 2^|gens| elements.
ElementSet generated_subsemilattice(const JoinSemilattice& l, const ElementSet& gens);

/// Every subsemilattice of L (subsets containing the least element and
/// closed under joins), canonically ordered.
std::vector<ElementSet> all_subsemilattices(const JoinSemilattice& l, std::size_t cap = kDefaultSubsetCap);

struct ProfiniteSpectrum {
  std::vector<ElementSet> stages;
  InverseSystem system;
  std::vector<CoherentFamily> families;
  /// Prime of L assigned to each family: the union over stages of
  /// alpha_{stage}(choice).
  std::vector<ElementSet> primes;
  /// Whether `primes` enumerates Spec(L) without repetition.
  bool bijective = false;
};

/// Builds the inverse system of the given subsemilattices of L, with the
/// right adjoints of the inclusions as transitions, and matches its
/// coherent families against Spec(L). The stages must cover L.
ProfiniteSpectrum profinite_spec(const JoinSemilattice& l, const std::vector<ElementSet>& subsemilattices);

}  // namespace monspec
