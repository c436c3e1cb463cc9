#include "monspec/topology.hpp"

#include <algorithm>
#include <unordered_set>

namespace monspec {

namespace {

std::vector<ElementSet> compute_neighborhoods(std::size_t n, const std::vector<ElementSet>& opens) {
  std::vector<ElementSet> nb(n, ElementSet::full(n));
  for (const auto& o : opens) {
    o.for_each([&](Elem x) { nb[x] &= o; });
  }
  return nb;
}

}  // namespace

FiniteTopology FiniteTopology::from_opens(std::size_t points, std::vector<ElementSet> opens) {
  for (const auto& o : opens) {
    if (o.universe() != points) throw InputError("open set over the wrong point count");
  }
  canonicalize(opens);
  if (find_canonical(opens, ElementSet(points)) == static_cast<std::size_t>(-1) ||
      find_canonical(opens, ElementSet::full(points)) == static_cast<std::size_t>(-1)) {
    throw InputError("topology must contain the empty set and the whole space");
  }
  for (std::size_t i = 0; i < opens.size(); ++i) {
    for (std::size_t j = i + 1; j < opens.size(); ++j) {
      if (find_canonical(opens, opens[i] | opens[j]) == static_cast<std::size_t>(-1) ||
          find_canonical(opens, opens[i] & opens[j]) == static_cast<std::size_t>(-1)) {
        throw InputError("open family not closed under union and intersection");
      }
    }
  }
  FiniteTopology t;
  t.points_ = points;
  t.neighborhoods_ = compute_neighborhoods(points, opens);
  t.opens_ = std::move(opens);
  return t;
}

bool FiniteTopology::is_open(const ElementSet& s) const {
  if (s.universe() != points_) return false;
  bool ok = true;
  s.for_each([&](Elem x) { ok = ok && neighborhoods_[x].is_subset_of(s); });
  return ok;
}

std::string FiniteTopology::to_text(std::span<const std::string> labels) const {
  std::string out;
  for (const auto& o : opens_) out += o.to_string(labels) + "\n";
  return out;
}

FiniteTopology generate_topology(std::size_t points, std::vector<ElementSet> family) {
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<ElementSet> all;
  std::vector<ElementSet> work;
  auto add = [&](ElementSet s) {
    if (s.universe() != points) throw InputError("set over the wrong point count");
    if (seen.insert(s).second) {
      all.push_back(s);
      work.push_back(std::move(s));
    }
  };
  add(ElementSet(points));
  add(ElementSet::full(points));
  for (auto& s : family) add(std::move(s));
  while (!work.empty()) {
    const auto s = std::move(work.back());
    work.pop_back();
    const std::size_t n = all.size();
    for (std::size_t i = 0; i < n; ++i) {
      add(s | all[i]);
      add(s & all[i]);
    }
  }
  return FiniteTopology::from_opens(points, std::move(all));
}

std::vector<ElementSet> basis_D(const FiniteMonoid& m, const Spectrum& s) {
  std::vector<ElementSet> basis;
  for (Elem a = 0; a < m.size(); ++a) {
    ElementSet d(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (!s.point(i).contains(a)) d.insert(static_cast<Elem>(i));
    }
    basis.push_back(std::move(d));
  }
  canonicalize(basis);
  return basis;
}

FiniteTopology topology_from_basis(std::size_t points, std::vector<ElementSet> basis) {
  return generate_topology(points, std::move(basis));
}

FiniteTopology spec_topology(const FiniteMonoid& m, const Spectrum& s) {
  return topology_from_basis(s.size(), basis_D(m, s));
}

FiniteTopology ideal_opens(const JoinSemilattice& l) {
  // Every ideal is a union of principal ideals aL = up-set of a.
  std::unordered_set<ElementSet, ElementSetHash> seen{ElementSet(l.size())};
  std::vector<ElementSet> opens{ElementSet(l.size())};
  for (Elem a = 0; a < l.size(); ++a) {
    const auto up = l.upset(a);
    const std::size_t n = opens.size();
    for (std::size_t i = 0; i < n; ++i) {
      auto u = opens[i] | up;
      if (seen.insert(u).second) opens.push_back(std::move(u));
    }
  }
  return FiniteTopology::from_opens(l.size(), std::move(opens));
}

FiniteTopology product_topology_on_homs(const FiniteMonoid& m, std::span<const MonoidMap> homs) {
  std::vector<ElementSet> subbasis;
  for (Elem x = 0; x < m.size(); ++x) {
    ElementSet u(homs.size());
    for (std::size_t i = 0; i < homs.size(); ++i) {
      if (homs[i].images.at(x) == sierpinski_elem::kOne) u.insert(static_cast<Elem>(i));
    }
    subbasis.push_back(std::move(u));
  }
  return generate_topology(homs.size(), std::move(subbasis));
}

namespace {

ElementSet image(std::span<const std::size_t> map, const ElementSet& s, std::size_t universe) {
  ElementSet out(universe);
  s.for_each([&](Elem x) { out.insert(static_cast<Elem>(map[x])); });
  return out;
}

ElementSet preimage(std::span<const std::size_t> map, const ElementSet& s) {
  ElementSet out(map.size());
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (s.contains(static_cast<Elem>(map[i]))) out.insert(static_cast<Elem>(i));
  }
  return out;
}

}  // namespace

bool is_homeomorphism(std::span<const std::size_t> bijection, const FiniteTopology& t1,
                      const FiniteTopology& t2) {
  if (bijection.size() != t1.point_count() || t1.point_count() != t2.point_count()) {
    throw InputError("not a bijection: point counts differ");
  }
  std::vector<bool> hit(t2.point_count(), false);
  for (auto y : bijection) {
    if (y >= hit.size() || hit[y]) throw InputError("not a bijection");
    hit[y] = true;
  }
  if (t1.opens().size() != t2.opens().size()) return false;
  for (const auto& o : t1.opens()) {
    if (!t2.is_open(image(bijection, o, t2.point_count()))) return false;
  }
  return is_continuous(bijection, t1, t2);
}

bool is_continuous(std::span<const std::size_t> map, const FiniteTopology& from, const FiniteTopology& to) {
  if (map.size() != from.point_count()) throw InputError("map has the wrong number of points");
  for (const auto& o : to.opens()) {
    if (!from.is_open(preimage(map, o))) return false;
  }
  return true;
}

bool is_continuous_binary(const std::function<std::size_t(std::size_t, std::size_t)>& map,
                          const FiniteTopology& left, const FiniteTopology& right,
                          const FiniteTopology& to) {
  // In the product, the smallest neighborhood of (i, j) is N(i) x N(j); a
  // map is continuous iff it sends each such box into N(map(i, j)).
  for (std::size_t i = 0; i < left.point_count(); ++i) {
    for (std::size_t j = 0; j < right.point_count(); ++j) {
      const auto& target = to.neighborhood(static_cast<Elem>(map(i, j)));
      bool ok = true;
      left.neighborhood(static_cast<Elem>(i)).for_each([&](Elem a) {
        right.neighborhood(static_cast<Elem>(j)).for_each([&](Elem b) {
          ok = ok && target.contains(static_cast<Elem>(map(a, b)));
        });
      });
      if (!ok) return false;
    }
  }
  return true;
}

}  // namespace monspec
