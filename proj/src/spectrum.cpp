#include "monspec/spectrum.hpp"

#include <algorithm>
#include <sstream>

#include "monspec/congruence.hpp"

namespace monspec {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);
// Bitmask enumeration works on 64-bit words; 2^30 subsets is already far
// beyond interactive.
constexpr std::size_t kHardSubsetLimit = 30;

void check_cap(const FiniteMonoid& m, std::size_t cap) {
  const std::size_t limit = std::min(cap, kHardSubsetLimit);
  if (m.size() > limit) {
    throw CapExceeded("cap exceeded: monoid has " + std::to_string(m.size()) +
                      " elements, limit " + std::to_string(limit));
  }
}

std::string compact(const ElementSet& s, const std::vector<std::string>& labels) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Elem x) {
    if (!first) out += ',';
    first = false;
    out += x < labels.size() ? labels[x] : std::to_string(x);
  });
  return out + "}";
}

}  // namespace

bool is_prime_ideal(const FiniteMonoid& m, const ElementSet& p) {
  if (p.universe() != m.size() || p.contains(FiniteMonoid::identity())) return false;
  for (Elem a = 0; a < m.size(); ++a) {
    if (p.contains(a)) {
      for (Elem x = 0; x < m.size(); ++x) {
        if (!p.contains(m.mul(a, x))) return false;
      }
    } else {
      for (Elem b = a; b < m.size(); ++b) {
        if (!p.contains(b) && p.contains(m.mul(a, b))) return false;
      }
    }
  }
  return true;
}

Spectrum Spectrum::from_points(std::vector<ElementSet> points, std::vector<std::string> labels,
                               PointKind kind) {
  Spectrum s;
  canonicalize(points);
  if (points.empty() || !points.front().empty()) {
    throw IntegrityError("spectrum lacks the empty prime");
  }
  const std::size_t n = points.size();
  s.union_table_.resize(n * n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p; q < n; ++q) {
      const auto idx = find_canonical(points, points[p] | points[q]);
      if (idx == npos) {
        throw IntegrityError("union of primes " + points[p].to_string(labels) + " and " +
                             points[q].to_string(labels) + " is not a point");
      }
      s.union_table_[p * n + q] = idx;
      s.union_table_[q * n + p] = idx;
    }
  }
  s.points_ = std::move(points);
  s.labels_ = std::move(labels);
  s.kind_ = kind;
  return s;
}

std::size_t Spectrum::find(const ElementSet& p) const { return find_canonical(points_, p); }

FiniteMonoid Spectrum::as_monoid() const {
  std::vector<Elem> table(union_table_.begin(), union_table_.end());
  std::vector<std::string> names;
  names.reserve(size());
  for (const auto& p : points_) names.push_back(compact(p, labels_));
  return FiniteMonoid::from_trusted(size(), std::move(table), std::move(names));
}

std::string Spectrum::render_point(std::size_t i) const {
  const auto& p = points_.at(i);
  if (kind_ == PointKind::kElements || p.empty()) return p.to_string(labels_);
  std::string out = "(";
  bool first = true;
  p.for_each([&](Elem g) {
    if (!first) out += ", ";
    first = false;
    out += labels_.at(g);
  });
  return out + ")";
}

std::vector<std::string> Spectrum::rendered_points() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < size(); ++i) out.push_back(render_point(i));
  return out;
}

std::string Spectrum::to_text() const {
  std::string out;
  for (std::size_t i = 0; i < size(); ++i) out += render_point(i) + "\n";
  return out;
}

std::string Spectrum::to_dot(const std::string& graph_name) const {
  const auto labels = rendered_points();
  return hasse_dot(labels, [&](std::size_t a, std::size_t b) { return points_[a].is_subset_of(points_[b]); },
                   graph_name);
}

std::size_t spec_union(const Spectrum& s, std::size_t p, std::size_t q) { return s.union_index(p, q); }

Spectrum primes_bruteforce(const FiniteMonoid& m, std::size_t cap) {
  check_cap(m, cap);
  const std::size_t n = m.size();
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> row(n, 0);
  for (Elem a = 0; a < n; ++a) {
    for (Elem x : m.row(a)) row[a] |= std::uint64_t{1} << x;
  }
  std::vector<ElementSet> points;
  // The identity (bit 0) is never in a prime.
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  for (std::uint64_t s = 0; s < count; ++s) {
    const std::uint64_t mask = s << 1;
    bool ok = true;
    for (std::uint64_t bits = mask; bits != 0 && ok; bits &= bits - 1) {
      const auto a = static_cast<Elem>(__builtin_ctzll(bits));
      if ((row[a] & ~mask) != 0) ok = false;
    }
    const std::uint64_t comp = full & ~mask;
    for (std::uint64_t ba = comp; ba != 0 && ok; ba &= ba - 1) {
      const auto a = static_cast<Elem>(__builtin_ctzll(ba));
      for (std::uint64_t bb = ba; bb != 0; bb &= bb - 1) {
        const auto b = static_cast<Elem>(__builtin_ctzll(bb));
        if ((mask >> m.mul(a, b)) & 1u) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    ElementSet p(n);
    for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1) {
      p.insert(static_cast<Elem>(__builtin_ctzll(bits)));
    }
    points.push_back(std::move(p));
  }
  return Spectrum::from_points(std::move(points), m.names());
}

namespace {

// Values are numbers in I: 1, 0, or -1 for unassigned.
bool propagate(const FiniteMonoid& m, std::vector<int>& val, Elem start, int v) {
  std::vector<std::pair<Elem, int>> queue{{start, v}};
  while (!queue.empty()) {
    auto [x, vx] = queue.back();
    queue.pop_back();
    if (val[x] == vx) continue;
    if (val[x] != -1) return false;
    val[x] = vx;
    for (Elem y = 0; y < m.size(); ++y) {
      if (val[y] == -1) continue;
      const Elem xy = m.mul(x, y);
      const int want = vx * val[y];
      if (val[xy] == -1) {
        queue.emplace_back(xy, want);
      } else if (val[xy] != want) {
        return false;
      }
    }
  }
  return true;
}

void search_homs(const FiniteMonoid& m, std::vector<int> val, Elem next, std::vector<ElementSet>& kernels) {
  while (next < m.size() && val[next] != -1) ++next;
  if (next == m.size()) {
    ElementSet k(m.size());
    for (Elem x = 0; x < m.size(); ++x) {
      if (val[x] == 0) k.insert(x);
    }
    kernels.push_back(std::move(k));
    return;
  }
  for (int v : {1, 0}) {
    auto trial = val;
    if (propagate(m, trial, next, v)) search_homs(m, std::move(trial), next + 1, kernels);
  }
}

}  // namespace

std::vector<MonoidMap> homs_to_I(const FiniteMonoid& m, std::size_t cap) {
  check_cap(m, cap);
  std::vector<int> val(m.size(), -1);
  std::vector<ElementSet> kernels;
  if (propagate(m, val, FiniteMonoid::identity(), 1)) search_homs(m, std::move(val), 1, kernels);
  canonicalize(kernels);
  std::vector<MonoidMap> out;
  out.reserve(kernels.size());
  for (const auto& k : kernels) out.push_back(theta_inverse(m, k));
  return out;
}

ElementSet theta(const MonoidMap& f) {
  ElementSet k(f.source.size());
  for (Elem x = 0; x < f.source.size(); ++x) {
    if (f.images[x] == sierpinski_elem::kZero) k.insert(x);
  }
  return k;
}

MonoidMap theta_inverse(const FiniteMonoid& m, const ElementSet& p) {
  std::vector<Elem> img(m.size());
  for (Elem x = 0; x < m.size(); ++x) img[x] = p.contains(x) ? sierpinski_elem::kZero : sierpinski_elem::kOne;
  return {m, sierpinski(), std::move(img)};
}

MonoidMap hom_product(const MonoidMap& f, const MonoidMap& g) {
  if (f.images.size() != g.images.size()) throw std::invalid_argument("hom_product: size mismatch");
  const auto target = sierpinski();
  std::vector<Elem> img(f.images.size());
  for (std::size_t x = 0; x < img.size(); ++x) img[x] = target.mul(f.images[x], g.images[x]);
  return {f.source, target, std::move(img)};
}

Spectrum spec_via_homs(const FiniteMonoid& m, std::size_t cap) {
  std::vector<ElementSet> points;
  for (const auto& f : homs_to_I(m, cap)) points.push_back(theta(f));
  return Spectrum::from_points(std::move(points), m.names());
}

std::pair<FiniteMonoid, std::vector<MonoidMap>> hom_monoid(const FiniteMonoid& m, std::size_t cap) {
  auto homs = homs_to_I(m, cap);
  std::vector<ElementSet> kernels;
  for (const auto& f : homs) kernels.push_back(theta(f));
  const std::size_t n = homs.size();
  std::vector<Elem> table(n * n);
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) {
    names[i] = "ker" + compact(kernels[i], m.names());
    for (std::size_t j = 0; j < n; ++j) {
      const auto idx = find_canonical(kernels, theta(hom_product(homs[i], homs[j])));
      if (idx == npos) throw IntegrityError("product of homomorphisms is not a homomorphism");
      table[i * n + j] = static_cast<Elem>(idx);
    }
  }
  return {FiniteMonoid::from_trusted(n, std::move(table), std::move(names)), std::move(homs)};
}

ElementSet alpha(const JoinSemilattice& l, Elem a) { return l.downset(a).complement(); }

Elem beta(const JoinSemilattice& l, const ElementSet& p) {
  auto top = l.max_of(p.complement());
  if (!top) throw IntegrityError("complement of " + p.to_string(l.names()) + " has no greatest element");
  return *top;
}

Spectrum spec_alpha(const JoinSemilattice& l) {
  std::vector<ElementSet> points;
  for (Elem a = 0; a < l.size(); ++a) points.push_back(alpha(l, a));
  return Spectrum::from_points(std::move(points), l.names());
}

Spectrum spec_monoid(const FiniteMonoid& m) {
  const auto [l, q] = sl_reflection(m);
  std::vector<ElementSet> points;
  for (Elem a = 0; a < l.size(); ++a) {
    const auto p = alpha(l, a);
    ElementSet pulled(m.size());
    for (Elem x = 0; x < m.size(); ++x) {
      if (p.contains(q.images[x])) pulled.insert(x);
    }
    points.push_back(std::move(pulled));
  }
  return Spectrum::from_points(std::move(points), m.names());
}

Spectrum spec_presentation(const Presentation& p, std::size_t cap) {
  const auto ps = sl_of_presentation(p, cap);
  std::vector<ElementSet> points;
  for (Elem a = 0; a < ps.semilattice.size(); ++a) {
    const auto prime = alpha(ps.semilattice, a);
    ElementSet support(p.rank());
    for (std::size_t g = 0; g < p.rank(); ++g) {
      if (prime.contains(ps.generator_images[g])) support.insert(static_cast<Elem>(g));
    }
    points.push_back(std::move(support));
  }
  return Spectrum::from_points(std::move(points), p.generators, PointKind::kGeneratorSupport);
}

namespace {

void check_rank(const Presentation& p, std::size_t cap) {
  const std::size_t limit = std::min(cap, kMaxGeneratorCap);
  if (p.rank() > limit) {
    throw CapExceeded("cap exceeded: " + std::to_string(p.rank()) + " generators, limit " +
                      std::to_string(limit));
  }
}

// Whether a word lies in the prime generated by the zero-set `zeros`.
bool meets(const Word& w, const ElementSet& zeros) {
  for (std::size_t g = 0; g < w.exponents.size(); ++g) {
    if (w.exponents[g] > 0 && zeros.contains(static_cast<Elem>(g))) return true;
  }
  return false;
}

}  // namespace

Spectrum spec_presentation_bruteforce(const Presentation& p, std::size_t cap) {
  check_rank(p, cap);
  const std::size_t k = p.rank();
  std::vector<ElementSet> points;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); ++mask) {
    ElementSet z(k);
    for (std::size_t g = 0; g < k; ++g) {
      if ((mask >> g) & 1u) z.insert(static_cast<Elem>(g));
    }
    const bool respects = std::all_of(p.relations.begin(), p.relations.end(), [&](const auto& rel) {
      return meets(rel.first, z) == meets(rel.second, z);
    });
    if (respects) points.push_back(std::move(z));
  }
  return Spectrum::from_points(std::move(points), p.generators, PointKind::kGeneratorSupport);
}

namespace {

// Value of a word under a partial assignment of generators to I:
// 0, 1, or -1 when still undetermined.
int word_value(const Word& w, const std::vector<int>& val) {
  bool unknown = false;
  for (std::size_t g = 0; g < w.exponents.size(); ++g) {
    if (w.exponents[g] == 0) continue;
    if (val[g] == 0) return 0;
    if (val[g] == -1) unknown = true;
  }
  return unknown ? -1 : 1;
}

void search_generator_homs(const Presentation& p, std::vector<int>& val, std::size_t g,
                           std::vector<ElementSet>& out) {
  for (const auto& [u, v] : p.relations) {
    const int a = word_value(u, val);
    const int b = word_value(v, val);
    if (a != -1 && b != -1 && a != b) return;
  }
  if (g == p.rank()) {
    ElementSet z(p.rank());
    for (std::size_t i = 0; i < p.rank(); ++i) {
      if (val[i] == 0) z.insert(static_cast<Elem>(i));
    }
    out.push_back(std::move(z));
    return;
  }
  for (int v : {1, 0}) {
    val[g] = v;
    search_generator_homs(p, val, g + 1, out);
  }
  val[g] = -1;
}

}  // namespace

Spectrum spec_presentation_homs(const Presentation& p, std::size_t cap) {
  check_rank(p, cap);
  std::vector<int> val(p.rank(), -1);
  std::vector<ElementSet> points;
  search_generator_homs(p, val, 0, points);
  return Spectrum::from_points(std::move(points), p.generators, PointKind::kGeneratorSupport);
}

std::vector<std::size_t> induced_spec_map(const MonoidMap& f, const Spectrum& target_spec,
                                          const Spectrum& source_spec) {
  std::vector<std::size_t> out;
  out.reserve(target_spec.size());
  for (const auto& q : target_spec.points()) {
    ElementSet pre(f.source.size());
    for (Elem x = 0; x < f.source.size(); ++x) {
      if (q.contains(f.images[x])) pre.insert(x);
    }
    const auto idx = source_spec.find(pre);
    if (idx == npos) throw IntegrityError("preimage " + pre.to_string(f.source.names()) + " is not a prime");
    out.push_back(idx);
  }
  return out;
}

bool naturality_square(const MonotoneMap& f, const MonotoneMap& upper) {
  const auto& l = f.source;
  const auto& lp = f.target;
  if (upper.images.size() != lp.size()) return false;
  for (Elem y = 0; y < lp.size(); ++y) {
    const auto right = alpha(lp, y);
    ElementSet pre(l.size());
    for (Elem x = 0; x < l.size(); ++x) {
      if (right.contains(f.images[x])) pre.insert(x);
    }
    if (!(alpha(l, upper.images[y]) == pre)) return false;
  }
  return true;
}

bool naturality_square(const MonotoneMap& f) { return naturality_square(f, right_adjoint(f, true)); }

bool ev_check(const FiniteMonoid& m, std::size_t cap) {
  if (!is_idempotent(m)) throw InputError("ev_check needs an idempotent monoid");
  const auto [dual, homs] = hom_monoid(m, cap);
  const auto [bidual, homs2] = hom_monoid(dual, cap);
  if (bidual.size() != m.size()) return false;
  std::vector<Elem> ev(m.size());
  std::vector<bool> hit(bidual.size(), false);
  for (Elem x = 0; x < m.size(); ++x) {
    std::vector<Elem> img(dual.size());
    for (std::size_t i = 0; i < homs.size(); ++i) img[i] = homs[i].images[x];
    auto it = std::find_if(homs2.begin(), homs2.end(), [&](const MonoidMap& h) { return h.images == img; });
    if (it == homs2.end()) return false;
    ev[x] = static_cast<Elem>(it - homs2.begin());
    if (hit[ev[x]]) return false;
    hit[ev[x]] = true;
  }
  if (ev[FiniteMonoid::identity()] != FiniteMonoid::identity()) return false;
  for (Elem a = 0; a < m.size(); ++a) {
    for (Elem b = 0; b < m.size(); ++b) {
      if (ev[m.mul(a, b)] != bidual.mul(ev[a], ev[b])) return false;
    }
  }
  return true;
}

namespace {

Spectrum spectrum_of(const FiniteMonoid& m) {
  return m.size() <= kDefaultSubsetCap ? primes_bruteforce(m) : spec_monoid(m);
}

}  // namespace

bool spec_spec_check(const JoinSemilattice& l) {
  const auto s1 = spectrum_of(l.monoid());
  const auto l1 = s1.as_semilattice();
  const auto s2 = spectrum_of(l1.monoid());
  if (s2.size() != l.size()) return false;
  std::vector<std::size_t> comp(l.size());
  std::vector<bool> hit(s2.size(), false);
  for (Elem a = 0; a < l.size(); ++a) {
    const auto p = s1.find(alpha(l, a));
    if (p == npos) return false;
    const auto pp = s2.find(alpha(l1, static_cast<Elem>(p)));
    if (pp == npos || hit[pp]) return false;
    hit[pp] = true;
    comp[a] = pp;
  }
  if (comp[JoinSemilattice::least()] != 0) return false;
  for (Elem a = 0; a < l.size(); ++a) {
    for (Elem b = 0; b < l.size(); ++b) {
      if (comp[l.join(a, b)] != s2.union_index(comp[a], comp[b])) return false;
    }
  }
  return true;
}

bool spec_cubed_check(const FiniteMonoid& m, std::size_t cap) {
  check_cap(m, cap);
  const auto s1 = spectrum_of(m);
  const auto s2 = spectrum_of(s1.as_monoid());
  const auto s3 = spectrum_of(s2.as_monoid());
  return s3.size() == s1.size() && spec_spec_check(s1.as_semilattice());
}

const char* to_string(PowerSubmonoidOutcome o) {
  switch (o) {
    case PowerSubmonoidOutcome::kBijective: return "bijective";
    case PowerSubmonoidOutcome::kNotSubmonoid: return "not a submonoid";
    case PowerSubmonoidOutcome::kHypothesisFails: return "hypothesis fails: some element has no power in B";
    case PowerSubmonoidOutcome::kNotBijective: return "restriction Spec(A) -> Spec(B) is not bijective";
  }
  return "?";
}

PowerSubmonoidOutcome power_submonoid_check(const FiniteMonoid& a, const ElementSet& b, std::size_t cap) {
  if (!is_submonoid(a, b)) return PowerSubmonoidOutcome::kNotSubmonoid;
  for (Elem x = 0; x < a.size(); ++x) {
    bool found = false;
    Elem p = x;
    for (std::size_t n = 1; n <= a.size() && !found; ++n, p = a.mul(p, x)) found = b.contains(p);
    if (!found) return PowerSubmonoidOutcome::kHypothesisFails;
  }
  const auto [sub, incl] = restrict_to(a, b);
  const auto spec_a = primes_bruteforce(a, cap);
  const auto spec_b = primes_bruteforce(sub, cap);
  const auto map = induced_spec_map(incl, spec_a, spec_b);
  if (spec_a.size() != spec_b.size()) return PowerSubmonoidOutcome::kNotBijective;
  std::vector<bool> hit(spec_b.size(), false);
  for (auto i : map) {
    if (hit[i]) return PowerSubmonoidOutcome::kNotBijective;
    hit[i] = true;
  }
  return PowerSubmonoidOutcome::kBijective;
}

}  // namespace monspec
