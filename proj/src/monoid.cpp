#include "monspec/monoid.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace monspec {

namespace {

std::string label(const std::vector<std::string>& names, Elem i) {
  if (i < names.size()) return names[i] + " (#" + std::to_string(i) + ")";
  return "#" + std::to_string(i);
}

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[i] = std::to_string(i);
  return names;
}

}  // namespace

FiniteMonoid::FiniteMonoid() : FiniteMonoid(trivial_monoid()) {}

FiniteMonoid FiniteMonoid::validate(const std::vector<std::vector<Elem>>& table, Elem identity,
                                    std::vector<std::string> names) {
  const std::size_t n = table.size();
  if (n == 0) throw InputError("monoid table is empty");
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) {
      throw InputError("table is not square: row " + std::to_string(i) + " has " +
                       std::to_string(table[i].size()) + " entries, expected " +
                       std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j] >= n) {
        throw InputError("table entry (" + std::to_string(i) + ", " + std::to_string(j) +
                         ") = " + std::to_string(table[i][j]) + " is out of range");
      }
    }
  }
  if (identity >= n) throw InputError("identity index out of range");
  if (!names.empty() && names.size() != n) {
    throw InputError("expected " + std::to_string(n) + " names, got " +
                     std::to_string(names.size()));
  }

  for (Elem i = 0; i < n; ++i) {
    if (table[identity][i] != i || table[i][identity] != i) {
      throw InputError("identity law fails: " + label(names, identity) + " * " +
                       label(names, i) + " != " + label(names, i));
    }
  }
  for (Elem i = 0; i < n; ++i) {
    for (Elem j = i + 1; j < n; ++j) {
      if (table[i][j] != table[j][i]) {
        throw InputError("not commutative: " + label(names, i) + " * " + label(names, j) +
                         " != " + label(names, j) + " * " + label(names, i));
      }
    }
  }
  for (Elem i = 0; i < n; ++i) {
    for (Elem j = 0; j < n; ++j) {
      for (Elem k = 0; k < n; ++k) {
        if (table[table[i][j]][k] != table[i][table[j][k]]) {
          throw InputError("not associative: (" + label(names, i) + " * " + label(names, j) +
                           ") * " + label(names, k) + " != " + label(names, i) + " * (" +
                           label(names, j) + " * " + label(names, k) + ")");
        }
      }
    }
  }
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = i + 1; j < names.size(); ++j) {
      if (names[i] == names[j]) {
        throw InputError("duplicate element name '" + names[i] + "' at #" + std::to_string(i) +
                         " and #" + std::to_string(j));
      }
    }
  }
  if (names.empty()) names = default_names(n);

  // Swap the identity into slot 0.
  std::vector<Elem> perm(n);
  std::iota(perm.begin(), perm.end(), Elem{0});
  std::swap(perm[0], perm[identity]);
  std::vector<Elem> flat(n * n);
  std::vector<std::string> relabeled(n);
  for (Elem i = 0; i < n; ++i) {
    relabeled[perm[i]] = names[i];
    for (Elem j = 0; j < n; ++j) flat[perm[i] * n + perm[j]] = perm[table[i][j]];
  }
  return from_trusted(n, std::move(flat), std::move(relabeled));
}

FiniteMonoid FiniteMonoid::from_trusted(std::size_t size, std::vector<Elem> table,
                                        std::vector<std::string> names) {
  if (size == 0 || table.size() != size * size) {
    throw std::invalid_argument("from_trusted: table shape mismatch");
  }
  auto d = std::make_shared<Data>();
  d->size = size;
  d->table = std::move(table);
  d->names = names.empty() ? default_names(size) : std::move(names);
  if (d->names.size() != size) throw std::invalid_argument("from_trusted: name count mismatch");
  return FiniteMonoid(std::move(d));
}

Elem FiniteMonoid::power(Elem a, std::size_t n) const noexcept {
  Elem r = identity();
  Elem base = a;
  while (n > 0) {
    if (n & 1u) r = mul(r, base);
    base = mul(base, base);
    n >>= 1;
  }
  return r;
}

std::optional<Elem> FiniteMonoid::find(const std::string& nm) const {
  const auto& ns = data_->names;
  auto it = std::find(ns.begin(), ns.end(), nm);
  if (it == ns.end()) return std::nullopt;
  return static_cast<Elem>(it - ns.begin());
}

bool FiniteMonoid::same_table(const FiniteMonoid& other) const noexcept {
  return data_ == other.data_ ||
         (data_->size == other.data_->size && data_->table == other.data_->table);
}

bool is_idempotent(const FiniteMonoid& m) {
  for (Elem i = 0; i < m.size(); ++i) {
    if (m.mul(i, i) != i) return false;
  }
  return true;
}

ElementSet units(const FiniteMonoid& m) {
  ElementSet u(m.size());
  for (Elem x = 0; x < m.size(); ++x) {
    for (Elem y = 0; y < m.size(); ++y) {
      if (m.mul(x, y) == FiniteMonoid::identity()) {
        u.insert(x);
        break;
      }
    }
  }
  return u;
}

ElementSet submonoid_closure(const FiniteMonoid& m, const ElementSet& s) {
  ElementSet out(m.size());
  std::vector<Elem> frontier;
  auto add = [&](Elem x) {
    if (!out.contains(x)) {
      out.insert(x);
      frontier.push_back(x);
    }
  };
  add(FiniteMonoid::identity());
  s.for_each(add);
  std::vector<Elem> seen;
  while (!frontier.empty()) {
    const Elem x = frontier.back();
    frontier.pop_back();
    seen.push_back(x);
    for (std::size_t i = 0; i < seen.size(); ++i) add(m.mul(x, seen[i]));
  }
  return out;
}

bool is_submonoid(const FiniteMonoid& m, const ElementSet& s) {
  if (s.universe() != m.size() || !s.contains(FiniteMonoid::identity())) return false;
  const auto mem = s.members();
  for (Elem a : mem) {
    for (Elem b : mem) {
      if (!s.contains(m.mul(a, b))) return false;
    }
  }
  return true;
}

FiniteMonoid direct_product(const FiniteMonoid& m, const FiniteMonoid& n) {
  const std::size_t a = m.size();
  const std::size_t b = n.size();
  const std::size_t size = a * b;
  std::vector<Elem> table(size * size);
  std::vector<std::string> names(size);
  for (Elem i = 0; i < a; ++i) {
    for (Elem j = 0; j < b; ++j) {
      const Elem x = static_cast<Elem>(i * b + j);
      names[x] = "(" + m.name(i) + "," + n.name(j) + ")";
      for (Elem k = 0; k < a; ++k) {
        for (Elem l = 0; l < b; ++l) {
          const Elem y = static_cast<Elem>(k * b + l);
          table[x * size + y] = static_cast<Elem>(m.mul(i, k) * b + n.mul(j, l));
        }
      }
    }
  }
  return FiniteMonoid::from_trusted(size, std::move(table), std::move(names));
}

bool is_hom(const MonoidMap& f) {
  const auto& src = f.source;
  const auto& tgt = f.target;
  if (f.images.size() != src.size()) return false;
  for (Elem y : f.images) {
    if (y >= tgt.size()) return false;
  }
  if (f.images[FiniteMonoid::identity()] != FiniteMonoid::identity()) return false;
  for (Elem x = 0; x < src.size(); ++x) {
    for (Elem y = x; y < src.size(); ++y) {
      if (f.images[src.mul(x, y)] != tgt.mul(f.images[x], f.images[y])) return false;
    }
  }
  return true;
}

MonoidMap identity_map(const FiniteMonoid& m) {
  std::vector<Elem> img(m.size());
  std::iota(img.begin(), img.end(), Elem{0});
  return {m, m, std::move(img)};
}

MonoidMap compose(const MonoidMap& g, const MonoidMap& f) {
  if (!f.target.same_table(g.source)) throw std::invalid_argument("compose: endpoint mismatch");
  std::vector<Elem> img(f.images.size());
  for (std::size_t x = 0; x < img.size(); ++x) img[x] = g.images[f.images[x]];
  return {f.source, g.target, std::move(img)};
}

std::pair<FiniteMonoid, MonoidMap> restrict_to(const FiniteMonoid& m, const ElementSet& s) {
  if (!is_submonoid(m, s)) throw InputError("subset " + s.to_string(m.names()) + " is not a submonoid");
  const auto mem = s.members();
  std::vector<Elem> local(m.size(), 0);
  for (std::size_t i = 0; i < mem.size(); ++i) local[mem[i]] = static_cast<Elem>(i);
  const std::size_t k = mem.size();
  std::vector<Elem> table(k * k);
  std::vector<std::string> names(k);
  for (std::size_t i = 0; i < k; ++i) {
    names[i] = m.name(mem[i]);
    for (std::size_t j = 0; j < k; ++j) table[i * k + j] = local[m.mul(mem[i], mem[j])];
  }
  auto sub = FiniteMonoid::from_trusted(k, std::move(table), std::move(names));
  MonoidMap incl{sub, m, mem};
  return {std::move(sub), std::move(incl)};
}

namespace {

// Isomorphism-invariant fingerprint of an element.
std::vector<std::size_t> fingerprint(const FiniteMonoid& m, Elem a) {
  std::vector<std::size_t> fp;
  std::set<Elem> powers;
  Elem p = a;
  while (powers.insert(p).second) p = m.mul(p, a);
  fp.push_back(powers.size());
  std::set<Elem> row(m.row(a).begin(), m.row(a).end());
  fp.push_back(row.size());
  std::size_t fixes = 0;
  for (Elem x = 0; x < m.size(); ++x) fixes += m.mul(a, x) == a ? 1 : 0;
  fp.push_back(fixes);
  return fp;
}

bool extend(const FiniteMonoid& m, const FiniteMonoid& n,
            const std::vector<std::vector<std::size_t>>& fm,
            const std::vector<std::vector<std::size_t>>& fn, std::vector<Elem>& img,
            std::vector<bool>& used, Elem next) {
  constexpr Elem kUnset = static_cast<Elem>(-1);
  while (next < m.size() && img[next] != kUnset) ++next;
  if (next == m.size()) {
    for (Elem x = 0; x < m.size(); ++x) {
      for (Elem y = 0; y < m.size(); ++y) {
        if (img[m.mul(x, y)] != n.mul(img[x], img[y])) return false;
      }
    }
    return true;
  }
  for (Elem c = 0; c < n.size(); ++c) {
    if (used[c] || fm[next] != fn[c]) continue;
    img[next] = c;
    used[c] = true;
    bool ok = true;
    for (Elem x = 0; x < m.size() && ok; ++x) {
      if (img[x] == kUnset) continue;
      const Elem prod = m.mul(x, next);
      if (img[prod] != kUnset && img[prod] != n.mul(img[x], c)) ok = false;
    }
    if (ok && extend(m, n, fm, fn, img, used, next + 1)) return true;
    img[next] = kUnset;
    used[c] = false;
  }
  return false;
}

}  // namespace

std::optional<std::vector<Elem>> find_isomorphism(const FiniteMonoid& m, const FiniteMonoid& n) {
  if (m.size() != n.size()) return std::nullopt;
  std::vector<std::vector<std::size_t>> fm(m.size()), fn(n.size());
  for (Elem a = 0; a < m.size(); ++a) fm[a] = fingerprint(m, a);
  for (Elem a = 0; a < n.size(); ++a) fn[a] = fingerprint(n, a);
  {
    auto sm = fm;
    auto sn = fn;
    std::sort(sm.begin(), sm.end());
    std::sort(sn.begin(), sn.end());
    if (sm != sn) return std::nullopt;
  }
  std::vector<Elem> img(m.size(), static_cast<Elem>(-1));
  std::vector<bool> used(n.size(), false);
  img[0] = 0;
  used[0] = true;
  if (!extend(m, n, fm, fn, img, used, 1)) return std::nullopt;
  return img;
}

namespace {

constexpr Elem kUnassigned = static_cast<Elem>(-1);

bool assign(const FiniteMonoid& m, const FiniteMonoid& n, std::vector<Elem>& img, Elem start, Elem value) {
  std::vector<std::pair<Elem, Elem>> queue{{start, value}};
  while (!queue.empty()) {
    auto [x, v] = queue.back();
    queue.pop_back();
    if (img[x] == v) continue;
    if (img[x] != kUnassigned) return false;
    img[x] = v;
    for (Elem y = 0; y < m.size(); ++y) {
      if (img[y] == kUnassigned) continue;
      const Elem xy = m.mul(x, y);
      const Elem want = n.mul(v, img[y]);
      if (img[xy] == kUnassigned) {
        queue.emplace_back(xy, want);
      } else if (img[xy] != want) {
        return false;
      }
    }
  }
  return true;
}

void search(const FiniteMonoid& m, const FiniteMonoid& n, const std::vector<Elem>& img, Elem next,
            std::size_t limit, std::vector<MonoidMap>& out) {
  if (out.size() >= limit) return;
  while (next < m.size() && img[next] != kUnassigned) ++next;
  if (next == m.size()) {
    out.push_back({m, n, img});
    return;
  }
  for (Elem v = 0; v < n.size() && out.size() < limit; ++v) {
    auto trial = img;
    if (assign(m, n, trial, next, v)) search(m, n, trial, next + 1, limit, out);
  }
}

}  // namespace

std::vector<MonoidMap> homomorphisms(const FiniteMonoid& m, const FiniteMonoid& n, std::size_t limit) {
  std::vector<MonoidMap> out;
  std::vector<Elem> img(m.size(), kUnassigned);
  if (assign(m, n, img, FiniteMonoid::identity(), FiniteMonoid::identity())) search(m, n, img, 1, limit, out);
  return out;
}

FiniteMonoid trivial_monoid() {
  static const FiniteMonoid kTrivial = FiniteMonoid::from_trusted(1, {0}, {"1"});
  return kTrivial;
}

FiniteMonoid sierpinski() {
  return FiniteMonoid::from_trusted(2, {0, 1, 1, 1}, {"1", "0"});
}

FiniteMonoid cyclic_monoid(std::size_t index, std::size_t period) {
  if (period == 0) throw InputError("cyclic monoid needs period >= 1");
  const std::size_t n = index + period;
  auto reduce = [&](std::size_t k) { return k < n ? k : index + (k - index) % period; };
  std::vector<Elem> table(n * n);
  std::vector<std::string> names(n);
  for (std::size_t a = 0; a < n; ++a) {
    names[a] = a == 0 ? "1" : (a == 1 ? "t" : "t^" + std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<Elem>(reduce(a + b));
  }
  return FiniteMonoid::from_trusted(n, std::move(table), std::move(names));
}

FiniteMonoid chain_monoid(std::size_t n) {
  if (n == 0) throw InputError("chain needs at least one element");
  std::vector<Elem> table(n * n);
  std::vector<std::string> names(n);
  for (std::size_t a = 0; a < n; ++a) {
    names[a] = "c" + std::to_string(a);
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<Elem>(std::max(a, b));
  }
  return FiniteMonoid::from_trusted(n, std::move(table), std::move(names));
}

}  // namespace monspec
