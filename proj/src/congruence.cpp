#include "monspec/congruence.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace monspec {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), Elem{0}); }

  Elem find(Elem x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Root is always the smaller index, so roots are least class members.
  bool unite(Elem a, Elem b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

  std::vector<Elem> representatives() {
    std::vector<Elem> rep(parent_.size());
    for (Elem x = 0; x < rep.size(); ++x) rep[x] = find(x);
    return rep;
  }

 private:
  std::vector<Elem> parent_;
};

}  // namespace

Congruence::Congruence(std::vector<Elem> representative) : rep_(std::move(representative)) {
  for (Elem x = 0; x < rep_.size(); ++x) {
    const Elem r = rep_[x];
    if (r > x || rep_[r] != r) throw std::invalid_argument("representatives are not canonical");
  }
}

Congruence Congruence::discrete(std::size_t n) {
  std::vector<Elem> rep(n);
  std::iota(rep.begin(), rep.end(), Elem{0});
  return Congruence(std::move(rep));
}

std::size_t Congruence::class_count() const noexcept {
  std::size_t k = 0;
  for (Elem x = 0; x < rep_.size(); ++x) k += rep_[x] == x ? 1 : 0;
  return k;
}

std::vector<std::vector<Elem>> Congruence::classes() const {
  std::vector<std::vector<Elem>> out;
  std::vector<std::size_t> slot(rep_.size());
  for (Elem x = 0; x < rep_.size(); ++x) {
    if (rep_[x] == x) {
      slot[x] = out.size();
      out.emplace_back();
    }
    out[slot[rep_[x]]].push_back(x);
  }
  return out;
}

bool is_congruence(const FiniteMonoid& m, const Congruence& c) {
  if (c.universe() != m.size()) return false;
  for (Elem a = 0; a < m.size(); ++a) {
    const Elem r = c.representative(a);
    for (Elem x = 0; x < m.size(); ++x) {
      if (!c.same(m.mul(a, x), m.mul(r, x))) return false;
    }
  }
  return true;
}

Congruence congruence_closure(const FiniteMonoid& m, const std::vector<std::pair<Elem, Elem>>& pairs) {
  const std::size_t n = m.size();
  UnionFind uf(n);
  std::deque<std::pair<Elem, Elem>> work;
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) throw InputError("congruence pair index out of range");
    work.emplace_back(a, b);
  }
  while (!work.empty()) {
    auto [a, b] = work.front();
    work.pop_front();
    if (!uf.unite(a, b)) continue;
    for (Elem c = 0; c < n; ++c) work.emplace_back(m.mul(a, c), m.mul(b, c));
  }
  return Congruence(uf.representatives());
}

std::pair<FiniteMonoid, MonoidMap> quotient(const FiniteMonoid& m, const Congruence& c) {
  if (c.universe() != m.size()) throw std::invalid_argument("congruence belongs to another monoid");
  std::vector<Elem> index(m.size(), 0);
  std::vector<Elem> reps;
  for (Elem x = 0; x < m.size(); ++x) {
    if (c.representative(x) == x) {
      index[x] = static_cast<Elem>(reps.size());
      reps.push_back(x);
    }
  }
  const std::size_t k = reps.size();
  std::vector<Elem> table(k * k);
  std::vector<std::string> names(k);
  for (std::size_t i = 0; i < k; ++i) {
    names[i] = m.name(reps[i]);
    for (std::size_t j = 0; j < k; ++j) {
      table[i * k + j] = index[c.representative(m.mul(reps[i], reps[j]))];
    }
  }
  auto q = FiniteMonoid::from_trusted(k, std::move(table), std::move(names));
  std::vector<Elem> proj(m.size());
  for (Elem x = 0; x < m.size(); ++x) proj[x] = index[c.representative(x)];
  MonoidMap projection{m, q, std::move(proj)};
  return {std::move(q), std::move(projection)};
}

std::pair<JoinSemilattice, MonoidMap> sl_reflection(const FiniteMonoid& m) {
  std::vector<std::pair<Elem, Elem>> pairs;
  pairs.reserve(m.size());
  for (Elem x = 0; x < m.size(); ++x) pairs.emplace_back(x, m.mul(x, x));
  auto [q, proj] = quotient(m, congruence_closure(m, pairs));
  return {JoinSemilattice::from_monoid(q), std::move(proj)};
}

namespace {

// Powers a^1 .. a^n; in a monoid of size n these are all positive powers.
std::vector<Elem> positive_powers(const FiniteMonoid& m, Elem a) {
  std::vector<Elem> out;
  Elem p = a;
  for (std::size_t i = 0; i < m.size(); ++i) {
    out.push_back(p);
    p = m.mul(p, a);
  }
  return out;
}

// Whether some positive power of a lies in the principal ideal bM.
bool power_divisible(const FiniteMonoid& m, const std::vector<Elem>& powers_of_a, Elem b) {
  ElementSet ideal(m.size());
  for (Elem u : m.row(b)) ideal.insert(u);
  return std::any_of(powers_of_a.begin(), powers_of_a.end(), [&](Elem p) { return ideal.contains(p); });
}

}  // namespace

bool grillet_related(const FiniteMonoid& m, Elem a, Elem b) {
  return power_divisible(m, positive_powers(m, a), b) && power_divisible(m, positive_powers(m, b), a);
}

Congruence grillet_relation(const FiniteMonoid& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Elem>> powers(n);
  for (Elem a = 0; a < n; ++a) powers[a] = positive_powers(m, a);
  UnionFind uf(n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = a + 1; b < n; ++b) {
      if (power_divisible(m, powers[a], b) && power_divisible(m, powers[b], a)) uf.unite(a, b);
    }
  }
  return Congruence(uf.representatives());
}

}  // namespace monspec
