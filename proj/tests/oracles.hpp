#pragma once

// Slow, direct implementations of the definitions. Used only to check the
// library; they share no code with it beyond reading tables out.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <iterator>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "monspec/monoid.hpp"
#include "monspec/presentation.hpp"
#include "monspec/semilattice.hpp"

namespace oracle {

using Table = std::vector<std::vector<int>>;
using Set = std::set<int>;
using Family = std::set<Set>;

inline Table table_of(const monspec::FiniteMonoid& m) {
  Table t(m.size(), std::vector<int>(m.size()));
  for (std::size_t a = 0; a < m.size(); ++a) {
    for (std::size_t b = 0; b < m.size(); ++b) {
      t[a][b] = static_cast<int>(m.mul(static_cast<monspec::Elem>(a), static_cast<monspec::Elem>(b)));
    }
  }
  return t;
}

inline Set to_set(const monspec::ElementSet& s) {
  Set out;
  for (auto x : s.members()) out.insert(static_cast<int>(x));
  return out;
}

inline Family to_family(const std::vector<monspec::ElementSet>& sets) {
  Family out;
  for (const auto& s : sets) out.insert(to_set(s));
  return out;
}

inline bool is_monoid(const Table& t, int id) {
  const int n = static_cast<int>(t.size());
  for (int a = 0; a < n; ++a) {
    if (t[id][a] != a || t[a][id] != a) return false;
    for (int b = 0; b < n; ++b) {
      if (t[a][b] != t[b][a]) return false;
      for (int c = 0; c < n; ++c) {
        if (t[t[a][b]][c] != t[a][t[b][c]]) return false;
      }
    }
  }
  return true;
}

// Every subset, tested against the definition: proper, absorbing, and
// with a multiplicatively closed complement. Identity is element 0.
inline Family primes(const Table& t) {
  const int n = static_cast<int>(t.size());
  Family out;
  for (long mask = 0; mask < (1L << n); ++mask) {
    auto in = [&](int x) { return ((mask >> x) & 1) != 0; };
    if (in(0)) continue;
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      for (int x = 0; x < n && ok; ++x) {
        if (in(a) && !in(t[a][x])) ok = false;
        if (!in(a) && !in(x) && in(t[a][x])) ok = false;
      }
    }
    if (!ok) continue;
    Set p;
    for (int x = 0; x < n; ++x) {
      if (in(x)) p.insert(x);
    }
    out.insert(p);
  }
  return out;
}

// All set maps a -> b checked for the homomorphism laws.
inline std::vector<std::vector<int>> homs(const Table& a, const Table& b) {
  const int n = static_cast<int>(a.size());
  const int m = static_cast<int>(b.size());
  std::vector<std::vector<int>> out;
  std::vector<int> f(n, 0);
  while (true) {
    bool ok = f[0] == 0;
    for (int x = 0; x < n && ok; ++x) {
      for (int y = 0; y < n && ok; ++y) ok = f[a[x][y]] == b[f[x]][f[y]];
    }
    if (ok) out.push_back(f);
    int i = 0;
    while (i < n && ++f[i] == m) f[i++] = 0;
    if (i == n) break;
  }
  return out;
}

// Class labels (least member of each class) of the least congruence
// containing `pairs`, by saturating a relation matrix.
inline std::vector<int> congruence_closure(const Table& t, const std::vector<std::pair<int, int>>& pairs) {
  const int n = static_cast<int>(t.size());
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (int x = 0; x < n; ++x) r[x][x] = true;
  for (auto [a, b] : pairs) r[a][b] = r[b][a] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    auto set = [&](int a, int b) {
      if (!r[a][b]) r[a][b] = changed = true;
    };
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (!r[a][b]) continue;
        set(b, a);
        for (int c = 0; c < n; ++c) {
          set(t[a][c], t[b][c]);
          if (r[b][c]) set(a, c);
        }
      }
    }
  }
  std::vector<int> label(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y <= x; ++y) {
      if (r[x][y]) {
        label[x] = y;
        break;
      }
    }
  }
  return label;
}

// a ~ b iff some power of a is a multiple of b and vice versa; classes of
// the transitive closure.
inline std::vector<int> grillet_classes(const Table& t) {
  const int n = static_cast<int>(t.size());
  auto power_divides = [&](int a, int b) {
    int p = a;
    for (int i = 1; i <= n + 1; ++i) {
      for (int u = 0; u < n; ++u) {
        if (t[u][b] == p) return true;
      }
      p = t[p][a];
    }
    return false;
  };
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) r[a][b] = a == b || (power_divides(a, b) && power_divides(b, a));
  }
  for (int k = 0; k < n; ++k) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (r[a][k] && r[k][b]) r[a][b] = true;
      }
    }
  }
  std::vector<int> label(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y <= x; ++y) {
      if (r[x][y]) {
        label[x] = y;
        break;
      }
    }
  }
  return label;
}

using Order = std::function<bool(int, int)>;

inline Order order_of(const monspec::JoinSemilattice& l) {
  return [l](int a, int b) { return l.leq(static_cast<monspec::Elem>(a), static_cast<monspec::Elem>(b)); };
}

// Greatest x with f(x) <= y for every y, or -1 where none exists.
inline std::vector<int> right_adjoint(int n_src, const Order& src, int n_tgt, const Order& tgt,
                                      const std::vector<int>& f) {
  std::vector<int> out(n_tgt, -1);
  for (int y = 0; y < n_tgt; ++y) {
    for (int x = 0; x < n_src; ++x) {
      if (!tgt(f[x], y)) continue;
      bool greatest = true;
      for (int z = 0; z < n_src; ++z) {
        if (tgt(f[z], y) && !src(z, x)) greatest = false;
      }
      if (greatest) out[y] = x;
    }
  }
  return out;
}

// Closure under pairwise union and intersection, plus empty and full.
inline Family topology_closure(int n, const Family& family) {
  Family out = family;
  Set full;
  for (int i = 0; i < n; ++i) full.insert(i);
  out.insert(Set{});
  out.insert(full);
  bool changed = true;
  while (changed) {
    changed = false;
    const std::vector<Set> cur(out.begin(), out.end());
    for (const auto& a : cur) {
      for (const auto& b : cur) {
        Set u;
        Set i;
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::inserter(u, u.end()));
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(i, i.end()));
        changed |= out.insert(u).second;
        changed |= out.insert(i).second;
      }
    }
  }
  return out;
}

inline Family upsets(int n, const Order& leq) {
  Family out;
  for (long mask = 0; mask < (1L << n); ++mask) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      for (int b = 0; b < n && ok; ++b) {
        if (((mask >> a) & 1) && leq(a, b) && !((mask >> b) & 1)) ok = false;
      }
    }
    if (!ok) continue;
    Set s;
    for (int a = 0; a < n; ++a) {
      if ((mask >> a) & 1) s.insert(a);
    }
    out.insert(s);
  }
  return out;
}

// Generator sets Z such that sending Z to 0 and the other generators to 1
// respects every relation. A word is 0 iff it involves a generator in Z.
inline Family presentation_primes(const monspec::Presentation& p) {
  const std::size_t k = p.rank();
  Family out;
  for (long mask = 0; mask < (1L << k); ++mask) {
    auto value = [&](const monspec::Word& w) {
      for (std::size_t g = 0; g < k; ++g) {
        if (w.exponents[g] > 0 && ((mask >> g) & 1)) return 0;
      }
      return 1;
    };
    bool ok = true;
    for (const auto& [u, v] : p.relations) ok = ok && value(u) == value(v);
    if (!ok) continue;
    Set z;
    for (std::size_t g = 0; g < k; ++g) {
      if ((mask >> g) & 1) z.insert(static_cast<int>(g));
    }
    out.insert(z);
  }
  return out;
}

// Isomorphism test by trying every permutation fixing the identity.
inline bool isomorphic(const Table& a, const Table& b) {
  if (a.size() != b.size()) return false;
  const int n = static_cast<int>(a.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      for (int y = 0; y < n && ok; ++y) ok = perm[a[x][y]] == b[perm[x]][perm[y]];
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return false;
}

// Number of tuples (one point per stage) compatible with every listed map.
// maps[(i, j)] sends stage j to stage i. Stages are filled in index order and
// a map is checked as soon as both of its stages are filled.
inline std::size_t coherent_count(const std::vector<std::size_t>& sizes,
                                  const std::vector<std::pair<std::pair<std::size_t, std::size_t>,
                                                              std::vector<std::size_t>>>& maps) {
  const std::size_t k = sizes.size();
  std::vector<std::vector<std::size_t>> due(k);
  for (std::size_t m = 0; m < maps.size(); ++m) {
    due[std::max(maps[m].first.first, maps[m].first.second)].push_back(m);
  }
  std::vector<std::size_t> c(k, 0);
  std::function<std::size_t(std::size_t)> fill = [&](std::size_t s) -> std::size_t {
    if (s == k) return 1;
    std::size_t count = 0;
    for (c[s] = 0; c[s] < sizes[s]; ++c[s]) {
      bool ok = true;
      for (auto m : due[s]) {
        const auto& [ij, f] = maps[m];
        ok = ok && f[c[ij.second]] == c[ij.first];
      }
      if (ok) count += fill(s + 1);
    }
    return count;
  };
  return fill(0);
}

}  // namespace oracle
