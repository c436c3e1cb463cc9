#include "monspec/semilattice.hpp"

#include <numeric>
#include <sstream>

namespace monspec {

JoinSemilattice JoinSemilattice::from_monoid(const FiniteMonoid& m) {
  if (!is_idempotent(m)) {
    for (Elem x = 0; x < m.size(); ++x) {
      if (m.mul(x, x) != x) {
        throw InputError("not a semilattice: " + m.name(x) + " * " + m.name(x) + " = " +
                         m.name(m.mul(x, x)));
      }
    }
  }
  const std::size_t n = m.size();
  auto leq = std::make_shared<std::vector<char>>(n * n, 0);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) (*leq)[a * n + b] = m.mul(a, b) == b ? 1 : 0;
  }
  Elem top = FiniteMonoid::identity();
  for (Elem a = 0; a < n; ++a) top = m.mul(top, a);
  return JoinSemilattice(m, std::move(leq), top);
}

Elem JoinSemilattice::meet(Elem a, Elem b) const {
  // Q_{a,b} contains the least element and is join-closed, so its join is its top.
  Elem best = least();
  for (Elem x = 0; x < size(); ++x) {
    if (leq(x, a) && leq(x, b)) best = join(best, x);
  }
  return best;
}

ElementSet JoinSemilattice::downset(Elem a) const {
  ElementSet s(size());
  for (Elem x = 0; x < size(); ++x) {
    if (leq(x, a)) s.insert(x);
  }
  return s;
}

ElementSet JoinSemilattice::upset(Elem a) const {
  ElementSet s(size());
  for (Elem x = 0; x < size(); ++x) {
    if (leq(a, x)) s.insert(x);
  }
  return s;
}

bool JoinSemilattice::is_subsemilattice(const ElementSet& s) const {
  if (s.universe() != size() || !s.contains(least())) return false;
  const auto mem = s.members();
  for (Elem a : mem) {
    for (Elem b : mem) {
      if (!s.contains(join(a, b))) return false;
    }
  }
  return true;
}

std::optional<Elem> JoinSemilattice::max_of(const ElementSet& s) const {
  const auto mem = s.members();
  for (Elem c : mem) {
    bool greatest = true;
    for (Elem x : mem) {
      if (!leq(x, c)) {
        greatest = false;
        break;
      }
    }
    if (greatest) return c;
  }
  return std::nullopt;
}

std::optional<Elem> JoinSemilattice::min_of(const ElementSet& s) const {
  const auto mem = s.members();
  for (Elem c : mem) {
    bool smallest = true;
    for (Elem x : mem) {
      if (!leq(c, x)) {
        smallest = false;
        break;
      }
    }
    if (smallest) return c;
  }
  return std::nullopt;
}

JoinSemilattice chain(std::size_t n) { return JoinSemilattice::from_monoid(chain_monoid(n)); }

bool is_monotone(const MonotoneMap& f) {
  const auto& s = f.source;
  const auto& t = f.target;
  if (f.images.size() != s.size()) return false;
  for (Elem a = 0; a < s.size(); ++a) {
    for (Elem b = 0; b < s.size(); ++b) {
      if (s.leq(a, b) && !t.leq(f.images[a], f.images[b])) return false;
    }
  }
  return true;
}

bool preserves_joins(const MonotoneMap& f) {
  const auto& s = f.source;
  const auto& t = f.target;
  if (f.images.size() != s.size()) return false;
  if (f.images[JoinSemilattice::least()] != JoinSemilattice::least()) return false;
  for (Elem a = 0; a < s.size(); ++a) {
    for (Elem b = a; b < s.size(); ++b) {
      if (f.images[s.join(a, b)] != t.join(f.images[a], f.images[b])) return false;
    }
  }
  return true;
}

bool preserves_meets(const MonotoneMap& f) {
  const auto& s = f.source;
  const auto& t = f.target;
  if (f.images.size() != s.size()) return false;
  if (f.images[s.top()] != t.top()) return false;
  for (Elem a = 0; a < s.size(); ++a) {
    for (Elem b = a; b < s.size(); ++b) {
      if (f.images[s.meet(a, b)] != t.meet(f.images[a], f.images[b])) return false;
    }
  }
  return true;
}

MonotoneMap identity_map(const JoinSemilattice& l) {
  std::vector<Elem> img(l.size());
  std::iota(img.begin(), img.end(), Elem{0});
  return {l, l, std::move(img)};
}

MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
  if (!f.target.monoid().same_table(g.source.monoid())) {
    throw std::invalid_argument("compose: endpoint mismatch");
  }
  std::vector<Elem> img(f.images.size());
  for (std::size_t x = 0; x < img.size(); ++x) img[x] = g.images[f.images[x]];
  return {f.source, g.target, std::move(img)};
}

MonotoneMap right_adjoint(const MonotoneMap& f, bool must_be_join_morphism) {
  const auto& s = f.source;
  const auto& t = f.target;
  if (f.images.size() != s.size()) throw InputError("map has the wrong number of images");
  if (must_be_join_morphism && !preserves_joins(f)) {
    throw InputError("map does not preserve joins and the least element");
  }
  std::vector<Elem> img(t.size());
  for (Elem y = 0; y < t.size(); ++y) {
    ElementSet below(s.size());
    for (Elem x = 0; x < s.size(); ++x) {
      if (t.leq(f.images[x], y)) below.insert(x);
    }
    auto m = s.max_of(below);
    if (!m) {
      throw NoAdjoint("no greatest element in {x | f(x) <= " + t.names()[y] + "}", y);
    }
    img[y] = *m;
  }
  return {t, s, std::move(img)};
}

MonotoneMap left_adjoint(const MonotoneMap& g, bool must_be_meet_morphism) {
  const auto& s = g.source;
  const auto& t = g.target;
  if (g.images.size() != s.size()) throw InputError("map has the wrong number of images");
  if (must_be_meet_morphism && !preserves_meets(g)) {
    throw InputError("map does not preserve meets and the top element");
  }
  std::vector<Elem> img(t.size());
  for (Elem y = 0; y < t.size(); ++y) {
    ElementSet above(s.size());
    for (Elem x = 0; x < s.size(); ++x) {
      if (t.leq(y, g.images[x])) above.insert(x);
    }
    auto m = s.min_of(above);
    if (!m) {
      throw NoAdjoint("no least element in {x | " + t.names()[y] + " <= g(x)}", y);
    }
    img[y] = *m;
  }
  return {t, s, std::move(img)};
}

bool check_adjunction(const MonotoneMap& lower, const MonotoneMap& upper) {
  const auto& x_side = lower.source;
  const auto& y_side = lower.target;
  if (!upper.source.monoid().same_table(y_side.monoid()) ||
      !upper.target.monoid().same_table(x_side.monoid())) {
    throw std::invalid_argument("check_adjunction: endpoints do not match");
  }
  for (Elem x = 0; x < x_side.size(); ++x) {
    for (Elem y = 0; y < y_side.size(); ++y) {
      if (y_side.leq(lower.images[x], y) != x_side.leq(x, upper.images[y])) return false;
    }
  }
  return true;
}

std::string hasse_dot(std::span<const std::string> labels,
                      const std::function<bool(std::size_t, std::size_t)>& leq,
                      const std::string& graph_name) {
  const std::size_t n = labels.size();
  std::ostringstream os;
  os << "digraph " << graph_name << " {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < n; ++i) {
    os << "  n" << i << " [label=\"";
    for (char c : labels[i]) {
      if (c == '"' || c == '\\') os << '\\';
      os << c;
    }
    os << "\"];\n";
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !leq(a, b)) continue;
      bool cover = true;
      for (std::size_t c = 0; c < n && cover; ++c) {
        if (c != a && c != b && leq(a, c) && leq(c, b)) cover = false;
      }
      if (cover) os << "  n" << a << " -> n" << b << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string hasse_dot(const JoinSemilattice& l, const std::string& graph_name) {
  return hasse_dot(l.names(), [&](std::size_t a, std::size_t b) {
    return l.leq(static_cast<Elem>(a), static_cast<Elem>(b));
  }, graph_name);
}

}  // namespace monspec
