#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace monspec {

using Elem = std::uint32_t;

/// A subset of {0, ..., universe-1}, stored as a packed membership vector.
///
/// The canonical order used everywhere for deterministic output is
/// "by cardinality, then lexicographic on the sorted member list".
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe);
  ElementSet(std::size_t universe, std::initializer_list<Elem> members);
  ElementSet(std::size_t universe, std::span<const Elem> members);

  static ElementSet full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }
  bool contains(Elem x) const noexcept {
    return x < universe_ && ((words_[x >> 6] >> (x & 63)) & 1u) != 0;
  }
  void insert(Elem x);
  void erase(Elem x);
  std::size_t count() const noexcept;
  bool empty() const noexcept { return count() == 0; }

  std::vector<Elem> members() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = __builtin_ctzll(bits);
        f(static_cast<Elem>(w * 64 + static_cast<std::size_t>(bit)));
        bits &= bits - 1;
      }
    }
  }

  ElementSet complement() const;
  ElementSet& operator|=(const ElementSet& other);
  ElementSet& operator&=(const ElementSet& other);
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }

  bool is_subset_of(const ElementSet& other) const;

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  /// `{a, b}` using the given element labels (or indices when empty).
  std::string to_string(std::span<const std::string> labels = {}) const;

  std::size_t hash() const noexcept;

 private:
  void trim() noexcept;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Strict weak order: cardinality first, then lexicographic member lists.
bool canonical_less(const ElementSet& a, const ElementSet& b);

struct CanonicalLess {
  bool operator()(const ElementSet& a, const ElementSet& b) const {
    return canonical_less(a, b);
  }
};

/// Sorts canonically and removes duplicates.
void canonicalize(std::vector<ElementSet>& sets);

/// Index of `needle` in a canonically sorted family, or npos.
std::size_t find_canonical(std::span<const ElementSet> sorted, const ElementSet& needle);

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

}  // namespace monspec
