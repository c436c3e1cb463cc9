#include "monspec/element_set.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace monspec {

ElementSet::ElementSet(std::size_t universe)
    : universe_(universe), words_((universe + 63) / 64, 0) {}

ElementSet::ElementSet(std::size_t universe, std::initializer_list<Elem> members)
    : ElementSet(universe) {
  for (Elem x : members) insert(x);
}

ElementSet::ElementSet(std::size_t universe, std::span<const Elem> members)
    : ElementSet(universe) {
  for (Elem x : members) insert(x);
}

ElementSet ElementSet::full(std::size_t universe) {
  ElementSet s(universe);
  std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
  s.trim();
  return s;
}

void ElementSet::insert(Elem x) {
  if (x >= universe_) throw std::out_of_range("element index out of range");
  words_[x >> 6] |= std::uint64_t{1} << (x & 63);
}

void ElementSet::erase(Elem x) {
  if (x >= universe_) throw std::out_of_range("element index out of range");
  words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63));
}

std::size_t ElementSet::count() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<Elem> ElementSet::members() const {
  std::vector<Elem> out;
  out.reserve(count());
  for_each([&](Elem x) { out.push_back(x); });
  return out;
}

ElementSet ElementSet::complement() const {
  ElementSet s = *this;
  for (auto& w : s.words_) w = ~w;
  s.trim();
  return s;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
  if (other.universe_ != universe_) throw std::invalid_argument("universe mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) {
  if (other.universe_ != universe_) throw std::invalid_argument("universe mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  if (other.universe_ != universe_) return false;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

std::string ElementSet::to_string(std::span<const std::string> labels) const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for_each([&](Elem x) {
    if (!first) os << ", ";
    first = false;
    if (x < labels.size()) {
      os << labels[x];
    } else {
      os << x;
    }
  });
  os << '}';
  return os.str();
}

std::size_t ElementSet::hash() const noexcept {
  std::size_t h = universe_ * 0x9e3779b97f4a7c15ull;
  for (auto w : words_) h = (h ^ std::hash<std::uint64_t>{}(w)) * 0x100000001b3ull;
  return h;
}

void ElementSet::trim() noexcept {
  const std::size_t rem = universe_ & 63;
  if (rem != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << rem) - 1;
}

bool canonical_less(const ElementSet& a, const ElementSet& b) {
  const auto ca = a.count();
  const auto cb = b.count();
  if (ca != cb) return ca < cb;
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

void canonicalize(std::vector<ElementSet>& sets) {
  std::sort(sets.begin(), sets.end(), canonical_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

std::size_t find_canonical(std::span<const ElementSet> sorted, const ElementSet& needle) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), needle, canonical_less);
  if (it == sorted.end() || !(*it == needle)) return static_cast<std::size_t>(-1);
  return static_cast<std::size_t>(it - sorted.begin());
}

}  // namespace monspec
