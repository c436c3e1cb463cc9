#include "monspec/presentation.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <limits>
#include <map>
#include <optional>
#include <sstream>

#include "monspec/congruence.hpp"

namespace monspec {

ElementSet Word::support() const {
  ElementSet s(exponents.size());
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] > 0) s.insert(static_cast<Elem>(i));
  }
  return s;
}

namespace {

enum class Tok { kName, kInt, kCaret, kEquals, kSemi, kMinus, kEnd };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;
};

class LineLexer {
 public:
  LineLexer(std::string_view line, std::size_t lineno, std::size_t start)
      : line_(line), lineno_(lineno), pos_(start) {}

  Token next() {
    while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_]))) ++pos_;
    const std::size_t col = pos_ + 1;
    if (pos_ >= line_.size()) return {Tok::kEnd, "", col};
    const char c = line_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t s = pos_;
      while (pos_ < line_.size() &&
             (std::isalnum(static_cast<unsigned char>(line_[pos_])) || line_[pos_] == '_')) {
        ++pos_;
      }
      return {Tok::kName, std::string(line_.substr(s, pos_ - s)), col};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t s = pos_;
      while (pos_ < line_.size() && std::isdigit(static_cast<unsigned char>(line_[pos_]))) ++pos_;
      return {Tok::kInt, std::string(line_.substr(s, pos_ - s)), col};
    }
    ++pos_;
    switch (c) {
      case '^': return {Tok::kCaret, "^", col};
      case '=': return {Tok::kEquals, "=", col};
      case ';': return {Tok::kSemi, ";", col};
      case '-': return {Tok::kMinus, "-", col};
      default: break;
    }
    throw ParseError(lineno_, col, std::string("unexpected character '") + c + "'");
  }

  Token peek() {
    const auto saved = pos_;
    auto t = next();
    pos_ = saved;
    return t;
  }

  std::size_t lineno() const noexcept { return lineno_; }

 private:
  std::string_view line_;
  std::size_t lineno_;
  std::size_t pos_;
};

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

bool is_blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

std::optional<std::size_t> after_keyword(std::string_view line, std::string_view key) {
  std::size_t i = 0;
  while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
  if (line.substr(i, key.size()) != key) return std::nullopt;
  i += key.size();
  while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
  if (i >= line.size() || line[i] != ':') return std::nullopt;
  return i + 1;
}

std::size_t parse_exponent(const Token& t, std::size_t lineno) {
  std::size_t v = 0;
  for (char c : t.text) {
    const std::size_t d = static_cast<std::size_t>(c - '0');
    if (v > (std::numeric_limits<std::size_t>::max() - d) / 10) {
      throw ParseError(lineno, t.column, "exponent too large");
    }
    v = v * 10 + d;
  }
  return v;
}

Word parse_word(LineLexer& lex, const std::map<std::string, std::size_t>& gens, std::size_t rank) {
  Word w{std::vector<std::size_t>(rank, 0)};
  auto first = lex.peek();
  if (first.kind == Tok::kInt) {
    lex.next();
    if (first.text != "1") throw ParseError(lex.lineno(), first.column, "only '1' may stand for the empty word");
    return w;
  }
  if (first.kind != Tok::kName) throw ParseError(lex.lineno(), first.column, "expected a word");
  while (lex.peek().kind == Tok::kName) {
    const auto name = lex.next();
    auto it = gens.find(name.text);
    if (it == gens.end()) throw ParseError(lex.lineno(), name.column, "unknown generator '" + name.text + "'");
    std::size_t e = 1;
    if (lex.peek().kind == Tok::kCaret) {
      lex.next();
      const auto exp = lex.next();
      if (exp.kind == Tok::kMinus) throw ParseError(lex.lineno(), exp.column, "negative exponent");
      if (exp.kind != Tok::kInt) throw ParseError(lex.lineno(), exp.column, "expected an exponent after '^'");
      e = parse_exponent(exp, lex.lineno());
    }
    w.exponents[it->second] += e;
  }
  return w;
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (true) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    ++lineno;
    const auto line = strip_comment(text.substr(pos, end - pos));
    if (!is_blank(line)) lines.emplace_back(lineno, line);
    if (end >= text.size()) break;
    pos = end + 1;
  }
  if (lines.empty()) throw ParseError(lineno, 1, "expected 'gens:'");

  Presentation p;
  std::map<std::string, std::size_t> gens;
  {
    const auto [ln, line] = lines[0];
    auto off = after_keyword(line, "gens");
    if (!off) throw ParseError(ln, 1, "expected 'gens:'");
    LineLexer lex(line, ln, *off);
    for (auto t = lex.next(); t.kind != Tok::kEnd; t = lex.next()) {
      if (t.kind != Tok::kName) throw ParseError(ln, t.column, "expected a generator name");
      if (!gens.emplace(t.text, p.generators.size()).second) {
        throw ParseError(ln, t.column, "duplicate generator '" + t.text + "'");
      }
      p.generators.push_back(t.text);
    }
    if (p.generators.empty()) throw ParseError(ln, line.size() + 1, "expected at least one generator");
  }
  if (lines.size() > 2) throw ParseError(lines[2].first, 1, "unexpected line after 'rels:'");
  if (lines.size() == 2) {
    const auto [ln, line] = lines[1];
    auto off = after_keyword(line, "rels");
    if (!off) throw ParseError(ln, 1, "expected 'rels:'");
    LineLexer lex(line, ln, *off);
    while (true) {
      Word lhs = parse_word(lex, gens, p.rank());
      const auto eq = lex.next();
      if (eq.kind != Tok::kEquals) throw ParseError(ln, eq.column, "expected '='");
      Word rhs = parse_word(lex, gens, p.rank());
      p.relations.emplace_back(std::move(lhs), std::move(rhs));
      const auto sep = lex.next();
      if (sep.kind == Tok::kEnd) break;
      if (sep.kind != Tok::kSemi) throw ParseError(ln, sep.column, "expected ';' or end of line");
    }
  }
  return p;
}

std::string format_word(const Presentation& p, const Word& w) {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < w.exponents.size(); ++i) {
    if (w.exponents[i] == 0) continue;
    if (any) os << ' ';
    any = true;
    os << p.generators[i];
    if (w.exponents[i] > 1) os << '^' << w.exponents[i];
  }
  if (!any) os << '1';
  return os.str();
}

std::string format_presentation(const Presentation& p) {
  std::ostringstream os;
  os << "gens:";
  for (const auto& g : p.generators) os << ' ' << g;
  os << '\n';
  if (!p.relations.empty()) {
    os << "rels: ";
    for (std::size_t i = 0; i < p.relations.size(); ++i) {
      if (i > 0) os << "; ";
      os << format_word(p, p.relations[i].first) << " = " << format_word(p, p.relations[i].second);
    }
    os << '\n';
  }
  return os.str();
}

namespace {

void check_cap(std::size_t k, std::size_t cap) {
  const std::size_t limit = std::min(cap, kMaxGeneratorCap);
  if (k > limit) {
    throw CapExceeded("cap exceeded: " + std::to_string(k) + " generators, limit " +
                      std::to_string(limit));
  }
}

// Masks over k bits in element order: by popcount, then lexicographic on members.
std::vector<std::uint32_t> ordered_masks(std::size_t k) {
  std::vector<std::uint32_t> masks(std::size_t{1} << k);
  for (std::uint32_t m = 0; m < masks.size(); ++m) masks[m] = m;
  std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    // Same size: compare sorted member lists; the lowest differing bit decides.
    const std::uint32_t diff = a ^ b;
    const std::uint32_t low = diff & (~diff + 1);
    return (a & low) != 0;
  });
  return masks;
}

}  // namespace

JoinSemilattice free_semilattice(std::size_t k, std::vector<std::string> generator_names, std::size_t cap) {
  check_cap(k, cap);
  if (generator_names.empty()) {
    for (std::size_t i = 0; i < k; ++i) generator_names.push_back("g" + std::to_string(i));
  }
  if (generator_names.size() != k) throw InputError("generator name count mismatch");
  const auto masks = ordered_masks(k);
  const std::size_t n = masks.size();
  std::vector<Elem> index(n);
  for (std::size_t i = 0; i < n; ++i) index[masks[i]] = static_cast<Elem>(i);
  std::vector<Elem> table(n * n);
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string nm = "{";
    bool first = true;
    for (std::size_t g = 0; g < k; ++g) {
      if ((masks[i] >> g) & 1u) {
        if (!first) nm += ',';
        first = false;
        nm += generator_names[g];
      }
    }
    names[i] = nm + "}";
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = index[masks[i] | masks[j]];
  }
  return JoinSemilattice::from_monoid(FiniteMonoid::from_trusted(n, std::move(table), std::move(names)));
}

Elem free_semilattice_index(std::size_t k, const ElementSet& subset) {
  if (subset.universe() != k) throw std::invalid_argument("subset universe mismatch");
  check_cap(k, kMaxGeneratorCap);
  // Position = (number of smaller-popcount masks) + rank among equal popcount.
  std::uint32_t mask = 0;
  subset.for_each([&](Elem g) { mask |= std::uint32_t{1} << g; });
  const auto masks = ordered_masks(k);
  return static_cast<Elem>(std::find(masks.begin(), masks.end(), mask) - masks.begin());
}

PresentedSemilattice sl_of_presentation(const Presentation& p, std::size_t cap) {
  const std::size_t k = p.rank();
  check_cap(k, cap);
  const auto free = free_semilattice(k, p.generators, cap);
  const auto masks = ordered_masks(k);
  std::vector<Elem> index(masks.size());
  for (std::size_t i = 0; i < masks.size(); ++i) index[masks[i]] = static_cast<Elem>(i);
  auto to_mask = [&](const Word& w) {
    if (w.exponents.size() != k) throw InputError("word length does not match generator count");
    std::uint32_t m = 0;
    for (std::size_t g = 0; g < k; ++g) {
      if (w.exponents[g] > 0) m |= std::uint32_t{1} << g;
    }
    return m;
  };
  std::vector<std::pair<Elem, Elem>> pairs;
  for (const auto& [u, v] : p.relations) pairs.emplace_back(index[to_mask(u)], index[to_mask(v)]);
  auto [q, proj] = quotient(free.monoid(), congruence_closure(free.monoid(), pairs));
  PresentedSemilattice out{JoinSemilattice::from_monoid(q), {}};
  for (std::size_t g = 0; g < k; ++g) out.generator_images.push_back(proj.images[index[std::uint32_t{1} << g]]);
  return out;
}

Presentation presentation_of_table(const FiniteMonoid& m) {
  Presentation p;
  const std::size_t n = m.size();
  for (Elem a = 0; a < n; ++a) p.generators.push_back("g" + std::to_string(a));
  auto gen = [&](Elem a) {
    Word w{std::vector<std::size_t>(n, 0)};
    w.exponents[a] = 1;
    return w;
  };
  p.relations.emplace_back(gen(FiniteMonoid::identity()), Word{std::vector<std::size_t>(n, 0)});
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = a; b < n; ++b) {
      Word lhs = gen(a);
      lhs.exponents[b] += 1;
      p.relations.emplace_back(std::move(lhs), gen(m.mul(a, b)));
    }
  }
  return p;
}

}  // namespace monspec
