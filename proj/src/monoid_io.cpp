#include "monspec/monoid_io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace monspec {

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> split(std::string_view line, std::size_t offset) {
  std::vector<Token> out;
  std::size_t i = offset;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

bool blank_or_comment(std::string_view line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Returns the offset just past "key:" if the line starts with it.
std::optional<std::size_t> keyword(std::string_view line, std::string_view key) {
  std::size_t i = 0;
  while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
  if (line.substr(i, key.size()) != key) return std::nullopt;
  i += key.size();
  if (i >= line.size() || line[i] != ':') return std::nullopt;
  return i + 1;
}

}  // namespace

FiniteMonoid parse_monoid_table(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    ++lineno;
    auto line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!blank_or_comment(line)) lines.emplace_back(lineno, line);
    if (end == text.size()) break;
    pos = end + 1;
  }

  std::size_t cursor = 0;
  auto expect = [&](std::string_view key) -> std::pair<std::size_t, std::vector<Token>> {
    if (cursor >= lines.size()) {
      throw ParseError(lineno, 1, "expected '" + std::string(key) + ":' before end of input");
    }
    const auto [ln, line] = lines[cursor++];
    auto off = keyword(line, key);
    if (!off) throw ParseError(ln, 1, "expected '" + std::string(key) + ":'");
    return {ln, split(line, *off)};
  };

  const auto [elem_line, elems] = expect("elements");
  if (elems.empty()) throw ParseError(elem_line, 1, "no elements listed");
  std::map<std::string, Elem> index;
  std::vector<std::string> names;
  for (const auto& t : elems) {
    if (!index.emplace(t.text, static_cast<Elem>(names.size())).second) {
      throw ParseError(elem_line, t.column, "duplicate element name '" + t.text + "'");
    }
    names.push_back(t.text);
  }
  auto lookup = [&](std::size_t ln, const Token& t) {
    auto it = index.find(t.text);
    if (it == index.end()) throw ParseError(ln, t.column, "unknown element '" + t.text + "'");
    return it->second;
  };

  const auto [id_line, id_toks] = expect("identity");
  if (id_toks.size() != 1) throw ParseError(id_line, 1, "expected exactly one identity name");
  const Elem identity = lookup(id_line, id_toks[0]);

  const auto [tab_line, tab_toks] = expect("table");
  if (!tab_toks.empty()) throw ParseError(tab_line, tab_toks[0].column, "unexpected text after 'table:'");

  const std::size_t n = names.size();
  std::vector<std::vector<Elem>> table;
  for (std::size_t r = 0; r < n; ++r) {
    if (cursor >= lines.size()) {
      throw ParseError(lineno, 1, "expected " + std::to_string(n) + " table rows, got " +
                                      std::to_string(r));
    }
    const auto [ln, line] = lines[cursor++];
    const auto toks = split(line, 0);
    if (toks.size() != n) {
      throw ParseError(ln, 1, "expected " + std::to_string(n) + " entries, got " +
                                  std::to_string(toks.size()));
    }
    std::vector<Elem> row;
    for (const auto& t : toks) row.push_back(lookup(ln, t));
    table.push_back(std::move(row));
  }
  if (cursor < lines.size()) throw ParseError(lines[cursor].first, 1, "unexpected trailing line");

  return FiniteMonoid::validate(table, identity, std::move(names));
}

std::string format_monoid_table(const FiniteMonoid& m) {
  std::ostringstream os;
  os << "elements:";
  for (const auto& n : m.names()) os << ' ' << n;
  os << "\nidentity: " << m.name(FiniteMonoid::identity()) << "\ntable:\n";
  for (Elem a = 0; a < m.size(); ++a) {
    for (Elem b = 0; b < m.size(); ++b) os << (b == 0 ? "" : " ") << m.name(m.mul(a, b));
    os << '\n';
  }
  return os.str();
}

}  // namespace monspec
