#pragma once

#include <string>
#include <string_view>

#include "monspec/monoid.hpp"

namespace monspec {

// Line-oriented table format:
//
//   # comment
//   elements: 1 a b
//   identity: 1
//   table:
//   1 a b
//   a a b
//   b b b
//
// Rows follow the order of `elements:`; names are whitespace separated.

/// Throws `ParseError` on malformed text and `InputError` if the laws fail.
FiniteMonoid parse_monoid_table(std::string_view text);

std::string format_monoid_table(const FiniteMonoid& m);

}  // namespace monspec
