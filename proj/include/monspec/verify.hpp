#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "monspec/corpus.hpp"

namespace monspec {

struct VerifyOptions {
  CorpusOptions corpus;
  /// Feed the brute-force spectrum route a copy of each monoid with one
  /// table entry changed. Used to show that the harness notices defects.
  bool mutate = false;
};

struct PropertyResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t passed = 0;
  /// Corpus item of the first failure, empty if none.
  std::string first_failure;

  bool ok() const noexcept { return checked == passed; }
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::size_t monoids = 0;
  std::size_t semilattices = 0;
  std::size_t presentations = 0;
  std::vector<PropertyResult> properties;

  bool all_passed() const;
  /// Deterministic summary, one line per property.
  std::string to_text() const;
};

/// Runs every property suite over the corpus for `options.corpus.seed`.
VerifyReport run_verify(const VerifyOptions& options = {});

/// Copy of `m` with entry (1, 1) replaced by a different element. Not a
/// valid monoid in general.
FiniteMonoid mutate_table(const FiniteMonoid& m);

}  // namespace monspec
