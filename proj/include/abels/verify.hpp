#pragma once

// Property suites run by `abels verify`. Each property draws its random cases
// from a generator seeded by the suite seed and the property name, so a seed
// reproduces every case and reports are byte-identical across runs.

#include "abels/serialize.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace abels {

struct PropertyResult {
  std::string module;
  std::string name;
  std::size_t cases = 0;
  bool passed = true;
  /// First failing case, empty when passed.
  std::string counterexample;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<PropertyResult> properties;

  bool passed() const;
  Json to_json() const;
};

/// "invariants", "lattice", "complex", "homology", "all".
const std::vector<std::string>& suite_names();

/// Throws InvalidArgument for an unknown suite.
SuiteReport run_suite(std::string_view suite, std::uint64_t seed);

struct CorpusEntry {
  std::vector<std::int64_t> w1;
  std::vector<std::int64_t> w2;
  std::size_t admissible_count;
  int m;
  const char* witness;
};

/// 100 valid pairs of length at most 6 with brute-force values.
const std::vector<CorpusEntry>& invariants_corpus();

}  // namespace abels
