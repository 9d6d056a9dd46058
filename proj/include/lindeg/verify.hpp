#pragma once

// Cross-module property suites behind `lindeg verify`.

#include <cstdint>
#include <string>
#include <vector>

#include "lindeg/quiver.hpp"

namespace lindeg {

struct PropertyResult {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  std::string first_failure;
};

struct SuiteResult {
  std::string suite;
  std::vector<PropertyResult> properties;

  bool passed() const;
};

/// exthom, classify-consistency, roundtrip, sigma, rankcomposition.
const std::vector<std::string>& verify_suite_names();

/// Runs one suite, or every suite for "all". Throws ValidationError on an
/// unknown name.
std::vector<SuiteResult> run_verify(const std::string& name, std::uint64_t seed);

/// Every valid d for ambient m and length n, in lexicographic order.
std::vector<DimVector> all_dim_vectors(int m, int n);

}  // namespace lindeg
