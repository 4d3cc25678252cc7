#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace spolar {

/// One reproduced reference value.
struct GoldenEntry {
  std::string name;
  double expected = 0.0;
  double tolerance = 0.0;
  double computed = 0.0;
  bool pass = false;
  std::string note;  // non-empty for documented discrepancies
};

/// Runs the reference-value suite (the named bound evaluations and the
/// 24-cell strip) and returns one entry per value.
std::vector<GoldenEntry> run_golden_suite(std::uint64_t seed = 20240901);

/// Prints a pass/fail table; returns true when every entry passes.
bool print_golden_table(const std::vector<GoldenEntry>& entries);

}  // namespace spolar
