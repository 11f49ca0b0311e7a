#pragma once

// Full verification sweep: every acceptance check over a genus range, one
// result line per criterion.

#include <cstdint>
#include <iosfwd>

namespace gcg {

struct SuiteResult {
  int passed = 0;
  int failed = 0;
  int warnings = 0;

  bool ok() const { return failed == 0; }
};

SuiteResult run_suite(int g_lo, int g_hi, std::uint64_t seed, std::ostream& out);

}  // namespace gcg
