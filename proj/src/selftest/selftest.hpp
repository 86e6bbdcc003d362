#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "invol/verify.hpp"

namespace invol {

struct SelftestOptions {
  int max_n = 6;
  std::uint64_t seed = 1;
  int random_shapes = 200;
  Tolerances tol;
};

struct SelftestReport {
  long graphs = 0;
  long connected = 0;
  long agreements = 0;
  long connected_agreements = 0;
  long constructions = 0;
  long random_shapes = 0;
  /// "graph6: reason" for each mismatch or failed construction.
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Exhaustive oracle agreement for n <= max_n (each constructible verdict is
/// also built and verified), then a seeded randomized construction suite on
/// relabeled block forms. Progress lines go to `log` when given.
SelftestReport run_selftest(const SelftestOptions& opts, std::ostream* log = nullptr);

}  // namespace invol
