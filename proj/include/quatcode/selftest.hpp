#pragma once

// Property suite over a grid of (q, n). Reports are deterministic for a
// fixed seed and carry no timings.

#include <cstdint>
#include <string>
#include <vector>

#include "quatcode/field.hpp"

namespace quatcode {

struct GridCell {
  std::uint32_t p = 0;
  unsigned m = 1;
  unsigned n = 0;

  std::uint64_t q() const noexcept;
  FieldPtr field() const;
  std::string label() const;
};

struct Grid {
  std::vector<GridCell> cells;    // gcd(4n, q) = 1
  std::vector<GridCell> skipped;  // gcd(4n, q) != 1
};

/// All (q, n) with q in `qs` and n_min <= n <= n_max. Throws NotPrime when
/// some q is not a prime power.
Grid make_grid(const std::vector<std::uint64_t>& qs, unsigned n_min, unsigned n_max);
/// q in {3, 5, 7, 9, 11, 13}, 2 <= n <= 12.
Grid default_grid();

struct CriterionResult {
  int id = 0;
  std::string name;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> notes;  // first failures and summary facts

  bool passed() const noexcept { return failures == 0 && checks > 0; }
};

/// Criteria 1-7 of the acceptance list; each derives its randomness from
/// (seed, criterion, cell).
CriterionResult run_criterion(int id, const Grid& grid, std::uint64_t seed);

struct SelftestReport {
  std::uint64_t seed = 0;
  std::vector<std::string> skipped;
  std::vector<CriterionResult> results;

  bool passed() const noexcept;
  std::string text() const;
};

SelftestReport run_selftest(const Grid& grid, std::uint64_t seed);

/// Splits q into p^m; throws NotPrime otherwise.
GridCell cell_for(std::uint64_t q, unsigned n);

}  // namespace quatcode
