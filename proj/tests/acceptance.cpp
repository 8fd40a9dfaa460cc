// Acceptance gate: one PASS/FAIL line per criterion over the default grid.
// Arithmetic is exact, so every comparison has zero tolerance; each
// criterion also has a wall-clock bound.

#include <chrono>
#include <cstdio>
#include <iostream>

#include "quatcode/selftest.hpp"

using namespace quatcode;

namespace {

constexpr std::uint64_t kSeed = 20240917;

struct Bound {
  int id;
  double seconds;
};

constexpr Bound kBounds[] = {{1, 60}, {2, 30}, {3, 60}, {4, 120}, {5, 600}, {6, 600}, {7, 60}};

double elapsed(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void print_line(int id, const std::string& name, bool ok, const std::string& detail) {
  std::printf("criterion %d %-30s %s  %s\n", id, name.c_str(), ok ? "PASS" : "FAIL", detail.c_str());
}

}  // namespace

int main() {
  const Grid grid = default_grid();
  std::printf("grid: %zu cells, %zu skipped (gcd(4n, q) != 1), seed %llu\n", grid.cells.size(), grid.skipped.size(),
              static_cast<unsigned long long>(kSeed));
  bool all = true;
  for (const Bound& b : kBounds) {
    const auto t0 = std::chrono::steady_clock::now();
    const CriterionResult r = run_criterion(b.id, grid, kSeed);
    const double secs = elapsed(t0);
    const bool ok = r.passed() && secs <= b.seconds;
    char detail[160];
    std::snprintf(detail, sizeof detail, "checks=%llu failures=%llu time=%.2fs bound=%.0fs",
                  static_cast<unsigned long long>(r.checks), static_cast<unsigned long long>(r.failures), secs,
                  b.seconds);
    print_line(b.id, r.name, ok, detail);
    for (const auto& note : r.notes) std::printf("    %s\n", note.c_str());
    all = all && ok;
  }

  const auto t0 = std::chrono::steady_clock::now();
  const std::string first = run_selftest(grid, kSeed).text();
  const std::string second = run_selftest(grid, kSeed).text();
  const bool same = first == second;
  char detail[160];
  std::snprintf(detail, sizeof detail, "report bytes=%zu identical=%s time=%.2fs", first.size(), same ? "yes" : "no",
                elapsed(t0));
  print_line(8, "determinism", same, detail);
  all = all && same;

  std::printf("acceptance: %s\n", all ? "PASS" : "FAIL");
  return all ? 0 : 1;
}
