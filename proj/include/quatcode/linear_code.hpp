#pragma once

// A code in F_q[Q_4n] as a classical [4n, k] linear code. Coordinates are
// ordered (x^0 .. x^{2n-1}, y x^0 .. y x^{2n-1}).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quatcode/quat.hpp"

namespace quatcode {

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

struct LinearCode {
  FieldPtr field;
  unsigned n = 0;
  std::size_t length = 0;
  Matrix generator;  // k rows, reduced echelon form
  Matrix check;      // (length - k) rows with G H^T = 0

  std::size_t k() const noexcept { return generator.size(); }
};

LinearCode to_linear(const SubspaceBasis& c);

/// Counts by Hamming weight 0..length over all q^k codewords, or nullopt
/// when q^k exceeds the budget.
std::optional<std::vector<std::uint64_t>> weight_enumerator(const LinearCode& code,
                                                            std::uint64_t budget = kDefaultBudget);
/// Minimum nonzero weight; nullopt when q^k exceeds the budget.
/// Throws InvalidArgument for k = 0.
std::optional<std::size_t> min_distance(const LinearCode& code, std::uint64_t budget = kDefaultBudget);

/// Left multiplication by x and by y maps the code into itself.
bool is_left_invariant(const LinearCode& code);

/// "generator" and "check" sections of space-separated codes.
std::string export_text(const LinearCode& code);
/// {q, n, length, k, generator, check}
std::string export_json(const LinearCode& code);

}  // namespace quatcode
