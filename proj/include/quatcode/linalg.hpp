#pragma once

// Row reduction over a level-1 field.

#include <optional>
#include <vector>

#include "quatcode/field.hpp"

namespace quatcode {

using Vec = std::vector<Coeff>;
using Matrix = std::vector<Vec>;

/// Incrementally maintained reduced row echelon basis.
class RowSpace {
 public:
  RowSpace(FieldPtr field, std::size_t dim) : field_(std::move(field)), dim_(dim) {}

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  const Matrix& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Remainder of v after elimination against the basis.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;
  /// Adds v; returns true when the rank grew.
  bool add(const Vec& v);

  friend bool operator==(const RowSpace& a, const RowSpace& b) { return a.rows_ == b.rows_; }

 private:
  FieldPtr field_;
  std::size_t dim_;
  Matrix rows_;
  std::vector<std::size_t> pivots_;
};

std::size_t rank(const FieldPtr& field, const Matrix& m, std::size_t cols);

/// Basis of {x : R x = 0} given R in reduced row echelon form.
Matrix nullspace(const RowSpace& rref);

/// L with L * R = I for an N x c matrix R of full column rank.
std::optional<Matrix> left_inverse(const FieldPtr& field, const Matrix& r, std::size_t cols);

Vec mat_vec(const FieldPtr& field, const Matrix& m, const Vec& v);

}  // namespace quatcode
