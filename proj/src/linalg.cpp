#include "quatcode/linalg.hpp"

#include <algorithm>

namespace quatcode {

namespace {

// v -= c * row, starting at column `from`.
void axpy(const Field& f, Vec& v, Coeff c, const Vec& row, std::size_t from) {
  const Coeff nc = f.neg(c);
  for (std::size_t i = from; i < v.size(); ++i)
    if (row[i] != 0) v[i] = f.add(v[i], f.mul(nc, row[i]));
}

std::size_t first_nonzero(const Vec& v) {
  auto it = std::find_if(v.begin(), v.end(), [](Coeff c) { return c != 0; });
  return static_cast<std::size_t>(it - v.begin());
}

}  // namespace

Vec RowSpace::reduce(Vec v) const {
  const Field& f = *field_;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Coeff c = v[pivots_[r]];
    if (c != 0) axpy(f, v, c, rows_[r], pivots_[r]);
  }
  return v;
}

bool RowSpace::contains(const Vec& v) const {
  const Vec rem = reduce(v);
  return first_nonzero(rem) == rem.size();
}

bool RowSpace::add(const Vec& v) {
  if (v.size() != dim_) throw Error(Errc::InvalidArgument, "vector length does not match subspace dimension");
  const Field& f = *field_;
  Vec rem = reduce(v);
  const std::size_t piv = first_nonzero(rem);
  if (piv == rem.size()) return false;
  const Coeff inv = f.inv(rem[piv]);
  for (std::size_t i = piv; i < rem.size(); ++i) rem[i] = f.mul(rem[i], inv);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Coeff c = rows_[r][piv];
    if (c != 0) axpy(f, rows_[r], c, rem, piv);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, piv);
  rows_.insert(rows_.begin() + pos, std::move(rem));
  return true;
}

std::size_t rank(const FieldPtr& field, const Matrix& m, std::size_t cols) {
  RowSpace rs(field, cols);
  for (const auto& row : m) rs.add(row);
  return rs.rank();
}

Matrix nullspace(const RowSpace& rref) {
  const Field& f = *rref.field();
  const std::size_t n = rref.dim();
  std::vector<bool> is_pivot(n, false);
  for (auto p : rref.pivots()) is_pivot[p] = true;
  Matrix out;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < rref.rank(); ++r) v[rref.pivots()[r]] = f.neg(rref.rows()[r][free]);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<Matrix> left_inverse(const FieldPtr& field, const Matrix& r, std::size_t cols) {
  const Field& f = *field;
  const std::size_t rows = r.size();
  Matrix a(rows, Vec(cols + rows, 0));
  for (std::size_t i = 0; i < rows; ++i) {
    std::copy(r[i].begin(), r[i].end(), a[i].begin());
    a[i][cols + i] = 1;
  }
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t piv = c;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) return std::nullopt;
    std::swap(a[c], a[piv]);
    const Coeff inv = f.inv(a[c][c]);
    for (auto& x : a[c]) x = f.mul(x, inv);
    for (std::size_t i = 0; i < rows; ++i)
      if (i != c && a[i][c] != 0) axpy(f, a[i], a[i][c], a[c], 0);
  }
  Matrix l(cols);
  for (std::size_t i = 0; i < cols; ++i) l[i].assign(a[i].begin() + static_cast<std::ptrdiff_t>(cols), a[i].end());
  return l;
}

Vec mat_vec(const FieldPtr& field, const Matrix& m, const Vec& v) {
  const Field& f = *field;
  Vec out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    Coeff acc = 0;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0 && m[i][j] != 0) acc = f.add(acc, f.mul(m[i][j], v[j]));
    out[i] = acc;
  }
  return out;
}

}  // namespace quatcode
