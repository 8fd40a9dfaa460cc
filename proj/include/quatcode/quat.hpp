#pragma once

// The group algebra F_q[Q_4n], Q_4n = <x, y | x^{2n} = 1, y^2 = x^n, yxy^{-1} = x^{-1}>.
// Elements are written u(x) + y v(x) with u, v residues modulo x^{2n} - 1.
// Coordinates follow the basis (x^0 .. x^{2n-1}, y x^0 .. y x^{2n-1}).

#include <span>
#include <vector>

#include "quatcode/cyclic.hpp"
#include "quatcode/linalg.hpp"

namespace quatcode {

class QElem {
 public:
  QElem() = default;
  QElem(FieldPtr field, unsigned n);
  QElem(CyclicElem u, CyclicElem v);

  static QElem one(const FieldPtr& field, unsigned n);
  static QElem x(const FieldPtr& field, unsigned n);
  static QElem y(const FieldPtr& field, unsigned n);
  static QElem from_coords(const FieldPtr& field, unsigned n, const Vec& coords);
  /// w(x) + y*0
  static QElem from_cyclic(const CyclicElem& w);

  const FieldPtr& field() const noexcept { return u_.field(); }
  unsigned n() const noexcept { return static_cast<unsigned>(u_.modulus_degree() / 2); }
  const CyclicElem& u() const noexcept { return u_; }
  const CyclicElem& v() const noexcept { return v_; }
  Vec coords() const;
  bool is_zero() const noexcept { return u_.is_zero() && v_.is_zero(); }

  QElem scaled(Coeff s) const { return QElem(u_.scaled(s), v_.scaled(s)); }
  /// x * this
  QElem left_mul_x() const;
  /// y * this
  QElem left_mul_y() const;
  /// this * w for w in F_q[x]
  QElem mul_cyclic(const CyclicElem& w) const { return QElem(u_ * w, v_ * w); }

  friend QElem operator+(const QElem& a, const QElem& b) { return QElem(a.u_ + b.u_, a.v_ + b.v_); }
  friend QElem operator-(const QElem& a, const QElem& b) { return QElem(a.u_ - b.u_, a.v_ - b.v_); }
  friend QElem operator-(const QElem& a) { return QElem(-a.u_, -a.v_); }
  friend QElem operator*(const QElem& a, const QElem& b);
  friend bool operator==(const QElem& a, const QElem& b) { return a.u_ == b.u_ && a.v_ == b.v_; }

 private:
  CyclicElem u_, v_;
};

/// (u1 + y v1)(u2 + y v2) = [u1 u2 + x^n conj(v1) v2] + y [conj(u1) v2 + v1 u2].
inline QElem qmul(const QElem& a, const QElem& b) { return a * b; }

bool is_idempotent(const QElem& a);
/// Commutes with the generators x and y.
bool is_central(const QElem& a);

/// F_q-subspace of F_q[Q_4n] in reduced row echelon form.
class SubspaceBasis {
 public:
  SubspaceBasis(FieldPtr field, unsigned n) : n_(n), space_(std::move(field), 4 * std::size_t{n}) {}

  const FieldPtr& field() const noexcept { return space_.field(); }
  unsigned n() const noexcept { return n_; }
  std::size_t rank() const noexcept { return space_.rank(); }
  const RowSpace& space() const noexcept { return space_; }
  std::vector<QElem> basis() const;
  bool contains(const QElem& a) const { return space_.contains(a.coords()); }
  bool add(const QElem& a) { return space_.add(a.coords()); }

  friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) {
    return a.n_ == b.n_ && a.space_ == b.space_;
  }

 private:
  unsigned n_;
  RowSpace space_;
};

/// Smallest subspace containing `gens` and closed under left multiplication
/// by x and y.
SubspaceBasis left_ideal_closure(const FieldPtr& field, unsigned n, std::span<const QElem> gens);
bool is_left_ideal(const SubspaceBasis& c);

}  // namespace quatcode
