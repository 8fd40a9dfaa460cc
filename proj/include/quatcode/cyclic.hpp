#pragma once

// The quotient ring F_q[x]/(x^m - 1) and its idempotents.

#include <cstddef>
#include <vector>

#include "quatcode/field.hpp"
#include "quatcode/poly.hpp"

namespace quatcode {

/// Residue modulo x^m - 1, stored as exactly m coefficient codes.
class CyclicElem {
 public:
  CyclicElem() = default;
  CyclicElem(FieldPtr field, std::size_t m);
  CyclicElem(FieldPtr field, std::size_t m, std::vector<Coeff> coeffs);
  /// Reduction of an arbitrary polynomial modulo x^m - 1.
  static CyclicElem from_poly(const Poly& p, std::size_t m);
  static CyclicElem one(const FieldPtr& field, std::size_t m);
  /// x^k reduced modulo x^m - 1.
  static CyclicElem x_pow(const FieldPtr& field, std::size_t m, std::size_t k);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t modulus_degree() const noexcept { return c_.size(); }
  const std::vector<Coeff>& coeffs() const noexcept { return c_; }
  Coeff operator[](std::size_t i) const noexcept { return c_[i]; }
  bool is_zero() const noexcept;

  Poly to_poly() const { return Poly(field_, c_); }
  CyclicElem scaled(Coeff s) const;
  /// w(x) -> w(x^{-1}), i.e. index i -> (m - i) mod m.
  CyclicElem conj() const;
  /// Multiplication by x^k.
  CyclicElem shifted(std::size_t k) const;

  friend CyclicElem operator+(const CyclicElem& a, const CyclicElem& b);
  friend CyclicElem operator-(const CyclicElem& a, const CyclicElem& b);
  friend CyclicElem operator-(const CyclicElem& a);
  friend CyclicElem operator*(const CyclicElem& a, const CyclicElem& b);
  CyclicElem& operator+=(const CyclicElem& o) { return *this = *this + o; }
  friend bool operator==(const CyclicElem& a, const CyclicElem& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }

 private:
  FieldPtr field_;
  std::vector<Coeff> c_;
};

/// Conjugation as a free function (the involution x -> x^{-1}).
inline CyclicElem conj_x_inverse(const CyclicElem& w) { return w.conj(); }

/// Primitive idempotent of the component of an irreducible f | x^m - 1:
/// eps = a * (x^m-1)/f with a = ((x^m-1)/f)^{-1} mod f.
CyclicElem idempotent_oracle(const Poly& f, std::size_t m);

enum class StarConvention {
  Raw,         // coefficient reversal only
  Normalized,  // reversal scaled by the inverse constant term
};

/// -[(g*)']* / m * (x^m - 1)/g for a monic divisor g of x^m - 1. With the
/// Raw convention the inner reciprocal reverses at degree deg(g) and the
/// outer one at the formal degree deg(g) - 1 of the derivative.
CyclicElem idempotent_eq1(const Poly& g, std::size_t m, StarConvention star = StarConvention::Raw);

/// Sum of idempotent_oracle over the irreducible factors of g.
CyclicElem idempotent_divisor(const Poly& g, std::size_t m);

/// Throws NotADivisor unless g is a monic divisor of x^m - 1.
void require_divisor(const Poly& g, std::size_t m);

}  // namespace quatcode
