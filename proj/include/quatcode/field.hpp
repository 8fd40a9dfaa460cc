#pragma once

// Finite fields used throughout the library.
//
// Two levels exist:
//   level 1:  F_q = F_p[z]/(m(z)), elements addressed by an integer code
//             sum_i c_i p^i where c_i are the coefficients of z^i;
//   level 2:  F_q[w]/(f(w)), a single extension of a level-1 field holding
//             the roots of irreducible factors of x^n -+ 1.
// Contexts are immutable and shared through FieldPtr.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "quatcode/error.hpp"

namespace quatcode {

using Coeff = std::uint32_t;

class Field;
class FieldElem;
class Poly;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
 public:
  /// F_p[z]/(modulus); modulus is ascending over F_p, monic and irreducible.
  static FieldPtr make(std::uint32_t p, const std::vector<std::uint32_t>& modulus);
  static FieldPtr prime(std::uint32_t p);
  /// F_q of degree m over F_p, using the first monic irreducible modulus in
  /// ascending code order of its lower coefficients.
  static FieldPtr galois(std::uint32_t p, std::size_t m);
  /// base[w]/(f). Throws TowerTooDeep when `base` is already an extension.
  static FieldPtr extend(const FieldPtr& base, const Poly& f);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint64_t cardinality() const noexcept { return card_; }
  /// Degree over the next-lower level.
  std::size_t degree() const noexcept { return modulus_.size() - 1; }
  bool is_extension() const noexcept { return base_ != nullptr; }
  bool is_prime_field() const noexcept { return !base_ && degree() == 1; }
  const FieldPtr& base() const noexcept { return base_; }
  /// Level 1: digits over F_p. Level 2: base-field codes.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  // Code arithmetic, valid on level-1 contexts only.
  Coeff add(Coeff a, Coeff b) const noexcept {
    if (table_add_.empty()) {
      std::uint64_t s = std::uint64_t{a} + b;
      return static_cast<Coeff>(s >= p_ ? s - p_ : s);
    }
    return table_add_[std::size_t{a} * card_ + b];
  }
  Coeff neg(Coeff a) const noexcept {
    if (table_add_.empty()) return a == 0 ? 0 : p_ - a;
    return table_neg_[a];
  }
  Coeff sub(Coeff a, Coeff b) const noexcept { return add(a, neg(b)); }
  Coeff mul(Coeff a, Coeff b) const noexcept {
    if (table_mul_.empty()) return static_cast<Coeff>(std::uint64_t{a} * b % p_);
    return table_mul_[std::size_t{a} * card_ + b];
  }
  Coeff inv(Coeff a) const;
  Coeff div(Coeff a, Coeff b) const { return mul(a, inv(b)); }
  Coeff pow(Coeff a, std::uint64_t e) const noexcept;
  /// Image of an integer under Z -> F_p -> F_q.
  Coeff from_int(std::int64_t v) const noexcept;
  /// Number of codes, i.e. the cardinality of a level-1 field.
  std::uint64_t code_count() const noexcept { return card_; }

  // Element views.
  FieldElem zero() const;
  FieldElem one() const;
  /// Class of z (level 1) or w (level 2).
  FieldElem generator() const;
  /// Level 1: element with the given code. Level 2: embedded base code.
  FieldElem elem(Coeff code) const;
  /// Level 1: code of an element. Level 2: throws Unsupported unless the
  /// element lies in the base field, in which case its base code is returned.
  Coeff code_of(const FieldElem& e) const;
  /// Integer index of an element (level 2: sum c_i q^i); zero-based, unique.
  std::uint64_t index_of(const FieldElem& e) const;
  FieldElem from_index(std::uint64_t idx) const;

  FieldPtr self() const { return self_.lock(); }

 private:
  Field() = default;

  std::uint32_t p_ = 0;
  std::uint64_t card_ = 0;
  std::vector<std::uint32_t> modulus_;
  FieldPtr base_;
  std::weak_ptr<const Field> self_;
  std::vector<Coeff> table_add_, table_mul_, table_neg_, table_inv_;

  friend class FieldElem;
  friend FieldElem operator+(const FieldElem&, const FieldElem&);
  friend FieldElem operator*(const FieldElem&, const FieldElem&);
  friend FieldElem operator-(const FieldElem&);
};

/// Element of a level-1 or level-2 field. Carries its context; mixing
/// contexts throws ContextMismatch.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(FieldPtr field, std::vector<std::uint32_t> coeffs);

  const FieldPtr& field() const noexcept { return field_; }
  const std::vector<std::uint32_t>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  FieldElem inv() const;
  FieldElem pow(std::uint64_t e) const;

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b) { return a + (-b); }
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inv(); }
  FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
  FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
  FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }
  friend bool operator==(const FieldElem& a, const FieldElem& b);

 private:
  FieldPtr field_;
  std::vector<std::uint32_t> coeffs_;
};

/// A square root of -1 in `field`, or nullopt when |field| = 3 (mod 4).
/// Of the two roots the one with the smaller index is returned.
std::optional<FieldElem> sqrt_minus_one(const FieldPtr& field);

/// Human-readable rendering: level 1 prints the code, level 2 a polynomial
/// in `a` with base-field codes as coefficients.
std::string to_string(const FieldElem& e);

bool is_prime(std::uint64_t v) noexcept;

}  // namespace quatcode
