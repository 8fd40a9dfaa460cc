#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quatcode/field.hpp"

namespace quatcode {

/// Dense univariate polynomial over a level-1 field, ascending coefficients,
/// always trimmed (no zero leading coefficient).
class Poly {
 public:
  Poly() = default;
  explicit Poly(FieldPtr field);
  Poly(FieldPtr field, std::vector<Coeff> coeffs);

  static Poly constant(const FieldPtr& field, Coeff c);
  static Poly monomial(const FieldPtr& field, std::size_t degree, Coeff c = 1);
  /// x^m + sign, e.g. x_pow_plus(F, m, -1) = x^m - 1.
  static Poly x_pow_plus(const FieldPtr& field, std::size_t m, int sign);

  const FieldPtr& field() const noexcept { return field_; }
  const std::vector<Coeff>& coeffs() const noexcept { return c_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
  Coeff operator[](std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
  Coeff lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
  bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }

  Poly monic() const;
  Poly derivative() const;
  Poly scaled(Coeff c) const;
  Coeff eval(Coeff at) const;
  /// Evaluation at an element of an extension of this polynomial's field.
  FieldElem eval(const FieldElem& at) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator/(const Poly& a, const Poly& b);
  friend Poly operator%(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  /// (degree, ascending coefficient codes) order used for canonical sorting.
  friend bool canonical_less(const Poly& a, const Poly& b);

 private:
  void trim();
  FieldPtr field_;
  std::vector<Coeff> c_;
};

bool canonical_less(const Poly& a, const Poly& b);

struct DivRem {
  Poly quot;
  Poly rem;
};
DivRem divrem(const Poly& a, const Poly& b);

/// Monic gcd (zero if both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);

struct Xgcd {
  Poly d, s, t;  // s*a + t*b = d, d monic
};
Xgcd xgcd(const Poly& a, const Poly& b);

Poly powmod(const Poly& base, std::uint64_t e, const Poly& mod);
/// a^{-1} mod m; throws DivisionByZero when gcd(a, m) != 1.
Poly invmod(const Poly& a, const Poly& m);

/// g*(x) = g(0)^{-1} x^deg(g) g(1/x). Throws ZeroConstantTerm.
Poly reciprocal_normalized(const Poly& g);
/// x^D h(1/x) with D the trimmed degree unless `formal_degree` is given.
Poly reciprocal_raw(const Poly& h, std::optional<std::size_t> formal_degree = std::nullopt);
bool is_self_reciprocal(const Poly& g);

/// Parses `term (('+'|'-') term)*` with terms c, c*x^k, cx^k, x^k.
Poly parse_poly(const FieldPtr& field, std::string_view text);
std::string to_string(const Poly& p, char var = 'x');

}  // namespace quatcode
