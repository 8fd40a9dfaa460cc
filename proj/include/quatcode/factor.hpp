#pragma once

// Factorization of squarefree polynomials over F_q and the reciprocal
// classification of the factors of x^n - 1 and x^n + 1.

#include <cstdint>
#include <optional>
#include <vector>

#include "quatcode/field.hpp"
#include "quatcode/poly.hpp"

namespace quatcode {

bool is_squarefree(const Poly& f);
/// Distinct-degree test: gcd(x^{q^i} - x, f) = 1 for 1 <= i <= deg/2.
bool is_irreducible(const Poly& f);

/// Monic irreducible factors of a squarefree polynomial, sorted canonically.
/// Distinct-degree then equal-degree splitting with a seeded generator.
std::vector<Poly> factor_squarefree(const Poly& f, std::uint64_t seed = 0x5eed);

/// One irreducible factor with its splitting field, or a reciprocal pair
/// (poly, partner = poly*) sharing the splitting field of `poly`.
struct ReciprocalFactor {
  Poly poly;
  std::optional<Poly> partner;
  FieldPtr splitting;  // base[w]/(poly)
  FieldElem root;      // class of w
  FieldElem root_inv;  // root of the partner, or root^{-1} for self-reciprocal factors

  bool self_reciprocal() const noexcept { return !partner.has_value(); }
  std::size_t degree() const noexcept { return static_cast<std::size_t>(poly.degree()); }
};

/// Self-reciprocal factors first (canonical order), then pairs ordered by
/// their unstarred member. Within a pair the canonically smaller member is
/// the unstarred one.
std::vector<ReciprocalFactor> classify_reciprocal(std::vector<Poly> irreducibles);

/// Factors of x^n - 1 (f-side) and x^n + 1 (g-side) in the fixed order:
/// f_1 = x-1, f_2 = x+1 for even n, g_1 = x+1 for odd n, remaining
/// self-reciprocal factors, then pairs.
class FactorTable {
 public:
  static FactorTable build(const FieldPtr& field, unsigned n);

  const FieldPtr& field() const noexcept { return field_; }
  unsigned n() const noexcept { return n_; }
  const std::vector<ReciprocalFactor>& f_side() const noexcept { return f_; }
  const std::vector<ReciprocalFactor>& g_side() const noexcept { return g_; }

  std::size_t r() const noexcept { return r_; }
  std::size_t s() const noexcept { return f_.size() - r_; }
  std::size_t t() const noexcept { return t_; }
  std::size_t k() const noexcept { return g_.size() - t_; }
  unsigned delta() const noexcept { return n_ % 2 == 1 ? 1 : 2; }
  unsigned mu() const noexcept { return n_ % 2 == 1 ? 1 : 0; }

 private:
  FieldPtr field_;
  unsigned n_ = 0;
  std::vector<ReciprocalFactor> f_, g_;
  std::size_t r_ = 0, t_ = 0;
};

/// Throws GcdViolation unless gcd(4n, q) = 1.
void require_coprime(const FieldPtr& field, unsigned n);

}  // namespace quatcode
