#include "quatcode/cyclic.hpp"

#include <algorithm>

#include "quatcode/factor.hpp"

namespace quatcode {

namespace {

void same_ring(const CyclicElem& a, const CyclicElem& b) {
  if (a.field() != b.field() || a.modulus_degree() != b.modulus_degree())
    throw Error(Errc::ContextMismatch, "cyclic elements from different rings");
}

}  // namespace

CyclicElem::CyclicElem(FieldPtr field, std::size_t m) : field_(std::move(field)), c_(m, 0) {
  if (m == 0) throw Error(Errc::InvalidArgument, "cyclic modulus degree must be positive");
}

CyclicElem::CyclicElem(FieldPtr field, std::size_t m, std::vector<Coeff> coeffs) : CyclicElem(std::move(field), m) {
  for (std::size_t i = 0; i < coeffs.size(); ++i) c_[i % m] = field_->add(c_[i % m], coeffs[i]);
}

CyclicElem CyclicElem::from_poly(const Poly& p, std::size_t m) { return CyclicElem(p.field(), m, p.coeffs()); }

CyclicElem CyclicElem::one(const FieldPtr& field, std::size_t m) { return x_pow(field, m, 0); }

CyclicElem CyclicElem::x_pow(const FieldPtr& field, std::size_t m, std::size_t k) {
  CyclicElem e(field, m);
  e.c_[k % m] = 1;
  return e;
}

bool CyclicElem::is_zero() const noexcept {
  return std::all_of(c_.begin(), c_.end(), [](Coeff c) { return c == 0; });
}

CyclicElem CyclicElem::scaled(Coeff s) const {
  CyclicElem r(field_, c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = field_->mul(c_[i], s);
  return r;
}

CyclicElem CyclicElem::conj() const {
  const std::size_t m = c_.size();
  CyclicElem r(field_, m);
  for (std::size_t i = 0; i < m; ++i) r.c_[(m - i) % m] = c_[i];
  return r;
}

CyclicElem CyclicElem::shifted(std::size_t k) const {
  const std::size_t m = c_.size();
  CyclicElem r(field_, m);
  for (std::size_t i = 0; i < m; ++i) r.c_[(i + k) % m] = c_[i];
  return r;
}

CyclicElem operator+(const CyclicElem& a, const CyclicElem& b) {
  same_ring(a, b);
  CyclicElem r(a.field_, a.c_.size());
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.field_->add(a.c_[i], b.c_[i]);
  return r;
}

CyclicElem operator-(const CyclicElem& a) {
  CyclicElem r(a.field_, a.c_.size());
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.field_->neg(a.c_[i]);
  return r;
}

CyclicElem operator-(const CyclicElem& a, const CyclicElem& b) {
  same_ring(a, b);
  CyclicElem r(a.field_, a.c_.size());
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.field_->sub(a.c_[i], b.c_[i]);
  return r;
}

CyclicElem operator*(const CyclicElem& a, const CyclicElem& b) {
  same_ring(a, b);
  const Field& f = *a.field_;
  const std::size_t m = a.c_.size();
  CyclicElem r(a.field_, m);
  if (f.is_prime_field() && f.characteristic() < (1u << 16)) {
    // Products stay below 2^32, so m of them fit in 64 bits.
    std::vector<std::uint64_t> acc(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      const std::uint64_t ai = a.c_[i];
      if (ai == 0) continue;
      for (std::size_t j = 0, k = i; j < m; ++j, k = (k + 1 == m ? 0 : k + 1)) acc[k] += ai * b.c_[j];
    }
    const std::uint64_t p = f.characteristic();
    for (std::size_t k = 0; k < m; ++k) r.c_[k] = static_cast<Coeff>(acc[k] % p);
    return r;
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t k = (i + j) % m;
      r.c_[k] = f.add(r.c_[k], f.mul(a.c_[i], b.c_[j]));
    }
  }
  return r;
}

void require_divisor(const Poly& g, std::size_t m) {
  if (!g.is_monic()) throw Error(Errc::NotADivisor, "divisor must be monic");
  const Poly xm = Poly::x_pow_plus(g.field(), m, -1);
  if (!(xm % g).is_zero()) throw Error(Errc::NotADivisor, to_string(g) + " does not divide x^" + std::to_string(m) + "-1");
}

CyclicElem idempotent_oracle(const Poly& f, std::size_t m) {
  require_divisor(f, m);
  const Poly xm = Poly::x_pow_plus(f.field(), m, -1);
  const Poly cof = xm / f;
  const Poly a = invmod(cof % f, f);
  return CyclicElem::from_poly(a * cof, m);
}

CyclicElem idempotent_eq1(const Poly& g, std::size_t m, StarConvention star) {
  require_divisor(g, m);
  const FieldPtr& field = g.field();
  const Coeff m_code = field->from_int(static_cast<std::int64_t>(m));
  if (m_code == 0) throw Error(Errc::InvalidArgument, "m is not invertible in the field");
  if (g.degree() == 0) return CyclicElem(field, m);

  const std::size_t d = static_cast<std::size_t>(g.degree());
  Poly outer(field);
  if (star == StarConvention::Raw) {
    outer = reciprocal_raw(reciprocal_raw(g).derivative(), d - 1);
  } else {
    outer = reciprocal_normalized(reciprocal_normalized(g).derivative());
  }
  const Poly cof = Poly::x_pow_plus(field, m, -1) / g;
  const Coeff scale = field->neg(field->inv(m_code));
  return CyclicElem::from_poly(outer * cof, m).scaled(scale);
}

CyclicElem idempotent_divisor(const Poly& g, std::size_t m) {
  require_divisor(g, m);
  CyclicElem sum(g.field(), m);
  if (g.degree() == 0) return sum;
  for (const Poly& p : factor_squarefree(g)) sum += idempotent_oracle(p, m);
  return sum;
}

}  // namespace quatcode
