#include "quatcode/field.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <utility>

#include "quatcode/factor.hpp"
#include "quatcode/poly.hpp"

namespace quatcode {

namespace {

constexpr std::uint64_t kMaxTableCard = 1024;
constexpr std::uint64_t kMaxCard = std::uint64_t{1} << 62;

std::uint64_t checked_pow(std::uint64_t base, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (r > kMaxCard / base) throw Error(Errc::Unsupported, "field cardinality exceeds 2^62");
    r *= base;
  }
  return r;
}

std::vector<std::uint32_t> digits_of(std::uint64_t code, std::uint64_t radix, std::size_t len) {
  std::vector<std::uint32_t> d(len, 0);
  for (std::size_t i = 0; i < len; ++i) {
    d[i] = static_cast<std::uint32_t>(code % radix);
    code /= radix;
  }
  return d;
}

std::uint64_t code_from_digits(const std::vector<std::uint32_t>& d, std::uint64_t radix) {
  std::uint64_t c = 0;
  for (std::size_t i = d.size(); i-- > 0;) c = c * radix + d[i];
  return c;
}

// Product of digit vectors over F_p reduced by a monic modulus.
std::vector<std::uint32_t> mulmod_digits(const std::vector<std::uint32_t>& a,
                                         const std::vector<std::uint32_t>& b,
                                         const std::vector<std::uint32_t>& mod, std::uint32_t p) {
  const std::size_t deg = mod.size() - 1;
  std::vector<std::uint64_t> prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  for (std::size_t i = prod.size(); i-- > deg;) {
    const std::uint64_t c = prod[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j < deg; ++j) prod[i - deg + j] = (prod[i - deg + j] + (p - c) * mod[j]) % p;
    prod[i] = 0;
  }
  prod.resize(deg);
  return {prod.begin(), prod.end()};
}

}  // namespace

bool is_prime(std::uint64_t v) noexcept {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::TowerTooDeep: return "TowerTooDeep";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ContextMismatch: return "ContextMismatch";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Unsupported: return "Unsupported";
    case Errc::ZeroConstantTerm: return "ZeroConstantTerm";
    case Errc::NotSquarefree: return "NotSquarefree";
    case Errc::GcdViolation: return "GcdViolation";
    case Errc::NotADivisor: return "NotADivisor";
    case Errc::NotALeftIdeal: return "NotALeftIdeal";
    case Errc::SingularSystem: return "SingularSystem";
    case Errc::AuditFailed: return "AuditFailed";
    case Errc::NotIdempotent: return "NotIdempotent";
    case Errc::CaseMismatch: return "CaseMismatch";
    case Errc::InvalidClass: return "InvalidClass";
    case Errc::BadDivisor: return "BadDivisor";
    case Errc::LemmaMismatch: return "LemmaMismatch";
    case Errc::TheoremMismatch: return "TheoremMismatch";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

FieldPtr Field::make(std::uint32_t p, const std::vector<std::uint32_t>& modulus) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (p > (std::uint32_t{1} << 30)) throw Error(Errc::Unsupported, "characteristic too large");
  std::vector<std::uint32_t> mod(modulus);
  for (auto& c : mod) c %= p;
  while (!mod.empty() && mod.back() == 0) mod.pop_back();
  if (mod.size() < 2) throw Error(Errc::InvalidArgument, "modulus must have degree >= 1");
  if (mod.back() != 1) throw Error(Errc::InvalidArgument, "modulus must be monic");
  const std::size_t deg = mod.size() - 1;

  std::shared_ptr<Field> f(new Field);
  f->p_ = p;
  f->modulus_ = mod;
  f->card_ = checked_pow(p, deg);
  f->self_ = f;

  if (deg > 1) {
    FieldPtr fp = Field::prime(p);
    if (!is_irreducible(Poly(fp, mod)))
      throw Error(Errc::ReducibleModulus, "modulus is reducible over F_" + std::to_string(p));
    if (f->card_ > kMaxTableCard)
      throw Error(Errc::Unsupported, "non-prime base fields are limited to 1024 elements");
    const std::size_t q = f->card_;
    f->table_add_.resize(q * q);
    f->table_mul_.resize(q * q);
    f->table_neg_.resize(q);
    f->table_inv_.assign(q, 0);
    std::vector<std::vector<std::uint32_t>> digits(q);
    for (std::size_t a = 0; a < q; ++a) digits[a] = digits_of(a, p, deg);
    for (std::size_t a = 0; a < q; ++a) {
      std::vector<std::uint32_t> n(deg);
      for (std::size_t i = 0; i < deg; ++i) n[i] = (p - digits[a][i]) % p;
      f->table_neg_[a] = static_cast<Coeff>(code_from_digits(n, p));
      for (std::size_t b = 0; b < q; ++b) {
        std::vector<std::uint32_t> s(deg);
        for (std::size_t i = 0; i < deg; ++i) s[i] = (digits[a][i] + digits[b][i]) % p;
        f->table_add_[a * q + b] = static_cast<Coeff>(code_from_digits(s, p));
        f->table_mul_[a * q + b] = static_cast<Coeff>(code_from_digits(mulmod_digits(digits[a], digits[b], mod, p), p));
      }
    }
    for (std::size_t a = 1; a < q; ++a)
      for (std::size_t b = 1; b < q; ++b)
        if (f->table_mul_[a * q + b] == 1) {
          f->table_inv_[a] = static_cast<Coeff>(b);
          break;
        }
  }
  return f;
}

FieldPtr Field::prime(std::uint32_t p) { return make(p, {0, 1}); }

FieldPtr Field::galois(std::uint32_t p, std::size_t m) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (m == 0) throw Error(Errc::InvalidArgument, "extension degree must be >= 1");
  if (m == 1) return prime(p);
  const std::uint64_t count = checked_pow(p, m);
  if (count > kMaxTableCard) throw Error(Errc::Unsupported, "non-prime base fields are limited to 1024 elements");
  FieldPtr fp = prime(p);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    auto mod = digits_of(idx, p, m);
    mod.push_back(1);
    if (is_irreducible(Poly(fp, mod))) return make(p, mod);
  }
  throw Error(Errc::ReducibleModulus, "no irreducible modulus found");
}

FieldPtr Field::extend(const FieldPtr& base, const Poly& f) {
  if (base->is_extension()) throw Error(Errc::TowerTooDeep, "extensions of extensions are not supported");
  if (f.field() != base) throw Error(Errc::ContextMismatch, "modulus is not over the base field");
  if (f.degree() < 1) throw Error(Errc::InvalidArgument, "modulus must have degree >= 1");
  if (!f.is_monic()) throw Error(Errc::InvalidArgument, "modulus must be monic");
  if (f.degree() > 1 && !is_irreducible(f)) throw Error(Errc::ReducibleModulus, "modulus is reducible over the base");

  std::shared_ptr<Field> e(new Field);
  e->p_ = base->p_;
  e->modulus_ = f.coeffs();
  e->card_ = checked_pow(base->card_, static_cast<std::size_t>(f.degree()));
  e->base_ = base;
  e->self_ = e;
  return e;
}

Coeff Field::inv(Coeff a) const {
  if (a == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
  if (!table_inv_.empty()) return table_inv_[a];
  // Extended Euclid over integers.
  std::int64_t t = 0, nt = 1, r = p_, nr = a;
  while (nr != 0) {
    const std::int64_t qq = r / nr;
    t = std::exchange(nt, t - qq * nt);
    r = std::exchange(nr, r - qq * nr);
  }
  if (t < 0) t += p_;
  return static_cast<Coeff>(t);
}

Coeff Field::pow(Coeff a, std::uint64_t e) const noexcept {
  Coeff r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Coeff Field::from_int(std::int64_t v) const noexcept {
  std::int64_t m = v % static_cast<std::int64_t>(p_);
  if (m < 0) m += p_;
  return static_cast<Coeff>(m);  // prime-subfield codes coincide with residues
}

FieldElem Field::zero() const { return FieldElem(self(), std::vector<std::uint32_t>(degree(), 0)); }

FieldElem Field::one() const {
  std::vector<std::uint32_t> c(degree(), 0);
  c[0] = 1;
  return FieldElem(self(), std::move(c));
}

FieldElem Field::generator() const {
  std::vector<std::uint32_t> c(degree(), 0);
  if (degree() > 1) {
    c[1] = 1;
  } else if (base_) {
    c[0] = base_->neg(modulus_[0]);
  } else {
    c[0] = (p_ - modulus_[0]) % p_;
  }
  return FieldElem(self(), std::move(c));
}

FieldElem Field::elem(Coeff code) const {
  if (base_) {
    std::vector<std::uint32_t> c(degree(), 0);
    c[0] = code;
    return FieldElem(self(), std::move(c));
  }
  return FieldElem(self(), digits_of(code, p_, degree()));
}

Coeff Field::code_of(const FieldElem& e) const {
  if (e.field().get() != this) throw Error(Errc::ContextMismatch, "element from another field");
  if (base_) {
    for (std::size_t i = 1; i < e.coeffs().size(); ++i)
      if (e.coeffs()[i] != 0) throw Error(Errc::Unsupported, "element is not in the base field");
    return e.coeffs()[0];
  }
  return static_cast<Coeff>(code_from_digits(e.coeffs(), p_));
}

std::uint64_t Field::index_of(const FieldElem& e) const {
  if (e.field().get() != this) throw Error(Errc::ContextMismatch, "element from another field");
  return code_from_digits(e.coeffs(), base_ ? base_->card_ : p_);
}

FieldElem Field::from_index(std::uint64_t idx) const {
  return FieldElem(self(), digits_of(idx, base_ ? base_->card_ : p_, degree()));
}

FieldElem::FieldElem(FieldPtr field, std::vector<std::uint32_t> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  const Field& f = *field_;
  const std::size_t deg = f.degree();
  if (f.base_) {
    const Field& b = *f.base_;
    for (auto& c : coeffs_)
      if (c >= b.card_) throw Error(Errc::InvalidArgument, "coefficient out of range");
    // Reduce by the monic modulus when longer than the degree.
    for (std::size_t i = coeffs_.size(); i-- > deg;) {
      const Coeff c = coeffs_[i];
      if (c == 0) continue;
      for (std::size_t j = 0; j < deg; ++j)
        coeffs_[i - deg + j] = b.sub(coeffs_[i - deg + j], b.mul(c, f.modulus_[j]));
    }
  } else {
    for (auto& c : coeffs_) c %= f.p_;
    for (std::size_t i = coeffs_.size(); i-- > deg;) {
      const std::uint64_t c = coeffs_[i];
      if (c == 0) continue;
      for (std::size_t j = 0; j < deg; ++j)
        coeffs_[i - deg + j] = static_cast<std::uint32_t>((coeffs_[i - deg + j] + (f.p_ - c) * f.modulus_[j]) % f.p_);
    }
  }
  coeffs_.resize(deg, 0);
}

bool FieldElem::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](auto c) { return c == 0; });
}

bool FieldElem::is_one() const noexcept {
  if (coeffs_.empty() || coeffs_[0] != 1) return false;
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](auto c) { return c == 0; });
}

namespace {

void same_field(const FieldElem& a, const FieldElem& b) {
  if (a.field() != b.field()) throw Error(Errc::ContextMismatch, "elements from different fields");
}

}  // namespace

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  same_field(a, b);
  const Field& f = *a.field_;
  std::vector<std::uint32_t> c(a.coeffs_.size());
  if (f.base_) {
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.base_->add(a.coeffs_[i], b.coeffs_[i]);
  } else {
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a.coeffs_[i] + b.coeffs_[i]) % f.p_;
  }
  return FieldElem(a.field_, std::move(c));
}

FieldElem operator-(const FieldElem& a) {
  const Field& f = *a.field_;
  std::vector<std::uint32_t> c(a.coeffs_.size());
  if (f.base_) {
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.base_->neg(a.coeffs_[i]);
  } else {
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (f.p_ - a.coeffs_[i]) % f.p_;
  }
  return FieldElem(a.field_, std::move(c));
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  same_field(a, b);
  const Field& f = *a.field_;
  if (!f.base_) {
    const Coeff r = f.mul(f.code_of(a), f.code_of(b));
    return f.elem(r);
  }
  const Field& base = *f.base_;
  const std::size_t n = a.coeffs_.size();
  std::vector<std::uint32_t> prod(2 * n - 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) prod[i + j] = base.add(prod[i + j], base.mul(a.coeffs_[i], b.coeffs_[j]));
  }
  return FieldElem(a.field_, std::move(prod));
}

bool operator==(const FieldElem& a, const FieldElem& b) {
  same_field(a, b);
  return a.coeffs_ == b.coeffs_;
}

FieldElem FieldElem::inv() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  const Field& f = *field_;
  if (!f.base_) return f.elem(f.inv(f.code_of(*this)));
  Poly a(f.base_, coeffs_);
  Poly m(f.base_, f.modulus_);
  Poly s = invmod(a, m);
  return FieldElem(field_, s.coeffs());
}

FieldElem FieldElem::pow(std::uint64_t e) const {
  FieldElem r = field_->one();
  FieldElem b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

std::optional<FieldElem> sqrt_minus_one(const FieldPtr& field) {
  const std::uint64_t q = field->cardinality();
  if (q % 2 == 0) return field->one();
  if (q % 4 != 1) return std::nullopt;
  const FieldElem minus_one = -field->one();
  for (std::uint64_t idx = 2; idx < q; ++idx) {
    const FieldElem b = field->from_index(idx).pow((q - 1) / 4);
    if (b * b == minus_one) {
      const FieldElem nb = -b;
      return field->index_of(b) < field->index_of(nb) ? b : nb;
    }
  }
  return std::nullopt;  // unreachable for q = 1 (mod 4)
}

std::string to_string(const FieldElem& e) {
  const Field& f = *e.field();
  if (!f.is_extension()) return std::to_string(f.code_of(e));
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = e.coeffs().size(); i-- > 0;) {
    const auto c = e.coeffs()[i];
    if (c == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << c;
    } else {
      if (c != 1) os << c << '*';
      os << 'a';
      if (i > 1) os << '^' << i;
    }
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace quatcode
