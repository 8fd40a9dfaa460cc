#include "quatcode/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace quatcode {

namespace {

void same_field(const Poly& a, const Poly& b) {
  if (a.field() != b.field()) throw Error(Errc::ContextMismatch, "polynomials over different fields");
}

}  // namespace

Poly::Poly(FieldPtr field) : field_(std::move(field)) {
  if (!field_) throw Error(Errc::InvalidArgument, "null field");
  if (field_->is_extension()) throw Error(Errc::Unsupported, "polynomials over extension fields");
}

Poly::Poly(FieldPtr field, std::vector<Coeff> coeffs) : Poly(std::move(field)) {
  c_ = std::move(coeffs);
  for (auto c : c_)
    if (c >= field_->code_count()) throw Error(Errc::InvalidArgument, "coefficient code out of range");
  trim();
}

Poly Poly::constant(const FieldPtr& field, Coeff c) { return Poly(field, {c}); }

Poly Poly::monomial(const FieldPtr& field, std::size_t degree, Coeff c) {
  std::vector<Coeff> v(degree + 1, 0);
  v[degree] = c;
  return Poly(field, std::move(v));
}

Poly Poly::x_pow_plus(const FieldPtr& field, std::size_t m, int sign) {
  std::vector<Coeff> v(m + 1, 0);
  v[m] = 1;
  v[0] = field->add(v[0], field->from_int(sign));
  return Poly(field, std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_->inv(lead()));
}

Poly Poly::scaled(Coeff s) const {
  std::vector<Coeff> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = field_->mul(c_[i], s);
  return Poly(field_, std::move(v));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(field_);
  std::vector<Coeff> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = field_->mul(c_[i], field_->from_int(static_cast<std::int64_t>(i)));
  return Poly(field_, std::move(v));
}

Coeff Poly::eval(Coeff at) const {
  Coeff r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = field_->add(field_->mul(r, at), c_[i]);
  return r;
}

FieldElem Poly::eval(const FieldElem& at) const {
  const FieldPtr& ext = at.field();
  if (ext == field_) {
    return field_->elem(eval(field_->code_of(at)));
  }
  if (ext->base() != field_) throw Error(Errc::ContextMismatch, "evaluation point is not over this field");
  FieldElem r = ext->zero();
  for (std::size_t i = c_.size(); i-- > 0;) r = r * at + ext->elem(c_[i]);
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  same_field(a, b);
  const Field& f = *a.field_;
  std::vector<Coeff> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.add(a[i], b[i]);
  return Poly(a.field_, std::move(v));
}

Poly operator-(const Poly& a) {
  const Field& f = *a.field_;
  std::vector<Coeff> v(a.c_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.neg(a.c_[i]);
  return Poly(a.field_, std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
  same_field(a, b);
  const Field& f = *a.field_;
  std::vector<Coeff> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.sub(a[i], b[i]);
  return Poly(a.field_, std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
  same_field(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(a.field_);
  const Field& f = *a.field_;
  std::vector<Coeff> v(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = f.add(v[i + j], f.mul(a.c_[i], b.c_[j]));
  }
  return Poly(a.field_, std::move(v));
}

DivRem divrem(const Poly& a, const Poly& b) {
  same_field(a, b);
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
  const Field& f = *a.field();
  const FieldPtr& fp = a.field();
  if (a.degree() < b.degree()) return {Poly(fp), a};
  std::vector<Coeff> r = a.coeffs();
  const auto& d = b.coeffs();
  const std::size_t db = d.size() - 1;
  const Coeff lead_inv = f.inv(d.back());
  std::vector<Coeff> q(r.size() - db, 0);
  for (std::size_t i = r.size(); i-- > db;) {
    if (r[i] == 0) continue;
    const Coeff c = f.mul(r[i], lead_inv);
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = f.sub(r[i - db + j], f.mul(c, d[j]));
  }
  r.resize(db);
  return {Poly(fp, std::move(q)), Poly(fp, std::move(r))};
}

Poly operator/(const Poly& a, const Poly& b) { return divrem(a, b).quot; }
Poly operator%(const Poly& a, const Poly& b) { return divrem(a, b).rem; }

bool canonical_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.c_ < b.c_;
}

Poly gcd(const Poly& a, const Poly& b) {
  same_field(a, b);
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Xgcd xgcd(const Poly& a, const Poly& b) {
  same_field(a, b);
  const FieldPtr& f = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(f, 1), s1(f);
  Poly t0(f), t1 = Poly::constant(f, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    r0 = std::exchange(r1, std::move(r));
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Coeff li = f->inv(r0.lead());
  return {r0.scaled(li), s0.scaled(li), t0.scaled(li)};
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& mod) {
  Poly r = Poly::constant(base.field(), 1) % mod;
  Poly b = base % mod;
  while (e) {
    if (e & 1) r = (r * b) % mod;
    e >>= 1;
    if (e) b = (b * b) % mod;
  }
  return r;
}

Poly invmod(const Poly& a, const Poly& m) {
  auto g = xgcd(a % m, m);
  if (!g.d.is_one()) throw Error(Errc::DivisionByZero, "polynomial not invertible modulo m");
  return g.s % m;
}

Poly reciprocal_normalized(const Poly& g) {
  if (g.is_zero() || g[0] == 0) throw Error(Errc::ZeroConstantTerm, "reciprocal needs g(0) != 0");
  std::vector<Coeff> v(g.coeffs().rbegin(), g.coeffs().rend());
  return Poly(g.field(), std::move(v)).scaled(g.field()->inv(g[0]));
}

Poly reciprocal_raw(const Poly& h, std::optional<std::size_t> formal_degree) {
  const std::size_t deg = formal_degree.value_or(h.is_zero() ? 0 : static_cast<std::size_t>(h.degree()));
  if (!h.is_zero() && static_cast<std::size_t>(h.degree()) > deg)
    throw Error(Errc::InvalidArgument, "formal degree below actual degree");
  std::vector<Coeff> v(deg + 1, 0);
  for (std::size_t i = 0; i <= deg; ++i) v[deg - i] = h[i];
  return Poly(h.field(), std::move(v));
}

bool is_self_reciprocal(const Poly& g) { return reciprocal_normalized(g) == g; }

// ---------------------------------------------------------------------------
// Text form.

namespace {

class PolyParser {
 public:
  PolyParser(const FieldPtr& f, std::string_view s) : f_(f) {
    for (char c : s)
      if (!std::isspace(static_cast<unsigned char>(c))) text_.push_back(c);
  }

  Poly parse() {
    if (text_.empty()) fail("empty expression");
    std::vector<Coeff> acc;
    bool negate = false;
    if (peek() == '+' || peek() == '-') negate = (get() == '-');
    for (;;) {
      auto [deg, c] = term();
      if (negate) c = f_->neg(c);
      if (acc.size() <= deg) acc.resize(deg + 1, 0);
      acc[deg] = f_->add(acc[deg], c);
      if (pos_ == text_.size()) break;
      const char op = get();
      if (op != '+' && op != '-') fail(std::string("unexpected '") + op + "'");
      negate = (op == '-');
    }
    return Poly(f_, std::move(acc));
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char get() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(Errc::ParseError, why + " at offset " + std::to_string(pos_) + " in \"" + text_ + "\"");
  }

  std::uint64_t uint_mod(std::uint64_t mod) {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digits");
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) v = (v * 10 + (get() - '0')) % mod;
    return v;
  }

  std::size_t exponent() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
    std::size_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::size_t>(get() - '0');
      if (v > 1'000'000) fail("exponent too large");
    }
    return v;
  }

  std::pair<std::size_t, Coeff> term() {
    Coeff c = 1;
    bool have_coeff = false;
    if (peek() == '{') {
      get();
      const std::uint64_t code = uint_mod(~std::uint64_t{0});
      if (code >= f_->code_count()) fail("element code out of range");
      if (get() != '}') fail("expected '}'");
      c = static_cast<Coeff>(code);
      have_coeff = true;
    } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
      c = f_->from_int(static_cast<std::int64_t>(uint_mod(f_->characteristic())));
      have_coeff = true;
    }
    if (have_coeff && peek() == '*') {
      get();
      if (peek() != 'x') fail("expected 'x' after '*'");
    }
    if (peek() == 'x') {
      get();
      std::size_t deg = 1;
      if (peek() == '^') {
        get();
        deg = exponent();
      }
      return {deg, c};
    }
    if (!have_coeff) fail("expected a term");
    return {0, c};
  }

  FieldPtr f_;
  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const FieldPtr& field, std::string_view text) { return PolyParser(field, text).parse(); }

std::string to_string(const Poly& p, char var) {
  if (p.is_zero()) return "0";
  const Field& f = *p.field();
  const std::uint32_t ch = f.characteristic();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    Coeff c = p.coeffs()[i];
    if (c == 0) continue;
    bool neg = false;
    std::string mag;
    if (c < ch) {
      if (c > ch / 2) {
        neg = true;
        c = ch - c;
      }
      mag = std::to_string(c);
    } else {
      mag = "{" + std::to_string(c) + "}";
    }
    if (neg) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    first = false;
    const bool unit = (mag == "1");
    if (i == 0) {
      os << mag;
      continue;
    }
    if (!unit) os << mag << '*';
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

}  // namespace quatcode
