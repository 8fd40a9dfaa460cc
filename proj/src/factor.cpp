#include "quatcode/factor.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace quatcode {

namespace {

Poly x_poly(const FieldPtr& f) { return Poly::monomial(f, 1); }

Poly random_poly(const FieldPtr& f, std::size_t below_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, f->code_count() - 1);
  std::vector<Coeff> c(below_degree);
  for (auto& v : c) v = static_cast<Coeff>(dist(rng));
  return Poly(f, std::move(c));
}

// Splitting polynomial for equal-degree factorization: a^{(q^d-1)/2} - 1 for
// odd q, the absolute trace of a for even q.
Poly splitter(const Poly& a, std::size_t d, const Poly& g) {
  const FieldPtr& f = g.field();
  const std::uint64_t q = f->code_count();
  if (q % 2 == 1) {
    Poly frob = a % g;
    Poly norm = frob;
    for (std::size_t i = 1; i < d; ++i) {
      frob = powmod(frob, q, g);
      norm = (norm * frob) % g;
    }
    return powmod(norm, (q - 1) / 2, g) - Poly::constant(f, 1);
  }
  std::size_t m = 0;
  for (std::uint64_t v = q; v > 1; v >>= 1) ++m;
  Poly term = a % g;
  Poly trace = term;
  for (std::size_t i = 1; i < m * d; ++i) {
    term = (term * term) % g;
    trace = trace + term;
  }
  return trace;
}

void equal_degree(const Poly& g, std::size_t d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (static_cast<std::size_t>(g.degree()) == d) {
    out.push_back(g);
    return;
  }
  for (;;) {
    Poly a = random_poly(g.field(), static_cast<std::size_t>(g.degree()), rng);
    if (a.degree() < 1) continue;
    Poly h = gcd(splitter(a, d, g), g);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      equal_degree(h, d, rng, out);
      equal_degree(g / h, d, rng, out);
      return;
    }
  }
}

}  // namespace

bool is_squarefree(const Poly& f) {
  if (f.degree() < 1) return true;
  return gcd(f, f.derivative()).is_one();
}

bool is_irreducible(const Poly& f) {
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  const Poly m = f.monic();
  const Poly x = x_poly(f.field());
  const std::uint64_t q = f.field()->code_count();
  Poly h = x;
  for (int i = 1; 2 * i <= m.degree(); ++i) {
    h = powmod(h, q, m);
    if (!gcd(h - x, m).is_one()) return false;
  }
  return true;
}

std::vector<Poly> factor_squarefree(const Poly& f, std::uint64_t seed) {
  if (f.is_zero()) throw Error(Errc::InvalidArgument, "cannot factor zero");
  if (!is_squarefree(f)) throw Error(Errc::NotSquarefree, "input has a repeated factor");
  std::vector<Poly> out;
  std::mt19937_64 rng(seed);
  const FieldPtr& field = f.field();
  const std::uint64_t q = field->code_count();
  const Poly x = x_poly(field);

  Poly rest = f.monic();
  Poly h = x % rest;
  std::size_t d = 0;
  while (rest.degree() >= 2 * static_cast<int>(d + 1)) {
    ++d;
    h = powmod(h, q, rest);
    Poly g = gcd(h - x, rest);
    if (!g.is_one()) {
      equal_degree(g, d, rng, out);
      rest = rest / g;
      h = h % rest;
    }
  }
  if (rest.degree() > 0) out.push_back(rest);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<ReciprocalFactor> classify_reciprocal(std::vector<Poly> irreducibles) {
  std::sort(irreducibles.begin(), irreducibles.end(), canonical_less);
  std::vector<ReciprocalFactor> selfrec, pairs;
  std::vector<bool> used(irreducibles.size(), false);
  for (std::size_t i = 0; i < irreducibles.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    const Poly& p = irreducibles[i];
    const Poly star = reciprocal_normalized(p);
    ReciprocalFactor rf;
    rf.poly = p;
    if (!(star == p)) {
      auto it = std::find(irreducibles.begin(), irreducibles.end(), star);
      if (it == irreducibles.end()) throw Error(Errc::InvalidArgument, "factor list is not closed under reciprocation");
      used[static_cast<std::size_t>(it - irreducibles.begin())] = true;
      // p precedes its partner in canonical order, so p is the unstarred member.
      rf.partner = star;
    }
    rf.splitting = Field::extend(p.field(), p);
    rf.root = rf.splitting->generator();
    rf.root_inv = rf.root.inv();
    (rf.self_reciprocal() ? selfrec : pairs).push_back(std::move(rf));
  }
  selfrec.insert(selfrec.end(), std::make_move_iterator(pairs.begin()), std::make_move_iterator(pairs.end()));
  return selfrec;
}

void require_coprime(const FieldPtr& field, unsigned n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "n must be positive");
  const std::uint64_t q = field->cardinality();
  if (std::gcd(std::uint64_t{4} * n, q) != 1)
    throw Error(Errc::GcdViolation, "gcd(4n, q) != 1 for q = " + std::to_string(q) + ", n = " + std::to_string(n));
}

namespace {

// Moves the factor equal to `target` to position `slot`.
void pin(std::vector<ReciprocalFactor>& v, const Poly& target, std::size_t slot) {
  auto it = std::find_if(v.begin(), v.end(), [&](const ReciprocalFactor& rf) { return rf.poly == target; });
  if (it == v.end()) throw Error(Errc::InvalidArgument, "expected linear factor missing");
  std::rotate(v.begin() + static_cast<std::ptrdiff_t>(slot), it, it + 1);
}

}  // namespace

FactorTable FactorTable::build(const FieldPtr& field, unsigned n) {
  require_coprime(field, n);
  FactorTable t;
  t.field_ = field;
  t.n_ = n;
  t.f_ = classify_reciprocal(factor_squarefree(Poly::x_pow_plus(field, n, -1)));
  t.g_ = classify_reciprocal(factor_squarefree(Poly::x_pow_plus(field, n, +1)));

  const Poly x_minus_1 = Poly::x_pow_plus(field, 1, -1);
  const Poly x_plus_1 = Poly::x_pow_plus(field, 1, +1);
  pin(t.f_, x_minus_1, 0);
  if (n % 2 == 0) {
    pin(t.f_, x_plus_1, 1);
  } else {
    pin(t.g_, x_plus_1, 0);
  }
  auto count_selfrec = [](const std::vector<ReciprocalFactor>& v) {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](const auto& rf) { return rf.self_reciprocal(); }));
  };
  t.r_ = count_selfrec(t.f_);
  t.t_ = count_selfrec(t.g_);
  return t;
}

}  // namespace quatcode
