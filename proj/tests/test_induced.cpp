#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "quatcode/induced.hpp"

using namespace quatcode;

namespace {

Poly P(const FieldPtr& f, const char* s) { return parse_poly(f, s); }

Errc thrown(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::ParseError;
}

/// h(x^l) as a polynomial, for divisibility by long division.
Poly pullback(const Poly& h, unsigned ell) {
  std::vector<Coeff> c(h.coeffs().size() * ell, 0);
  for (std::size_t i = 0; i < h.coeffs().size(); ++i) c[i * ell] = h.coeffs()[i];
  return Poly(h.field(), c);
}

QElem eps_sum(const FieldPtr& f, unsigned n, std::initializer_list<const char*> factors) {
  CyclicElem acc(f, 2 * n);
  for (const char* s : factors) acc += idempotent_oracle(P(f, s), 2 * n);
  return QElem::from_cyclic(acc);
}

}  // namespace

TEST_CASE("omega_embed") {
  const FieldPtr f = Field::prime(5);
  CHECK(omega_embed(CyclicElem::one(f, 3), 2, 3) == QElem::one(f, 3));
  CHECK(omega_embed(CyclicElem::x_pow(f, 3, 1), 2, 3) == QElem::from_cyclic(CyclicElem::x_pow(f, 6, 2)));
  CHECK(thrown([&] { (void)omega_embed(CyclicElem::one(f, 3), 4, 3); }) == Errc::BadDivisor);

  std::mt19937_64 rng(61);
  for (unsigned n : {3u, 4u, 6u}) {
    for (unsigned ell = 1; ell <= 2 * n; ++ell) {
      if ((2 * n) % ell != 0) continue;
      const std::size_t m = 2 * n / ell;
      for (int i = 0; i < 20; ++i) {
        std::vector<Coeff> a(m), b(m);
        for (auto& x : a) x = static_cast<Coeff>(rng() % 5);
        for (auto& x : b) x = static_cast<Coeff>(rng() % 5);
        const CyclicElem wa(f, m, a), wb(f, m, b);
        REQUIRE(omega_embed(wa * wb, ell, n) == omega_embed(wa, ell, n) * omega_embed(wb, ell, n));
        REQUIRE(omega_embed(wa + wb, ell, n) == omega_embed(wa, ell, n) + omega_embed(wb, ell, n));
      }
    }
  }
}

TEST_CASE("divides_pullback examples") {
  const FieldPtr f = Field::prime(5);
  CHECK(divides_pullback(P(f, "x-1"), P(f, "x-1"), 2));
  CHECK_FALSE(divides_pullback(P(f, "x^2+x+1"), P(f, "x-1"), 2));
  CHECK(divides_pullback(P(f, "x+1"), P(f, "x-1"), 2));
}

TEST_CASE("divides_pullback agrees with long division") {
  for (std::uint32_t p : {3u, 5u, 7u, 13u}) {
    const FieldPtr f = Field::prime(p);
    for (unsigned n = 2; n <= 8; ++n) {
      if ((4 * n) % p == 0) continue;
      const auto big = factor_squarefree(Poly::x_pow_plus(f, 2 * n, -1));
      for (unsigned ell = 1; ell <= 2 * n; ++ell) {
        if ((2 * n) % ell != 0) continue;
        const auto small = factor_squarefree(Poly::x_pow_plus(f, 2 * n / ell, -1));
        for (const Poly& h : small)
          for (const Poly& q : big) REQUIRE(divides_pullback(q, h, ell) == (pullback(h, ell) % q).is_zero());
      }
    }
  }
}

TEST_CASE("lemma identities") {
  const FieldPtr f = Field::prime(5);
  const unsigned n = 3;
  const Wedderburn w(FactorTable::build(f, n));

  const SmallRing s1 = SmallRing::build(f, 1);
  CHECK(lemma_idem_pullback(s1, Side::F, 1, false, 2 * n, w) == QElem::one(f, n));

  const SmallRing s3 = SmallRing::build(f, 3);
  CHECK(lemma_idem_pullback(s3, Side::F, 1, false, 2, w) == eps_sum(f, n, {"x-1", "x+1"}));
  CHECK(lemma_idem_pullback(s3, Side::F, 2, false, 2, w) == eps_sum(f, n, {"x^2+x+1", "x^2-x+1"}));

  // every factor of every small ring, every cell
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    const FieldPtr g = Field::prime(p);
    for (unsigned m = 2; m <= 9; ++m) {
      if ((4 * m) % p == 0) continue;
      const Wedderburn wm(FactorTable::build(g, m));
      for (unsigned ell = 1; ell <= 2 * m; ++ell) {
        if ((2 * m) % ell != 0) continue;
        const SmallRing sr = SmallRing::build(g, 2 * m / ell);
        for (const Side side : {Side::F, Side::G}) {
          const auto& list = side == Side::F ? sr.f_side : sr.g_side;
          for (std::size_t i = 0; i < list.size(); ++i) {
            for (bool starred : {false, true}) {
              if (starred && list[i].self_reciprocal()) continue;
              const Poly& fac = starred ? *list[i].partner : list[i].poly;
              const QElem got = lemma_idem_pullback(sr, side, i + 1, starred, ell, wm);
              REQUIRE(got == omega_embed(idempotent_oracle(fac, 2 * m / ell), ell, m));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("induced sets and codes in F_5[Q_12]") {
  const FieldPtr f = Field::prime(5);
  const unsigned n = 3;
  const Wedderburn w(FactorTable::build(f, n));

  const InducedSpec spec{2, P(f, "x-1")};
  const DivisibilitySets sets = induced_sets(spec, w);
  CHECK(sets.s[0] == std::vector<std::size_t>{2});
  CHECK(sets.s[3] == std::vector<std::size_t>{2});
  for (std::size_t i : {1u, 2u, 4u, 5u}) CHECK(sets.s[i].empty());

  const InducedCode code = induced_code(spec, w);
  CHECK(code.decomposition.classes ==
        std::vector<BlockClass>{BlockClass::zero(), BlockClass::full(), BlockClass::zero(), BlockClass::full()});
  CHECK(code.decomposition.dimension == 8);
  CHECK(code.closure_rank == 8);
  CHECK_FALSE(code.convention_flip);

  const InducedCode unit = induced_code({2, P(f, "1")}, w);
  CHECK(unit.decomposition.dimension == 12);
  CHECK(unit.idempotent == QElem::one(f, n));

  const InducedCode zero = induced_code({3, P(f, "x^2-1")}, w);
  CHECK(zero.decomposition.dimension == 0);
  CHECK(zero.idempotent.is_zero());
  CHECK(zero.sets.s[0].empty());
  CHECK(zero.sets.s[3].empty());

  CHECK(thrown([&] { validate({4, P(f, "1")}, n); }) == Errc::BadDivisor);
  CHECK(thrown([&] { validate({2, P(f, "x-2")}, n); }) == Errc::BadDivisor);
  CHECK(thrown([&] { validate({2, P(f, "2x-2")}, n); }) == Errc::BadDivisor);
}

TEST_CASE("induced codes match the divisibility prediction") {
  for (const auto& [p, d] : {std::pair{5u, 1u}, std::pair{7u, 1u}, std::pair{3u, 2u}, std::pair{13u, 1u}}) {
    const FieldPtr f = Field::galois(p, d);
    for (unsigned n = 2; n <= 8; ++n) {
      if ((4 * n) % p == 0) continue;
      const Wedderburn w(FactorTable::build(f, n));
      for (unsigned ell = 1; ell <= 2 * n; ++ell) {
        if ((2 * n) % ell != 0) continue;
        const auto irr = SmallRing::build(f, 2 * n / ell).irreducibles();
        if (irr.size() > 8) continue;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << irr.size()); ++mask) {
          Poly h = Poly::constant(f, 1);
          for (std::size_t i = 0; i < irr.size(); ++i)
            if (mask >> i & 1) h = h * irr[i];
          const InducedCode code = induced_code({ell, h}, w);
          CAPTURE(p);
          CAPTURE(n);
          CAPTURE(ell);
          CAPTURE(to_string(h));
          REQUIRE(code.decomposition == code.predicted);
          REQUIRE_FALSE(code.convention_flip);
          REQUIRE(code.decomposition.dimension == code.closure_rank);
          REQUIRE(is_idempotent(code.idempotent));
          // the induced code is the left ideal generated by Omega of the check idempotent
          CyclicElem ehat(f, 2 * n / ell);
          for (const Poly& q : irr)
            if (!(h % q).is_zero()) ehat += idempotent_oracle(q, 2 * n / ell);
          const QElem g1[] = {omega_embed(ehat, ell, n)};
          const QElem g2[] = {code.idempotent};
          REQUIRE(left_ideal_closure(f, n, g1) == left_ideal_closure(f, n, g2));
          const auto& sets = code.sets.s;
          for (std::size_t k = 0; k < 6; ++k)
            for (std::size_t a = k + 1; a < (k < 3 ? 3u : 6u); ++a)
              for (std::size_t idx : sets[k])
                REQUIRE(std::find(sets[a].begin(), sets[a].end(), idx) == sets[a].end());
          for (std::size_t idx : sets[1]) REQUIRE(idx > w.table().delta());
          for (std::size_t idx : sets[2]) REQUIRE(idx > w.table().delta());
          for (std::size_t idx : sets[4]) REQUIRE(idx > w.table().mu());
          for (std::size_t idx : sets[5]) REQUIRE(idx > w.table().mu());
        }
      }
    }
  }
}
