#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "quatcode/poly.hpp"

using namespace quatcode;

namespace {

Poly P(const FieldPtr& f, const char* s) { return parse_poly(f, s); }

Poly random_poly(const FieldPtr& f, std::mt19937_64& rng, std::size_t max_deg) {
  std::vector<Coeff> c(rng() % (max_deg + 1) + 1);
  for (auto& x : c) x = static_cast<Coeff>(rng() % f->code_count());
  return Poly(f, c);
}

}  // namespace

TEST_CASE("parse_poly grammar") {
  const FieldPtr f5 = Field::prime(5);
  CHECK(P(f5, "x^2+3*x+1").coeffs() == std::vector<Coeff>{1, 3, 1});
  CHECK(P(f5, " x^2 + 3x + 1 ").coeffs() == std::vector<Coeff>{1, 3, 1});
  CHECK(P(f5, "x-1").coeffs() == std::vector<Coeff>{4, 1});
  CHECK(P(f5, "-1").coeffs() == std::vector<Coeff>{4});
  CHECK(P(f5, "7x^3").coeffs() == std::vector<Coeff>{0, 0, 0, 2});
  CHECK(P(f5, "x^2+x^2").coeffs() == std::vector<Coeff>{0, 0, 2});
  CHECK(P(f5, "0").is_zero());
  for (const char* bad : {"", "x^", "3*", "x+*2", "y", "x^2^3"}) {
    bool threw = false;
    try {
      (void)P(f5, bad);
    } catch (const Error& e) {
      threw = e.code() == Errc::ParseError;
    }
    CHECK_MESSAGE(threw, bad);
  }
}

TEST_CASE("to_string and parse_poly round trip") {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {3u, 5u, 13u}) {
    const FieldPtr f = Field::prime(p);
    for (int i = 0; i < 200; ++i) {
      const Poly a = random_poly(f, rng, 8);
      REQUIRE(P(f, to_string(a).c_str()) == a);
    }
  }
}

TEST_CASE("arithmetic examples") {
  const FieldPtr f5 = Field::prime(5);
  CHECK(gcd(P(f5, "x^2-1"), P(f5, "x-1")) == P(f5, "x-1"));
  CHECK(P(f5, "x^2+x+1").derivative() == P(f5, "2x+1"));
  const Xgcd r = xgcd(P(f5, "x-1"), P(f5, "x+1"));
  CHECK(r.d.is_one());
  CHECK(r.s * P(f5, "x-1") + r.t * P(f5, "x+1") == r.d);
  bool threw = false;
  try {
    (void)divrem(P(f5, "x"), Poly(f5));
  } catch (const Error& e) {
    threw = e.code() == Errc::DivisionByZero;
  }
  CHECK(threw);
}

TEST_CASE("divrem and xgcd properties against integer oracle") {
  std::mt19937_64 rng(3);
  for (std::uint32_t p : {5u, 7u, 11u}) {
    const FieldPtr f = Field::prime(p);
    for (int i = 0; i < 300; ++i) {
      const Poly a = random_poly(f, rng, 10);
      Poly b = random_poly(f, rng, 5);
      if (b.is_zero()) continue;
      b = b.monic();
      const DivRem dr = divrem(a, b);
      REQUIRE(dr.quot * b + dr.rem == a);
      REQUIRE(dr.rem.degree() < b.degree());
      oracle::IPoly ia(a.coeffs().begin(), a.coeffs().end());
      oracle::IPoly ib(b.coeffs().begin(), b.coeffs().end());
      const oracle::IPoly ir = oracle::rem(ia, ib, p);
      REQUIRE(dr.rem.coeffs() == std::vector<Coeff>(ir.begin(), ir.end()));
      const Xgcd x = xgcd(a, b);
      REQUIRE(x.s * a + x.t * b == x.d);
      if (!x.d.is_zero()) {
        REQUIRE(x.d.is_monic());
        REQUIRE((a % x.d).is_zero());
        REQUIRE((b % x.d).is_zero());
      }
    }
  }
}

TEST_CASE("reciprocal_normalized") {
  const FieldPtr f7 = Field::prime(7);
  const Poly r = reciprocal_normalized(P(f7, "x-2"));
  CHECK(r == P(f7, "x-4"));
  CHECK(r.eval(Coeff{4}) == 0);
  CHECK(reciprocal_normalized(P(f7, "x^2+x+1")) == P(f7, "x^2+x+1"));
  CHECK(reciprocal_normalized(P(f7, "x-1")) == P(f7, "x-1"));
  bool threw = false;
  try {
    (void)reciprocal_normalized(P(f7, "x^2+x"));
  } catch (const Error& e) {
    threw = e.code() == Errc::ZeroConstantTerm;
  }
  CHECK(threw);
}

TEST_CASE("reciprocal_raw") {
  const FieldPtr f7 = Field::prime(7);
  CHECK(reciprocal_raw(P(f7, "1-2x")) == P(f7, "-2+x"));
  CHECK(reciprocal_raw(P(f7, "3")) == P(f7, "3"));
  CHECK(reciprocal_raw(P(f7, "x^2+x+1")) == P(f7, "x^2+x+1"));
  CHECK(reciprocal_raw(P(f7, "x+2"), 3) == P(f7, "2x^3+x^2"));
}

TEST_CASE("reciprocal is an involution and inverts roots") {
  std::mt19937_64 rng(5);
  const FieldPtr f = Field::prime(13);
  int done = 0;
  while (done < 500) {
    Poly g = random_poly(f, rng, 9);
    if (g.is_zero() || g[0] == 0) continue;
    g = g.monic();
    const Poly s = reciprocal_normalized(g);
    REQUIRE(s.is_monic());
    REQUIRE(reciprocal_normalized(s) == g);
    for (Coeff a = 1; a < 13; ++a)
      if (g.eval(a) == 0) REQUIRE(s.eval(f->inv(a)) == 0);
    ++done;
  }
}

TEST_CASE("evaluation at extension elements") {
  const FieldPtr f5 = Field::prime(5);
  const FieldPtr ext = Field::extend(f5, P(f5, "x^2+x+1"));
  CHECK(P(f5, "x^2+x+1").eval(ext->generator()).is_zero());
  CHECK(P(f5, "x^3-1").eval(ext->generator()).is_zero());
  CHECK_FALSE(P(f5, "x-1").eval(ext->generator()).is_zero());
}
