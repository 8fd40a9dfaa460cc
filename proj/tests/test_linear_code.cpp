#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <numeric>
#include <random>
#include <tuple>

#include "quatcode/induced.hpp"
#include "quatcode/linear_code.hpp"

using namespace quatcode;

namespace {

SubspaceBasis closure_of(const QElem& g) {
  const QElem gens[] = {g};
  return left_ideal_closure(g.field(), g.n(), gens);
}

QElem all_ones(const FieldPtr& f, unsigned n) {
  return QElem::from_coords(f, n, Vec(4 * n, 1));
}

/// Weight distribution by listing every codeword as an F_q-combination of
/// the generator rows.
std::vector<std::uint64_t> brute_weights(const LinearCode& c) {
  const FieldPtr& f = c.field;
  const std::uint64_t q = f->code_count();
  std::vector<std::uint64_t> w(c.length + 1, 0);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < c.k(); ++i) total *= q;
  for (std::uint64_t code = 0; code < total; ++code) {
    Vec word(c.length, 0);
    std::uint64_t rest = code;
    for (std::size_t i = 0; i < c.k(); ++i) {
      const Coeff a = static_cast<Coeff>(rest % q);
      rest /= q;
      for (std::size_t j = 0; j < c.length; ++j) word[j] = f->add(word[j], f->mul(a, c.generator[i][j]));
    }
    std::size_t wt = 0;
    for (Coeff x : word) wt += x != 0;
    ++w[wt];
  }
  return w;
}

}  // namespace

TEST_CASE("full and zero codes") {
  const FieldPtr f = Field::prime(5);
  const LinearCode full = to_linear(closure_of(QElem::one(f, 3)));
  CHECK(full.length == 12);
  CHECK(full.k() == 12);
  CHECK(full.check.empty());
  CHECK(min_distance(full) == std::nullopt);  // 5^12 exceeds the default budget
  const FieldPtr f3 = Field::prime(3);
  CHECK(min_distance(to_linear(closure_of(QElem::one(f3, 2)))) == 1);

  const LinearCode zero = to_linear(SubspaceBasis(f, 3));
  CHECK(zero.k() == 0);
  CHECK(zero.check.size() == 12);
  const auto w0 = weight_enumerator(zero);
  REQUIRE(w0.has_value());
  CHECK((*w0)[0] == 1);
  CHECK(std::accumulate(w0->begin(), w0->end(), std::uint64_t{0}) == 1);
  bool threw = false;
  try {
    (void)min_distance(zero);
  } catch (const Error& e) {
    threw = e.code() == Errc::InvalidArgument;
  }
  CHECK(threw);
}

TEST_CASE("the all-ones code is [12, 1, 12]") {
  const FieldPtr f = Field::prime(5);
  const LinearCode c = to_linear(closure_of(all_ones(f, 3)));
  CHECK(c.k() == 1);
  CHECK(min_distance(c) == 12);
  const auto w = weight_enumerator(c);
  REQUIRE(w.has_value());
  CHECK((*w)[0] == 1);
  CHECK((*w)[12] == 4);
  CHECK(std::accumulate(w->begin(), w->end(), std::uint64_t{0}) == 5);
  CHECK(is_left_invariant(c));
}

TEST_CASE("the dimension-8 induced code") {
  const FieldPtr f = Field::prime(5);
  const Wedderburn w(FactorTable::build(f, 3));
  const InducedCode ic = induced_code({2, parse_poly(f, "x-1")}, w);
  const LinearCode c = to_linear(closure_of(ic.idempotent));
  CHECK(c.k() == 8);
  CHECK(c.length == 12);
  CHECK(c.check.size() == 4);
  CHECK(is_left_invariant(c));
  CHECK(weight_enumerator(c, 100).has_value() == false);
}

TEST_CASE("enumerator agrees with brute force and parity checks annihilate the code") {
  std::mt19937_64 rng(71);
  for (const auto& [p, d, n] : {std::tuple{3u, 1u, 2u}, std::tuple{5u, 1u, 3u}, std::tuple{7u, 1u, 3u},
                                std::tuple{3u, 2u, 2u}}) {
    const FieldPtr f = Field::galois(p, d);
    const Wedderburn w(FactorTable::build(f, n));
    for (int i = 0; i < 25; ++i) {
      std::vector<BlockClass> cls;
      for (const auto& b : w.blocks()) cls.push_back(class_option(b, rng() % class_option_count(b)));
      const QElem lam = code_from_blocks(cls, w);
      const LinearCode c = to_linear(closure_of(lam));
      REQUIRE(c.k() == classify_rank(lam, w).dimension);
      REQUIRE(c.check.size() == c.length - c.k());
      for (const Vec& g : c.generator)
        for (const Vec& h : c.check) {
          Coeff s = 0;
          for (std::size_t j = 0; j < c.length; ++j) s = f->add(s, f->mul(g[j], h[j]));
          REQUIRE(s == 0);
        }
      REQUIRE(is_left_invariant(c));
      std::uint64_t size = 1;
      for (std::size_t j = 0; j < c.k(); ++j) size *= f->code_count();
      if (size > 200'000) continue;
      const auto we = weight_enumerator(c);
      REQUIRE(we.has_value());
      REQUIRE(*we == brute_weights(c));
      REQUIRE(std::accumulate(we->begin(), we->end(), std::uint64_t{0}) == size);
      if (c.k() > 0) {
        std::size_t dmin = 0;
        for (std::size_t j = 1; j < we->size() && dmin == 0; ++j)
          if ((*we)[j] != 0) dmin = j;
        REQUIRE(min_distance(c) == dmin);
      }
    }
  }
}

TEST_CASE("a subspace that is not an ideal is not left invariant") {
  const FieldPtr f = Field::prime(5);
  SubspaceBasis s(f, 3);
  s.add(QElem::x(f, 3));
  CHECK_FALSE(is_left_invariant(to_linear(s)));
}

TEST_CASE("exports") {
  const FieldPtr f = Field::prime(5);
  const LinearCode c = to_linear(closure_of(all_ones(f, 3)));
  const std::string text = export_text(c);
  CHECK(text.find("generator") != std::string::npos);
  CHECK(text.find("check") != std::string::npos);
  CHECK(text.find("1 1 1 1 1 1 1 1 1 1 1 1") != std::string::npos);

  const auto j = nlohmann::json::parse(export_json(c));
  CHECK(j["q"] == 5);
  CHECK(j["n"] == 3);
  CHECK(j["length"] == 12);
  CHECK(j["k"] == 1);
  CHECK(j["generator"].size() == 1);
  CHECK(j["check"].size() == 11);
}
