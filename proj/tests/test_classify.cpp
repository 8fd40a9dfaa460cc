#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <optional>
#include <random>

#include "quatcode/classify.hpp"

using namespace quatcode;

namespace {

using Tag = BlockClass::Tag;

Errc thrown(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::ParseError;  // sentinel: nothing thrown
}

QElem half_plus_y(const FieldPtr& f, unsigned n, int sign, const QElem& e) {
  const QElem y = QElem::y(f, n);
  const QElem s = sign > 0 ? QElem::one(f, n) + y : QElem::one(f, n) - y;
  return s.scaled(f->inv(2)) * e;
}

std::size_t closure_rank(const QElem& lam) {
  const QElem gens[] = {lam};
  return left_ideal_closure(lam.field(), lam.n(), gens).rank();
}

std::vector<BlockClass> all_of(const Wedderburn& w, BlockClass c) {
  return std::vector<BlockClass>(w.blocks().size(), c);
}

}  // namespace

TEST_CASE("BlockClass canonical form") {
  const FieldPtr f = Field::prime(7);
  CHECK(BlockClass::line(f->elem(3), f->elem(2)) == BlockClass::line(f->elem(5), f->elem(1)));
  CHECK(BlockClass::line(f->elem(4), f->zero()) == BlockClass::line(f->one(), f->zero()));
  CHECK(to_string(BlockClass::line(f->elem(3), f->elem(2))) == "I(5,1)");
  CHECK(to_string(BlockClass::full()) == "full");
  CHECK(to_string(BlockClass::zero()) == "0");
  CHECK(thrown([&] { (void)BlockClass::line(f->zero(), f->zero()); }) == Errc::InvalidClass);
}

TEST_CASE("classify examples in F_5[Q_12]") {
  const FieldPtr f = Field::prime(5);
  const unsigned n = 3;
  const Wedderburn w(FactorTable::build(f, n));

  const CodeDecomposition full = classify_rank(QElem::one(f, n), w);
  CHECK(full.classes == all_of(w, BlockClass::full()));
  CHECK(full.dimension == 12);
  CHECK(classify_theorem(QElem::one(f, n), w) == full);

  const CodeDecomposition zero = classify_rank(QElem(f, n), w);
  CHECK(zero.classes == all_of(w, BlockClass::zero()));
  CHECK(zero.dimension == 0);
  CHECK(classify_theorem(QElem(f, n), w) == zero);

  const QElem e1 = w.central_idempotents()[0];
  const QElem lam = half_plus_y(f, n, +1, e1);
  const CodeDecomposition d = classify_rank(lam, w);
  CHECK(d.classes[0] == BlockClass::line(f->one(), f->zero()));
  for (std::size_t b = 1; b < 4; ++b) CHECK(d.classes[b] == BlockClass::zero());
  CHECK(d.dimension == 1);
  CHECK(classify_theorem(lam, w) == d);

  std::vector<BlockClass> cls = all_of(w, BlockClass::zero());
  cls[0] = BlockClass::line(f->zero(), f->one());
  CHECK(code_from_blocks(cls, w) == half_plus_y(f, n, -1, e1));
  CHECK(code_from_blocks(all_of(w, BlockClass::full()), w) == QElem::one(f, n));
  CHECK(code_from_blocks(all_of(w, BlockClass::zero()), w).is_zero());

  CHECK(thrown([&] { (void)classify_rank(QElem::y(f, n), w); }) == Errc::NotIdempotent);
  CHECK(thrown([&] { (void)classify_theorem(QElem::x(f, n), w); }) == Errc::NotIdempotent);
}

TEST_CASE("central idempotents classify as single full blocks") {
  for (const auto& [p, n] : {std::pair{5u, 3u}, std::pair{7u, 3u}, std::pair{13u, 4u}, std::pair{3u, 5u}}) {
    const FieldPtr f = Field::prime(p);
    const Wedderburn w(FactorTable::build(f, n));
    const TheoremPath path(w);
    for (std::size_t j = 0; j < w.blocks().size(); ++j) {
      const QElem e = w.central_idempotents()[j];
      const CodeDecomposition d = path.classify(e);
      for (std::size_t b = 0; b < w.blocks().size(); ++b)
        REQUIRE(d.classes[b] == (b == j ? BlockClass::full() : BlockClass::zero()));
      REQUIRE(d.dimension == w.blocks()[j].dim);
      REQUIRE(classify_rank(e, w) == d);
    }
  }
}

TEST_CASE("invalid classes are rejected") {
  const FieldPtr f = Field::prime(7);
  const Wedderburn w(FactorTable::build(f, 3));
  // blocks: f1 char pair, (x-4, x-2) pair, g1 quadratic field, (x+2, x+4) pair
  std::vector<BlockClass> cls = all_of(w, BlockClass::zero());
  cls[2] = BlockClass::line(f->one(), f->zero());
  CHECK(thrown([&] { (void)code_from_blocks(cls, w); }) == Errc::InvalidClass);
  cls[2] = BlockClass::zero();
  cls[0] = BlockClass::line(f->elem(2), f->one());
  CHECK(thrown([&] { (void)code_from_blocks(cls, w); }) == Errc::InvalidClass);

  const Wedderburn w5(FactorTable::build(Field::prime(5), 3));
  std::vector<BlockClass> c5 = all_of(w5, BlockClass::zero());
  const FieldPtr k = w5.blocks()[1].field;
  c5[1] = BlockClass::line(k->one(), k->zero());
  CHECK(thrown([&] { (void)code_from_blocks(c5, w5); }) == Errc::InvalidClass);
}

TEST_CASE("rank-one lines in a paired block of F_7[Q_12]") {
  const FieldPtr f = Field::prime(7);
  const unsigned n = 3;
  const Wedderburn w(FactorTable::build(f, n));
  const TheoremPath path(w);
  const std::size_t b = 1;
  const BlockDescriptor& d = w.blocks()[b];
  REQUIRE_FALSE(d.self_reciprocal);
  REQUIRE(class_option_count(d) == 3 + 7);
  for (std::uint64_t idx = 2; idx < class_option_count(d); ++idx) {
    std::vector<BlockClass> cls = all_of(w, BlockClass::zero());
    cls[b] = class_option(d, idx);
    const QElem lam = code_from_blocks(cls, w);
    REQUIRE(is_idempotent(lam));
    const CodeDecomposition byrank = classify_rank(lam, w);
    REQUIRE(byrank.classes == cls);
    REQUIRE(byrank.dimension == 2);
    REQUIRE(path.classify(lam) == byrank);
    REQUIRE(closure_rank(lam) == 2);

    // every element of the component has rows proportional to (b, -a)
    const QElem gens[] = {lam};
    for (const QElem& c : left_ideal_closure(f, n, gens).basis()) {
      const BlockImage img = w.rho_block(c, b);
      const FieldElem& la = cls[b].a;
      const FieldElem& lb = cls[b].b;
      REQUIRE((img.e[0] * la + img.e[1] * lb).is_zero());
      REQUIRE((img.e[2] * la + img.e[3] * lb).is_zero());
    }
  }
}

TEST_CASE("both paths agree on every class combination") {
  struct Cell {
    std::uint32_t p;
    unsigned m, n;
  };
  for (const Cell& c : {Cell{5, 1, 3}, Cell{5, 1, 2}, Cell{7, 1, 3}, Cell{3, 1, 2}, Cell{3, 2, 2}, Cell{13, 1, 3},
                        Cell{3, 1, 4}, Cell{11, 1, 2}}) {
    const FieldPtr f = Field::galois(c.p, c.m);
    const Wedderburn w(FactorTable::build(f, c.n));
    const TheoremPath path(w);
    const auto& blocks = w.blocks();
    std::uint64_t total = 1;
    for (const auto& d : blocks) total *= class_option_count(d);
    CAPTURE(c.p);
    CAPTURE(c.m);
    CAPTURE(c.n);
    REQUIRE(total <= 20000);
    for (std::uint64_t combo = 0; combo < total; ++combo) {
      std::vector<BlockClass> cls;
      std::uint64_t rest = combo;
      for (const auto& d : blocks) {
        cls.push_back(class_option(d, rest % class_option_count(d)));
        rest /= class_option_count(d);
      }
      const QElem lam = code_from_blocks(cls, w);
      const CodeDecomposition byrank = classify_rank(lam, w);
      REQUIRE(byrank.classes == cls);
      REQUIRE(path.classify(lam) == byrank);
      if (combo % 7 == 0) REQUIRE(closure_rank(lam) == byrank.dimension);
    }
  }
}

TEST_CASE("random left ideals") {
  std::mt19937_64 rng(53);
  for (const auto& [p, n] : {std::pair{5u, 3u}, std::pair{7u, 4u}, std::pair{13u, 3u}, std::pair{3u, 5u}}) {
    const FieldPtr f = Field::prime(p);
    const Wedderburn w(FactorTable::build(f, n));
    const TheoremPath path(w);
    for (int i = 0; i < 40; ++i) {
      Vec v(4 * n);
      for (auto& x : v) x = static_cast<Coeff>(rng() % p);
      QElem a = QElem::from_coords(f, n, v);
      std::vector<BlockClass> cls;
      for (const auto& d : w.blocks()) cls.push_back(class_option(d, rng() % class_option_count(d)));
      a = a * code_from_blocks(cls, w);
      const QElem gens[] = {a};
      const SubspaceBasis c = left_ideal_closure(f, n, gens);
      const QElem lam = idempotent_of_ideal(c, w);
      const CodeDecomposition d = classify_rank(lam, w);
      REQUIRE(d.dimension == c.rank());
      REQUIRE(path.classify(lam) == d);
    }
  }
}

TEST_CASE("self-reciprocal blocks admit rank-one left ideals") {
  for (const auto& [p, n] : {std::pair{5u, 3u}, std::pair{7u, 4u}, std::pair{3u, 4u}, std::pair{13u, 5u}}) {
    const FieldPtr f = Field::prime(p);
    const Wedderburn w(FactorTable::build(f, n));
    const TheoremPath path(w);
    for (std::size_t b = 0; b < w.blocks().size(); ++b) {
      const BlockDescriptor& d = w.blocks()[b];
      if (d.kind != BlockKind::Mat2 || !d.self_reciprocal) continue;
      const FieldPtr k = d.field;
      const std::uint64_t half = d.field_degree / 2;
      std::uint64_t frob = 1;
      for (std::uint64_t i = 0; i < half; ++i) frob *= f->cardinality();
      // [[1/2, s(x)], [c x, 1/2]] is a rank-one idempotent when c x s(x) = 1/4
      const FieldElem c = d.side == Side::F ? k->one() : -k->one();
      const FieldElem quarter = (k->one() + k->one() + k->one() + k->one()).inv();
      const FieldElem halfe = (k->one() + k->one()).inv();
      std::optional<FieldElem> xs;
      for (std::uint64_t idx = 1; idx < k->cardinality() && !xs; ++idx) {
        const FieldElem x = k->from_index(idx);
        if (c * x * x.pow(frob) == quarter) xs = x;
      }
      REQUIRE(xs.has_value());
      std::vector<BlockImage> images;
      for (const auto& other : w.blocks()) images.push_back(BlockImage::zero(other));
      images[b].e = {halfe, xs->pow(frob), c * *xs, halfe};
      const QElem lam = w.rho_inverse(images);
      REQUIRE(is_idempotent(lam));
      const CodeDecomposition d1 = classify_rank(lam, w);
      REQUIRE(d1.classes[b].tag == Tag::Line);
      REQUIRE(d1.dimension == d.dim / 2);
      REQUIRE(closure_rank(lam) == d.dim / 2);
      REQUIRE(path.classify(lam) == d1);
      CHECK(thrown([&] { (void)code_from_blocks(d1.classes, w); }) == Errc::InvalidClass);
    }
  }
}
