#include "quatcode/selftest.hpp"

#include <numeric>
#include <random>
#include <sstream>

#include "quatcode/induced.hpp"
#include "quatcode/linear_code.hpp"

namespace quatcode {

std::uint64_t GridCell::q() const noexcept {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < m; ++i) q *= p;
  return q;
}

FieldPtr GridCell::field() const { return m == 1 ? Field::prime(p) : Field::galois(p, m); }

std::string GridCell::label() const { return "q=" + std::to_string(q()) + " n=" + std::to_string(n); }

GridCell cell_for(std::uint64_t q, unsigned n) {
  for (std::uint64_t p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    unsigned m = 0;
    std::uint64_t r = q;
    while (r % p == 0) {
      r /= p;
      ++m;
    }
    if (r != 1 || !is_prime(p)) break;
    return {static_cast<std::uint32_t>(p), m, n};
  }
  throw Error(Errc::NotPrime, std::to_string(q) + " is not a prime power");
}

Grid make_grid(const std::vector<std::uint64_t>& qs, unsigned n_min, unsigned n_max) {
  Grid g;
  for (std::uint64_t q : qs)
    for (unsigned n = n_min; n <= n_max; ++n) {
      const GridCell c = cell_for(q, n);
      (std::gcd(std::uint64_t{4} * n, q) == 1 ? g.cells : g.skipped).push_back(c);
    }
  return g;
}

Grid default_grid() { return make_grid({3, 5, 7, 9, 11, 13}, 2, 12); }

namespace {

constexpr std::size_t kMaxNotes = 5;

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::mt19937_64 cell_rng(std::uint64_t seed, int id, const GridCell& c) {
  const std::uint64_t tag = (c.q() << 32) ^ (std::uint64_t{c.n} << 8) ^ static_cast<std::uint64_t>(id);
  return std::mt19937_64(splitmix(seed ^ splitmix(tag)));
}

QElem random_elem(const FieldPtr& f, unsigned n, std::mt19937_64& rng) {
  Vec c(4 * std::size_t{n});
  for (auto& v : c) v = static_cast<Coeff>(rng() % f->cardinality());
  return QElem::from_coords(f, n, c);
}

class Tally {
 public:
  Tally(CriterionResult& r) : r_(r) {}
  void check(bool ok, const std::string& what) {
    ++r_.checks;
    if (ok) return;
    fail(what);
  }
  void fail(const std::string& what) {
    if (r_.failures++ < kMaxNotes) r_.notes.push_back("FAIL " + what);
  }

 private:
  CriterionResult& r_;
};

// Runs `body` for every cell, converting library errors into failures.
template <class Body>
void for_cells(const Grid& grid, CriterionResult& r, Body&& body) {
  Tally tally(r);
  for (const GridCell& c : grid.cells) {
    try {
      body(c, tally);
    } catch (const Error& e) {
      tally.check(false, c.label() + ": " + std::string(errc_name(e.code())) + ": " + e.what());
    }
  }
}

Poly product(const FieldPtr& f, const std::vector<Poly>& factors, std::uint64_t mask) {
  Poly g = Poly::constant(f, 1);
  for (std::size_t i = 0; i < factors.size(); ++i)
    if ((mask >> i) & 1) g = g * factors[i];
  return g;
}

std::uint64_t random_mask(std::mt19937_64& rng, std::size_t bits) {
  return bits >= 64 ? rng() : rng() & ((std::uint64_t{1} << bits) - 1);
}

void criterion_eq1(const Grid& grid, CriterionResult& r) {
  for_cells(grid, r, [](const GridCell& c, Tally& t) {
    const FieldPtr f = c.field();
    const std::size_t m = 2 * std::size_t{c.n};
    for (const Poly& g : factor_squarefree(Poly::x_pow_plus(f, m, -1)))
      t.check(idempotent_eq1(g, m, StarConvention::Raw) == idempotent_oracle(g, m), c.label() + " g=" + to_string(g));
  });
}

void criterion_additivity(const Grid& grid, std::uint64_t seed, CriterionResult& r) {
  for_cells(grid, r, [&](const GridCell& c, Tally& t) {
    auto rng = cell_rng(seed, 2, c);
    const FieldPtr f = c.field();
    const std::size_t m = 2 * std::size_t{c.n};
    const auto irr = factor_squarefree(Poly::x_pow_plus(f, m, -1));
    std::vector<CyclicElem> oracle;
    for (const Poly& p : irr) oracle.push_back(idempotent_oracle(p, m));
    for (int k = 0; k < 20; ++k) {
      const std::uint64_t g_mask = random_mask(rng, irr.size());
      const std::uint64_t g1_mask = g_mask & rng();
      const Poly g = product(f, irr, g_mask), g1 = product(f, irr, g1_mask), g2 = product(f, irr, g_mask & ~g1_mask);
      CyclicElem expected(f, m);
      for (std::size_t i = 0; i < irr.size(); ++i)
        if ((g_mask >> i) & 1) expected += oracle[i];
      const CyclicElem e = idempotent_eq1(g, m);
      t.check(e == idempotent_eq1(g1, m) + idempotent_eq1(g2, m) && e == expected,
              c.label() + " g1=" + to_string(g1) + " g2=" + to_string(g2));
    }
  });
}

void criterion_central(const Grid& grid, CriterionResult& r) {
  for_cells(grid, r, [](const GridCell& c, Tally& t) {
    const Wedderburn w(FactorTable::build(c.field(), c.n));
    const auto& es = w.central_idempotents();
    const FactorTable& tb = w.table();
    t.check(es.size() == tb.r() + tb.s() + tb.t() + tb.k(), c.label() + " count");
    QElem sum(w.field(), w.n());
    for (std::size_t i = 0; i < es.size(); ++i) {
      t.check(is_idempotent(es[i]), c.label() + " idempotent e" + std::to_string(i));
      t.check(is_central(es[i]), c.label() + " central e" + std::to_string(i));
      for (std::size_t j = 0; j < es.size(); ++j)
        if (i != j) t.check((es[i] * es[j]).is_zero(), c.label() + " orthogonal e" + std::to_string(i) + " e" + std::to_string(j));
      sum = sum + es[i];
    }
    t.check(sum == QElem::one(w.field(), w.n()), c.label() + " sum");
  });
}

void criterion_rho(const Grid& grid, std::uint64_t seed, CriterionResult& r) {
  for_cells(grid, r, [&](const GridCell& c, Tally& t) {
    auto rng = cell_rng(seed, 4, c);
    const Wedderburn w(FactorTable::build(c.field(), c.n));
    const FieldPtr& f = w.field();
    const unsigned n = w.n();
    for (int k = 0; k < 200; ++k) {
      const QElem a = random_elem(f, n, rng), b = random_elem(f, n, rng);
      const auto ra = w.rho(a), rb = w.rho(b), rab = w.rho(a * b), rsum = w.rho(a + b);
      bool mul = true, add = true;
      for (std::size_t i = 0; i < ra.size(); ++i) {
        mul = mul && rab[i] == ra[i] * rb[i];
        add = add && rsum[i] == ra[i] + rb[i];
      }
      t.check(mul, c.label() + " multiplicative");
      t.check(add, c.label() + " additive");
    }
    const auto rx = w.rho(QElem::x(f, n)), ry = w.rho(QElem::y(f, n));
    for (std::size_t i = 0; i < rx.size(); ++i) {
      const BlockImage id = BlockImage::identity(w.blocks()[i]);
      t.check(rx[i].pow(2 * n) == id, c.label() + " x^{2n}");
      t.check(ry[i] * ry[i] == rx[i].pow(n), c.label() + " y^2 = x^n");
      t.check(ry[i] * rx[i] == rx[i].pow(2 * n - 1) * ry[i], c.label() + " y x = x^{-1} y");
    }
    for (int k = 0; k < 100; ++k) {
      const QElem a = random_elem(f, n, rng);
      t.check(w.rho_inverse(w.rho(a)) == a, c.label() + " roundtrip");
    }
    t.check(w.dimension_audit() == 4 * std::size_t{n}, c.label() + " audit");
  });
}

void criterion_classifier(const Grid& grid, std::uint64_t seed, CriterionResult& r) {
  std::uint64_t exhaustive = 0, sampled = 0;
  for_cells(grid, r, [&](const GridCell& c, Tally& t) {
    auto rng = cell_rng(seed, 5, c);
    const Wedderburn w(FactorTable::build(c.field(), c.n));
    const TheoremPath theorem(w);
    std::vector<std::uint64_t> counts;
    double combos = 1;
    for (const auto& d : w.blocks()) {
      counts.push_back(class_option_count(d));
      combos *= static_cast<double>(counts.back());
    }
    const bool all = combos <= 1e4;
    const std::uint64_t total = all ? static_cast<std::uint64_t>(combos) : 500;
    (all ? exhaustive : sampled) += 1;
    for (std::uint64_t it = 0; it < total; ++it) {
      std::vector<BlockClass> cls;
      std::uint64_t rest = it;
      for (std::size_t b = 0; b < counts.size(); ++b) {
        const std::uint64_t idx = all ? rest % counts[b] : rng() % counts[b];
        rest /= counts[b];
        cls.push_back(class_option(w.blocks()[b], idx));
      }
      const QElem lambda = code_from_blocks(cls, w);
      const CodeDecomposition by_rank = classify_rank(lambda, w);
      const CodeDecomposition by_theorem = theorem.classify(lambda);
      const QElem gens[] = {lambda};
      const std::size_t rank = left_ideal_closure(w.field(), w.n(), gens).rank();
      t.check(by_rank.classes == cls && by_rank == by_theorem && by_rank.dimension == rank,
              c.label() + " combination " + std::to_string(it));
    }
  });
  r.notes.push_back("cells enumerated exhaustively: " + std::to_string(exhaustive) +
                    ", sampled: " + std::to_string(sampled));
}

void criterion_induced(const Grid& grid, std::uint64_t seed, CriterionResult& r) {
  std::uint64_t flips = 0, codes = 0, lemmas = 0;
  for_cells(grid, r, [&](const GridCell& c, Tally& t) {
    auto rng = cell_rng(seed, 6, c);
    const Wedderburn w(FactorTable::build(c.field(), c.n));
    std::uint64_t cell_flips = 0, cell_codes = 0;
    for (unsigned ell = 1; ell <= 2 * c.n; ++ell) {
      if ((2 * c.n) % ell != 0) continue;
      const SmallRing small = SmallRing::build(w.field(), 2 * c.n / ell);
      for (Side side : {Side::F, Side::G}) {
        const auto& list = side == Side::F ? small.f_side : small.g_side;
        for (std::size_t i = 0; i < list.size(); ++i)
          for (bool starred : {false, true}) {
            if (starred && list[i].self_reciprocal()) continue;
            ++lemmas;
            try {
              lemma_idem_pullback(small, side, i + 1, starred, ell, w);
              t.check(true, "");
            } catch (const Error& e) {
              t.check(false, c.label() + " l=" + std::to_string(ell) + ": " + e.what());
            }
          }
      }
      const auto irr = small.irreducibles();
      const bool all = irr.size() <= 10;
      const std::uint64_t total = all ? std::uint64_t{1} << irr.size() : 1024;
      for (std::uint64_t k = 0; k < total; ++k) {
        const Poly h = product(w.field(), irr, all ? k : random_mask(rng, irr.size()));
        try {
          const InducedCode ic = induced_code({ell, h}, w);
          ++cell_codes;
          cell_flips += ic.convention_flip ? 1 : 0;
          t.check(true, "");
        } catch (const Error& e) {
          t.check(false, c.label() + " l=" + std::to_string(ell) + " h=" + to_string(h) + ": " + e.what());
        }
      }
    }
    t.check(cell_flips == 0 || cell_flips == cell_codes, c.label() + " convention flip not uniform");
    flips += cell_flips;
    codes += cell_codes;
  });
  r.notes.push_back("induced codes: " + std::to_string(codes) + ", lemma identities: " + std::to_string(lemmas) +
                    ", convention flips: " + std::to_string(flips));
}

void criterion_fixed_points(CriterionResult& r) {
  Tally t(r);
  try {
    const FieldPtr f = Field::prime(5);
    const Wedderburn w(FactorTable::build(f, 3));
    std::vector<std::size_t> dims;
    for (const auto& d : w.blocks()) dims.push_back(d.dim);
    t.check(dims == std::vector<std::size_t>{2, 4, 2, 4}, "F_5 n=3 block dimensions");

    const Coeff half = f->inv(2);
    const QElem eps = QElem::from_cyclic(idempotent_oracle(Poly::x_pow_plus(f, 1, -1), 6));
    const QElem lambda = ((QElem::one(f, 3) + QElem::y(f, 3)) * eps).scaled(half);
    std::vector<BlockClass> expected(w.blocks().size());
    expected[0] = BlockClass::line(f->one(), f->zero());
    const CodeDecomposition by_rank = classify_rank(lambda, w);
    t.check(by_rank.classes == expected && by_rank.dimension == 1, "(1+y)/2 e_{x-1} rank path gives I_1(1,0)");
    t.check(classify_theorem(lambda, w) == by_rank, "(1+y)/2 e_{x-1} theorem path agrees");
    const QElem gens[] = {lambda};
    const LinearCode code = to_linear(left_ideal_closure(f, 3, gens));
    t.check(code.length == 12 && code.k() == 1 && min_distance(code) == std::optional<std::size_t>{12},
            "(1+y)/2 e_{x-1} is a [12,1,12] code");

    const InducedCode ic = induced_code({2, Poly::x_pow_plus(f, 1, -1)}, w);
    DivisibilitySets sets;
    sets.s[0] = {2};
    sets.s[3] = {2};
    t.check(ic.sets == sets, "induced l=2 h=x-1 sets S_1={2}, S_4={2}");
    t.check(ic.decomposition.dimension == 8 && ic.closure_rank == 8, "induced l=2 h=x-1 dimension 8");
  } catch (const Error& e) {
    t.check(false, std::string(errc_name(e.code())) + ": " + e.what());
  }
}

const char* criterion_name(int id) {
  switch (id) {
    case 1: return "idempotent formula vs oracle";
    case 2: return "idempotent additivity";
    case 3: return "central idempotent family";
    case 4: return "rho isomorphism";
    case 5: return "classifier path agreement";
    case 6: return "induced codes";
    case 7: return "worked fixed points";
  }
  return "unknown";
}

}  // namespace

CriterionResult run_criterion(int id, const Grid& grid, std::uint64_t seed) {
  CriterionResult r;
  r.id = id;
  r.name = criterion_name(id);
  switch (id) {
    case 1: criterion_eq1(grid, r); break;
    case 2: criterion_additivity(grid, seed, r); break;
    case 3: criterion_central(grid, r); break;
    case 4: criterion_rho(grid, seed, r); break;
    case 5: criterion_classifier(grid, seed, r); break;
    case 6: criterion_induced(grid, seed, r); break;
    case 7: criterion_fixed_points(r); break;
    default: throw Error(Errc::InvalidArgument, "unknown criterion " + std::to_string(id));
  }
  return r;
}

bool SelftestReport::passed() const noexcept {
  for (const auto& r : results)
    if (!r.passed()) return false;
  return true;
}

std::string SelftestReport::text() const {
  std::ostringstream os;
  os << "selftest seed=" << seed << '\n';
  for (const auto& s : skipped) os << "skip " << s << ": gcd(4n, q) != 1\n";
  for (const auto& r : results) {
    os << "criterion " << r.id << " " << r.name << ": checks=" << r.checks << " failures=" << r.failures << ' '
       << (r.passed() ? "PASS" : "FAIL") << '\n';
    for (const auto& note : r.notes) os << "  " << note << '\n';
  }
  os << "overall: " << (passed() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

SelftestReport run_selftest(const Grid& grid, std::uint64_t seed) {
  SelftestReport rep;
  rep.seed = seed;
  for (const auto& c : grid.skipped) rep.skipped.push_back(c.label());
  for (int id = 1; id <= 7; ++id) rep.results.push_back(run_criterion(id, grid, seed));
  return rep;
}

}  // namespace quatcode
