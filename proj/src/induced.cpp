#include "quatcode/induced.hpp"

#include <algorithm>

namespace quatcode {

SmallRing SmallRing::build(const FieldPtr& field, unsigned m) {
  if (m == 0) throw Error(Errc::BadDivisor, "small ring modulus must be positive");
  SmallRing s;
  s.modulus = m;
  if (m % 2 == 0) {
    FactorTable t = FactorTable::build(field, m / 2);
    s.f_side = t.f_side();
    s.g_side = t.g_side();
  } else {
    s.f_side = classify_reciprocal(factor_squarefree(Poly::x_pow_plus(field, m, -1)));
  }
  return s;
}

std::vector<Poly> SmallRing::irreducibles() const {
  std::vector<Poly> out;
  for (const auto* side : {&f_side, &g_side})
    for (const auto& rf : *side) {
      out.push_back(rf.poly);
      if (rf.partner) out.push_back(*rf.partner);
    }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

void validate(const InducedSpec& spec, unsigned n) {
  if (spec.ell == 0 || (2 * n) % spec.ell != 0)
    throw Error(Errc::BadDivisor, "l = " + std::to_string(spec.ell) + " does not divide 2n = " + std::to_string(2 * n));
  const unsigned m = 2 * n / spec.ell;
  if (!spec.h.is_monic()) throw Error(Errc::BadDivisor, "h must be monic");
  if (!(Poly::x_pow_plus(spec.h.field(), m, -1) % spec.h).is_zero())
    throw Error(Errc::BadDivisor, to_string(spec.h) + " does not divide x^" + std::to_string(m) + "-1");
}

QElem omega_embed(const CyclicElem& w, unsigned ell, unsigned n) {
  if (ell == 0 || (2 * n) % ell != 0) throw Error(Errc::BadDivisor, "l must divide 2n");
  const std::size_t m = 2 * std::size_t{n} / ell;
  if (w.modulus_degree() != m) throw Error(Errc::BadDivisor, "element is not reduced modulo X^{2n/l} - 1");
  std::vector<Coeff> u(2 * std::size_t{n}, 0);
  for (std::size_t i = 0; i < m; ++i) u[ell * i] = w[i];
  return QElem::from_cyclic(CyclicElem(w.field(), 2 * std::size_t{n}, std::move(u)));
}

bool divides_pullback_at(const FieldElem& root, const Poly& h, unsigned ell) { return h.eval(root.pow(ell)).is_zero(); }

bool divides_pullback(const Poly& p, const Poly& h, unsigned ell) {
  if (p.degree() < 1) throw Error(Errc::InvalidArgument, "divisor test needs a nonconstant factor");
  const FieldPtr ext = Field::extend(p.field(), p.monic());
  return divides_pullback_at(ext->generator(), h, ell);
}

namespace {

struct BigFactor {
  std::size_t block;
  const ReciprocalFactor* rf;
};

std::vector<BigFactor> big_factors(const Wedderburn& w) {
  std::vector<BigFactor> out;
  std::size_t b = 0;
  for (const auto* side : {&w.table().f_side(), &w.table().g_side()})
    for (const auto& rf : *side) out.push_back({b++, &rf});
  return out;
}

}  // namespace

QElem lemma_idem_pullback(const SmallRing& small, Side side, std::size_t index, bool starred, unsigned ell,
                          const Wedderburn& w) {
  const auto& list = side == Side::F ? small.f_side : small.g_side;
  if (index == 0 || index > list.size()) throw Error(Errc::InvalidArgument, "small-ring factor index out of range");
  const ReciprocalFactor& sf = list[index - 1];
  if (starred && sf.self_reciprocal()) throw Error(Errc::InvalidArgument, "self-reciprocal factors have no partner");
  if (small.modulus * ell != 2 * w.n()) throw Error(Errc::BadDivisor, "small ring does not match l and n");

  const Poly& factor = starred ? *sf.partner : sf.poly;
  const QElem lhs = omega_embed(idempotent_oracle(factor, small.modulus), ell, w.n());

  const std::size_t big_m = 2 * std::size_t{w.n()};
  CyclicElem rhs(w.field(), big_m);
  for (const BigFactor& bf : big_factors(w)) {
    const bool p_divides = divides_pullback_at(bf.rf->root, sf.poly, ell);
    if (sf.self_reciprocal()) {
      if (!p_divides) continue;
      rhs += w.eps(bf.block);
      if (!bf.rf->self_reciprocal()) rhs += w.eps_star(bf.block);
      continue;
    }
    if (bf.rf->self_reciprocal()) continue;
    const bool star_divides = divides_pullback_at(bf.rf->root_inv, sf.poly, ell);
    if (p_divides) rhs += starred ? w.eps_star(bf.block) : w.eps(bf.block);
    if (star_divides) rhs += starred ? w.eps(bf.block) : w.eps_star(bf.block);
  }
  if (!(lhs == QElem::from_cyclic(rhs)))
    throw Error(Errc::LemmaMismatch, "pulled-back idempotent of " + to_string(factor) + " differs from the divisor sum");
  return lhs;
}

DivisibilitySets induced_sets(const InducedSpec& spec, const Wedderburn& w) {
  validate(spec, w.n());
  DivisibilitySets sets;
  const FactorTable& t = w.table();
  auto fill = [&](const std::vector<ReciprocalFactor>& factors, std::size_t scalar_count, std::size_t first) {
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const ReciprocalFactor& rf = factors[i];
      const bool p = divides_pullback_at(rf.root, spec.h, spec.ell);
      const bool ps = rf.self_reciprocal() ? p : divides_pullback_at(rf.root_inv, spec.h, spec.ell);
      if (!p && !ps) sets.s[first].push_back(i + 1);
      if (i < scalar_count) continue;
      if (!p && ps) sets.s[first + 1].push_back(i + 1);
      if (p && !ps) sets.s[first + 2].push_back(i + 1);
    }
  };
  fill(t.f_side(), t.delta(), 0);
  fill(t.g_side(), t.mu(), 3);
  return sets;
}

CodeDecomposition predicted_decomposition(const DivisibilitySets& sets, const Wedderburn& w) {
  const std::size_t f_count = w.table().f_side().size();
  std::vector<BlockClass> classes;
  for (std::size_t b = 0; b < w.blocks().size(); ++b) {
    const BlockDescriptor& d = w.blocks()[b];
    const std::size_t first = b < f_count ? 0 : 3;
    auto in = [&](std::size_t k) {
      const auto& s = sets.s[first + k];
      return std::find(s.begin(), s.end(), d.index) != s.end();
    };
    const FieldElem one = d.field->one(), zero = d.field->zero();
    if (in(0)) {
      classes.push_back(BlockClass::full());
    } else if (in(1)) {
      classes.push_back(BlockClass::line(zero, one));
    } else if (in(2)) {
      classes.push_back(BlockClass::line(one, zero));
    } else {
      classes.push_back(BlockClass::zero());
    }
  }
  CodeDecomposition out;
  for (std::size_t b = 0; b < classes.size(); ++b) out.dimension += class_dimension(classes[b], w.blocks()[b]);
  out.classes = std::move(classes);
  return out;
}

InducedCode induced_code(const InducedSpec& spec, const Wedderburn& w) {
  InducedCode out;
  out.sets = induced_sets(spec, w);
  const unsigned m = 2 * w.n() / spec.ell;

  // Generating idempotent of (h): primitive idempotents of the factors not dividing h.
  CyclicElem e_hat(w.field(), m);
  for (const Poly& p : factor_squarefree(Poly::x_pow_plus(w.field(), m, -1)))
    if (!(spec.h % p).is_zero()) e_hat += idempotent_oracle(p, m);

  const QElem gens[] = {omega_embed(e_hat, spec.ell, w.n())};
  const SubspaceBasis c = left_ideal_closure(w.field(), w.n(), gens);
  out.closure_rank = c.rank();
  out.idempotent = idempotent_of_ideal(c, w);
  out.decomposition = classify_rank(out.idempotent, w);
  out.predicted = predicted_decomposition(out.sets, w);
  if (out.decomposition == out.predicted && out.decomposition.dimension == out.closure_rank) return out;

  CodeDecomposition flipped = out.predicted;
  for (auto& c : flipped.classes)
    if (c.tag == BlockClass::Tag::Line) c = BlockClass::line(c.b, c.a);
  if (out.decomposition == flipped && out.decomposition.dimension == out.closure_rank) {
    out.convention_flip = true;
    return out;
  }
  throw Error(Errc::TheoremMismatch, "induced code classification contradicts the divisibility sets");
}

}  // namespace quatcode
