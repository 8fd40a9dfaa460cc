#pragma once

// Codes induced from the cyclic ring F_q[X]/(X^M - 1), M = 2n/l, through
// the embedding Omega: X -> x^l.

#include <array>
#include <vector>

#include "quatcode/classify.hpp"

namespace quatcode {

/// Reciprocal factorization of X^M - 1. For even M the factors of
/// X^{M/2} - 1 and X^{M/2} + 1 are kept apart as in FactorTable; for odd M
/// every factor is listed on the f-side.
struct SmallRing {
  unsigned modulus = 0;  // M
  std::vector<ReciprocalFactor> f_side, g_side;

  static SmallRing build(const FieldPtr& field, unsigned m);
  /// All irreducible factors, partners included, sorted canonically.
  std::vector<Poly> irreducibles() const;
};

struct InducedSpec {
  unsigned ell = 1;
  Poly h;  // monic divisor of X^{2n/l} - 1
};

/// Throws BadDivisor unless l | 2n and h is a monic divisor of X^{2n/l} - 1.
void validate(const InducedSpec& spec, unsigned n);

/// w(x^l) with w reduced modulo X^{2n/l} - 1. Throws BadDivisor.
QElem omega_embed(const CyclicElem& w, unsigned ell, unsigned n);

/// p(x) | h(x^l), tested as h(t^l) = 0 for a root t of the irreducible p.
bool divides_pullback(const Poly& p, const Poly& h, unsigned ell);
bool divides_pullback_at(const FieldElem& root, const Poly& h, unsigned ell);

/// Omega of the primitive idempotent of a small-ring factor, checked
/// against the sum of big-ring idempotents selected by divisibility.
/// `index` is 1-based within `side`; `starred` selects the partner of a
/// paired factor. Throws LemmaMismatch.
QElem lemma_idem_pullback(const SmallRing& small, Side side, std::size_t index, bool starred, unsigned ell,
                          const Wedderburn& w);

/// S_1..S_6 as 1-based indices: S_1..S_3 over the f-side, S_4..S_6 over the g-side.
struct DivisibilitySets {
  std::array<std::vector<std::size_t>, 6> s;
  friend bool operator==(const DivisibilitySets&, const DivisibilitySets&) = default;
};

DivisibilitySets induced_sets(const InducedSpec& spec, const Wedderburn& w);

/// Block classes read off the sets: S_1/S_4 full, S_2/S_5 Line(0,1),
/// S_3/S_6 Line(1,0), otherwise zero.
CodeDecomposition predicted_decomposition(const DivisibilitySets& sets, const Wedderburn& w);

struct InducedCode {
  DivisibilitySets sets;
  QElem idempotent;
  std::size_t closure_rank = 0;
  CodeDecomposition decomposition;  // rank path on the extracted idempotent
  CodeDecomposition predicted;
  /// Set when the prediction matches only after exchanging Line(0,1) and Line(1,0).
  bool convention_flip = false;
};

/// Throws TheoremMismatch when the classification contradicts the sets.
InducedCode induced_code(const InducedSpec& spec, const Wedderburn& w);

}  // namespace quatcode
