#pragma once

// Block-by-block description of a left ideal C = F_q[Q_4n] lambda.
//
// Line(a, b) names the rank-one left ideal of a 2x2 block whose rows are
// proportional to (b, -a). On a character pair Line(1, 0) keeps the first
// character and Line(0, 1) the second.

#include <optional>
#include <string>
#include <vector>

#include "quatcode/wedderburn.hpp"

namespace quatcode {

struct BlockClass {
  enum class Tag { Zero, Full, Line };
  Tag tag = Tag::Zero;
  FieldElem a, b;  // Line only; scaled so the last nonzero entry is 1

  static BlockClass zero() { return {}; }
  static BlockClass full() { return {Tag::Full, {}, {}}; }
  /// Throws InvalidClass for (0, 0).
  static BlockClass line(const FieldElem& a, const FieldElem& b);

  friend bool operator==(const BlockClass& x, const BlockClass& y);
};

std::string to_string(const BlockClass& c);

struct CodeDecomposition {
  std::vector<BlockClass> classes;  // block order of Wedderburn::blocks()
  std::size_t dimension = 0;

  friend bool operator==(const CodeDecomposition&, const CodeDecomposition&) = default;
};

/// F_q-dimension of a block component: 0, half the block, or the block.
std::size_t class_dimension(const BlockClass& c, const BlockDescriptor& d);

/// Classification from the rank of each block image of lambda.
/// Throws NotIdempotent.
CodeDecomposition classify_rank(const QElem& lambda, const Wedderburn& w);

/// Classification through phi = lambda e_f, phi~ = lambda e_{f*} and the
/// case ladder of the structure theorem. Pattern constants for g-side
/// character pairs are fixed once at construction by the rank path.
class TheoremPath {
 public:
  explicit TheoremPath(const Wedderburn& w);

  /// Throws NotIdempotent, CaseMismatch.
  CodeDecomposition classify(const QElem& lambda) const;
  const Wedderburn& wedderburn() const noexcept { return *w_; }

 private:
  struct Template {
    QElem value;
    BlockClass cls;
  };
  BlockClass classify_block(const QElem& lambda, std::size_t b) const;
  BlockClass ladder(std::size_t b, const QElem& phi, const QElem& phi_star) const;

  const Wedderburn* w_;
  std::vector<QElem> eps_, eps_star_;
  std::vector<std::vector<Template>> templates_;  // per block, character pairs only
};

CodeDecomposition classify_theorem(const QElem& lambda, const Wedderburn& w);

/// Idempotent whose rank classification is `classes`. Throws InvalidClass
/// for lines on QuadraticField and self-reciprocal Mat2 blocks, lines other
/// than (1,0), (0,1) on character pairs, and entries outside the block field.
QElem code_from_blocks(const std::vector<BlockClass>& classes, const Wedderburn& w);

/// Classes accepted by code_from_blocks on a block: Zero, Full, then lines.
/// Paired Mat2 blocks list Line(1,0) followed by Line(a,1) for a in index order.
std::uint64_t class_option_count(const BlockDescriptor& d);
BlockClass class_option(const BlockDescriptor& d, std::uint64_t idx);

}  // namespace quatcode
