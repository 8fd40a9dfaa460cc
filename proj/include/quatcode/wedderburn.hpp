#pragma once

// The Wedderburn isomorphism rho of F_q[Q_4n] onto a sum of blocks, one per
// factor of x^n - 1 (f-side) and x^n + 1 (g-side).
//
//   CharacterPair   x -> +-1, y -> (y_1, y_2), two scalar characters
//   QuadraticField  x -> -1,  y -> i in F_q(i), i^2 = -1
//   Mat2            x -> diag(t, 1/t), y -> [[0, 1], [c, 0]], c = t^n
//
// Mat2 blocks of self-reciprocal factors are written over the full extension
// F_q(t); their image is the twisted subalgebra {[[a, s(b)], [c b, s(a)]]}
// with s the automorphism t -> 1/t.

#include <optional>
#include <span>
#include <vector>

#include "quatcode/factor.hpp"
#include "quatcode/linalg.hpp"
#include "quatcode/quat.hpp"

namespace quatcode {

enum class Side { F, G };
enum class BlockKind { CharacterPair, QuadraticField, Mat2 };

const char* side_name(Side s) noexcept;
const char* kind_name(BlockKind k) noexcept;

struct BlockDescriptor {
  Side side = Side::F;
  std::size_t index = 0;  // 1-based within its side
  BlockKind kind = BlockKind::Mat2;
  bool self_reciprocal = true;
  Poly factor;
  std::optional<Poly> partner;
  /// Field of the payload entries: the base field for CharacterPair,
  /// a degree-2 extension for QuadraticField, F_q(t) for Mat2.
  FieldPtr field;
  FieldElem theta, theta_inv;  // Mat2
  Coeff x_value = 0;           // CharacterPair, QuadraticField
  Coeff y_values[2] = {0, 0};  // CharacterPair
  Coeff sign = 0;              // c = t^n as a base-field code (Mat2)
  std::size_t dim = 0;         // F_q-dimension of the block
  std::size_t field_degree = 1;
  std::vector<Vec> powers;     // t^k in base codes, 0 <= k < 2n (Mat2)

  /// Base-field coordinates used by flatten: 2 for scalar blocks, the first
  /// matrix row for self-reciprocal Mat2, all four entries otherwise.
  std::size_t coord_count() const noexcept;
};

/// Payload of one block. Entries: CharacterPair (chi_1, chi_2);
/// QuadraticField (z); Mat2 (a, b, c, d) row-major.
struct BlockImage {
  BlockKind kind = BlockKind::Mat2;
  std::vector<FieldElem> e;

  static BlockImage zero(const BlockDescriptor& d);
  static BlockImage identity(const BlockDescriptor& d);
  bool is_zero() const noexcept;
  BlockImage pow(std::uint64_t k) const;

  friend BlockImage operator+(const BlockImage& a, const BlockImage& b);
  friend BlockImage operator*(const BlockImage& a, const BlockImage& b);
  friend bool operator==(const BlockImage& a, const BlockImage& b) { return a.kind == b.kind && a.e == b.e; }
};

std::vector<BlockDescriptor> build_blocks(const FactorTable& table);

class Wedderburn {
 public:
  explicit Wedderburn(FactorTable table);

  const FactorTable& table() const noexcept { return table_; }
  const FieldPtr& field() const noexcept { return table_.field(); }
  unsigned n() const noexcept { return table_.n(); }
  const std::vector<BlockDescriptor>& blocks() const noexcept { return blocks_; }
  /// Square root of -1 used for g-side character pairs, if any.
  const std::optional<Coeff>& sqrt_minus_one() const noexcept { return sqrt_m1_; }

  std::vector<BlockImage> rho(const QElem& a) const;
  BlockImage rho_block(const QElem& a, std::size_t block) const;
  /// Throws InvalidArgument when the images are outside the range of rho.
  QElem rho_inverse(std::span<const BlockImage> images) const;
  Vec flatten(std::span<const BlockImage> images) const;

  /// e_b = rho^{-1}(identity in block b only), in block order.
  const std::vector<QElem>& central_idempotents() const noexcept { return central_; }
  /// Sum of block dimensions; throws AuditFailed unless it equals 4n.
  std::size_t dimension_audit() const;

  /// Cyclic idempotent of the block's factor and of its partner (the same
  /// element for self-reciprocal factors), modulo x^{2n} - 1.
  const CyclicElem& eps(std::size_t block) const { return eps_[block]; }
  const CyclicElem& eps_star(std::size_t block) const { return eps_star_[block]; }

  /// w(t^e) for e = +1 or -1 on a Mat2 block.
  FieldElem eval(std::size_t block, const CyclicElem& w, int e) const;

 private:
  FactorTable table_;
  std::vector<BlockDescriptor> blocks_;
  std::optional<Coeff> sqrt_m1_;
  Matrix inverse_;  // 4n x 4n, maps flattened images to coordinates
  std::vector<QElem> central_;
  std::vector<CyclicElem> eps_, eps_star_;
};

/// Generating idempotent of a left ideal, built blockwise through rho.
/// Throws NotALeftIdeal.
QElem idempotent_of_ideal(const SubspaceBasis& c, const Wedderburn& w);

}  // namespace quatcode
