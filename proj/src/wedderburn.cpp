#include "quatcode/wedderburn.hpp"

#include <algorithm>

namespace quatcode {

namespace {

// Base-field codes of an entry.
Vec codes_of(const FieldElem& e) {
  const Field& f = *e.field();
  if (f.is_extension()) return Vec(e.coeffs().begin(), e.coeffs().end());
  return {f.code_of(e)};
}

// w(s) for a scalar s of the base field.
Coeff eval_scalar(const Field& f, const CyclicElem& w, Coeff s) {
  Coeff acc = 0, pw = 1;
  for (std::size_t k = 0; k < w.modulus_degree(); ++k) {
    if (w[k] != 0) acc = f.add(acc, f.mul(w[k], pw));
    pw = f.mul(pw, s);
  }
  return acc;
}

}  // namespace

const char* side_name(Side s) noexcept { return s == Side::F ? "f" : "g"; }

const char* kind_name(BlockKind k) noexcept {
  switch (k) {
    case BlockKind::CharacterPair: return "character-pair";
    case BlockKind::QuadraticField: return "quadratic-field";
    case BlockKind::Mat2: return "mat2";
  }
  return "?";
}

std::size_t BlockDescriptor::coord_count() const noexcept {
  switch (kind) {
    case BlockKind::CharacterPair:
    case BlockKind::QuadraticField: return 2;
    case BlockKind::Mat2: return (self_reciprocal ? 2 : 4) * field_degree;
  }
  return 0;
}

BlockImage BlockImage::zero(const BlockDescriptor& d) {
  BlockImage b;
  b.kind = d.kind;
  const std::size_t count = d.kind == BlockKind::CharacterPair ? 2 : d.kind == BlockKind::QuadraticField ? 1 : 4;
  b.e.assign(count, d.field->zero());
  return b;
}

BlockImage BlockImage::identity(const BlockDescriptor& d) {
  BlockImage b = zero(d);
  switch (d.kind) {
    case BlockKind::CharacterPair: b.e = {d.field->one(), d.field->one()}; break;
    case BlockKind::QuadraticField: b.e[0] = d.field->one(); break;
    case BlockKind::Mat2:
      b.e[0] = d.field->one();
      b.e[3] = d.field->one();
      break;
  }
  return b;
}

bool BlockImage::is_zero() const noexcept {
  return std::all_of(e.begin(), e.end(), [](const FieldElem& v) { return v.is_zero(); });
}

BlockImage BlockImage::pow(std::uint64_t k) const {
  BlockImage result = *this;
  for (auto& v : result.e) v = v.field()->zero();
  switch (kind) {
    case BlockKind::CharacterPair: result.e = {e[0].field()->one(), e[1].field()->one()}; break;
    case BlockKind::QuadraticField: result.e[0] = e[0].field()->one(); break;
    case BlockKind::Mat2:
      result.e[0] = e[0].field()->one();
      result.e[3] = e[0].field()->one();
      break;
  }
  BlockImage base = *this;
  while (k) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

BlockImage operator+(const BlockImage& a, const BlockImage& b) {
  if (a.kind != b.kind || a.e.size() != b.e.size()) throw Error(Errc::ContextMismatch, "block images of different kinds");
  BlockImage r = a;
  for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] += b.e[i];
  return r;
}

BlockImage operator*(const BlockImage& a, const BlockImage& b) {
  if (a.kind != b.kind || a.e.size() != b.e.size()) throw Error(Errc::ContextMismatch, "block images of different kinds");
  BlockImage r = a;
  if (a.kind == BlockKind::Mat2) {
    r.e[0] = a.e[0] * b.e[0] + a.e[1] * b.e[2];
    r.e[1] = a.e[0] * b.e[1] + a.e[1] * b.e[3];
    r.e[2] = a.e[2] * b.e[0] + a.e[3] * b.e[2];
    r.e[3] = a.e[2] * b.e[1] + a.e[3] * b.e[3];
  } else {
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = a.e[i] * b.e[i];
  }
  return r;
}

std::vector<BlockDescriptor> build_blocks(const FactorTable& table) {
  const FieldPtr& base = table.field();
  const Field& f = *base;
  const unsigned n = table.n();
  const std::uint64_t q = f.cardinality();
  const auto s = sqrt_minus_one(base);
  const Coeff one = 1, minus_one = f.neg(1);

  std::vector<BlockDescriptor> out;
  auto add_side = [&](Side side, const std::vector<ReciprocalFactor>& factors, std::size_t scalar_count) {
    for (std::size_t idx = 0; idx < factors.size(); ++idx) {
      const ReciprocalFactor& rf = factors[idx];
      BlockDescriptor d;
      d.side = side;
      d.index = idx + 1;
      d.self_reciprocal = rf.self_reciprocal();
      d.factor = rf.poly;
      d.partner = rf.partner;
      if (idx < scalar_count) {
        d.x_value = side == Side::F && idx == 0 ? one : minus_one;
        if (side == Side::F) {
          d.kind = BlockKind::CharacterPair;
          d.field = base;
          d.y_values[0] = one;
          d.y_values[1] = minus_one;
        } else if (q % 4 == 1) {
          d.kind = BlockKind::CharacterPair;
          d.field = base;
          d.y_values[0] = f.code_of(*s);
          d.y_values[1] = f.neg(d.y_values[0]);
        } else {
          d.kind = BlockKind::QuadraticField;
          d.field = Field::extend(base, Poly(base, {1, 0, 1}));
        }
        d.dim = 2;
        d.field_degree = d.kind == BlockKind::QuadraticField ? 2 : 1;
      } else {
        d.kind = BlockKind::Mat2;
        d.field = rf.splitting;
        d.theta = rf.root;
        d.theta_inv = rf.root_inv;
        d.field_degree = rf.degree();
        d.dim = (d.self_reciprocal ? 2 : 4) * rf.degree();
        d.sign = side == Side::F ? one : minus_one;
        d.powers.reserve(2 * std::size_t{n});
        FieldElem pw = d.field->one();
        for (std::size_t k = 0; k < 2 * std::size_t{n}; ++k) {
          d.powers.push_back(codes_of(pw));
          pw *= d.theta;
        }
        if (!(d.theta.pow(n) == d.field->elem(d.sign)))
          throw Error(Errc::AuditFailed, "root power t^n does not match the block sign");
      }
      out.push_back(std::move(d));
    }
  };
  add_side(Side::F, table.f_side(), table.delta());
  add_side(Side::G, table.g_side(), table.mu());
  return out;
}

Wedderburn::Wedderburn(FactorTable table) : table_(std::move(table)), blocks_(build_blocks(table_)) {
  const FieldPtr& base = field();
  if (auto s = quatcode::sqrt_minus_one(base); s && base->cardinality() % 4 == 1) sqrt_m1_ = base->code_of(*s);
  const std::size_t m = 2 * std::size_t{n()};
  for (const auto& d : blocks_) {
    eps_.push_back(idempotent_oracle(d.factor, m));
    eps_star_.push_back(d.partner ? idempotent_oracle(*d.partner, m) : eps_.back());
  }
  dimension_audit();

  // Columns of the coordinate matrix are flattened images of basis elements.
  const std::size_t dim = 4 * std::size_t{n()};
  Matrix r(dim, Vec(dim, 0));
  for (std::size_t j = 0; j < dim; ++j) {
    Vec unit(dim, 0);
    unit[j] = 1;
    const auto images = rho(QElem::from_coords(base, n(), unit));
    const Vec col = flatten(images);
    for (std::size_t i = 0; i < dim; ++i) r[i][j] = col[i];
  }
  auto inv = left_inverse(base, r, dim);
  if (!inv) throw Error(Errc::SingularSystem, "rho is not invertible on the constructed blocks");
  inverse_ = std::move(*inv);

  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    std::vector<BlockImage> images;
    for (std::size_t k = 0; k < blocks_.size(); ++k)
      images.push_back(k == b ? BlockImage::identity(blocks_[k]) : BlockImage::zero(blocks_[k]));
    QElem e = rho_inverse(images);
    CyclicElem expected = eps_[b];
    if (blocks_[b].partner) expected += eps_star_[b];
    if (!(e == QElem::from_cyclic(expected)))
      throw Error(Errc::AuditFailed, "central idempotent differs from the cyclic idempotent sum");
    central_.push_back(std::move(e));
  }
}

std::size_t Wedderburn::dimension_audit() const {
  std::size_t total = 0;
  for (const auto& d : blocks_) total += d.dim;
  if (total != 4 * std::size_t{n()})
    throw Error(Errc::AuditFailed, "block dimensions sum to " + std::to_string(total) + ", expected " +
                                       std::to_string(4 * std::size_t{n()}));
  return total;
}

FieldElem Wedderburn::eval(std::size_t block, const CyclicElem& w, int e) const {
  const BlockDescriptor& d = blocks_.at(block);
  const Field& f = *field();
  const std::size_t m = w.modulus_degree();
  Vec acc(d.field_degree, 0);
  if (f.is_prime_field() && f.characteristic() < (1u << 16)) {
    std::vector<std::uint64_t> wide(d.field_degree, 0);
    for (std::size_t k = 0; k < m; ++k) {
      const std::uint64_t c = w[k];
      if (c == 0) continue;
      const Vec& pw = d.powers[e > 0 ? k : (m - k) % m];
      for (std::size_t i = 0; i < wide.size(); ++i) wide[i] += c * pw[i];
    }
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = static_cast<Coeff>(wide[i] % f.characteristic());
  } else {
    for (std::size_t k = 0; k < m; ++k) {
      const Coeff c = w[k];
      if (c == 0) continue;
      const Vec& pw = d.powers[e > 0 ? k : (m - k) % m];
      for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = f.add(acc[i], f.mul(c, pw[i]));
    }
  }
  return FieldElem(d.field, std::move(acc));
}

BlockImage Wedderburn::rho_block(const QElem& a, std::size_t block) const {
  if (a.field() != field() || a.n() != n()) throw Error(Errc::ContextMismatch, "element of a different group algebra");
  const BlockDescriptor& d = blocks_.at(block);
  const Field& f = *field();
  BlockImage img;
  img.kind = d.kind;
  switch (d.kind) {
    case BlockKind::CharacterPair: {
      const Coeff u = eval_scalar(f, a.u(), d.x_value);
      const Coeff v = eval_scalar(f, a.v(), d.x_value);
      img.e = {f.elem(f.add(u, f.mul(d.y_values[0], v))), f.elem(f.add(u, f.mul(d.y_values[1], v)))};
      break;
    }
    case BlockKind::QuadraticField:
      img.e = {FieldElem(d.field, {eval_scalar(f, a.u(), d.x_value), eval_scalar(f, a.v(), d.x_value)})};
      break;
    case BlockKind::Mat2: {
      const FieldElem v_theta = eval(block, a.v(), +1);
      img.e = {eval(block, a.u(), +1), eval(block, a.v(), -1), v_theta * d.field->elem(d.sign), eval(block, a.u(), -1)};
      break;
    }
  }
  return img;
}

std::vector<BlockImage> Wedderburn::rho(const QElem& a) const {
  std::vector<BlockImage> out;
  out.reserve(blocks_.size());
  for (std::size_t b = 0; b < blocks_.size(); ++b) out.push_back(rho_block(a, b));
  return out;
}

Vec Wedderburn::flatten(std::span<const BlockImage> images) const {
  if (images.size() != blocks_.size()) throw Error(Errc::InvalidArgument, "one image per block expected");
  Vec out;
  out.reserve(4 * std::size_t{n()});
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    const BlockDescriptor& d = blocks_[b];
    const BlockImage& img = images[b];
    if (img.kind != d.kind) throw Error(Errc::ContextMismatch, "image kind does not match its block");
    for (const FieldElem& v : img.e)
      if (v.field() != d.field) throw Error(Errc::ContextMismatch, "image entry outside the block field");
    switch (d.kind) {
      case BlockKind::CharacterPair:
        out.push_back(d.field->code_of(img.e[0]));
        out.push_back(d.field->code_of(img.e[1]));
        break;
      case BlockKind::QuadraticField: {
        const Vec c = codes_of(img.e[0]);
        out.insert(out.end(), c.begin(), c.end());
        break;
      }
      case BlockKind::Mat2: {
        const std::size_t entries = d.self_reciprocal ? 2 : 4;
        for (std::size_t i = 0; i < entries; ++i) {
          const Vec c = codes_of(img.e[i]);
          out.insert(out.end(), c.begin(), c.end());
        }
        break;
      }
    }
  }
  return out;
}

QElem Wedderburn::rho_inverse(std::span<const BlockImage> images) const {
  const QElem a = QElem::from_coords(field(), n(), mat_vec(field(), inverse_, flatten(images)));
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    if (!(rho_block(a, b) == images[b])) throw Error(Errc::InvalidArgument, "images are outside the range of rho");
  return a;
}

QElem idempotent_of_ideal(const SubspaceBasis& c, const Wedderburn& w) {
  if (c.field() != w.field() || c.n() != w.n()) throw Error(Errc::ContextMismatch, "subspace of a different group algebra");
  if (!is_left_ideal(c)) throw Error(Errc::NotALeftIdeal, "subspace is not closed under left multiplication");
  const auto basis = c.basis();
  std::vector<BlockImage> out;
  for (std::size_t b = 0; b < w.blocks().size(); ++b) {
    const BlockDescriptor& d = w.blocks()[b];
    std::vector<BlockImage> imgs;
    imgs.reserve(basis.size());
    for (const QElem& e : basis) imgs.push_back(w.rho_block(e, b));
    BlockImage res = BlockImage::zero(d);
    switch (d.kind) {
      case BlockKind::CharacterPair:
        for (const auto& img : imgs)
          for (std::size_t k = 0; k < 2; ++k)
            if (!img.e[k].is_zero()) res.e[k] = d.field->one();
        break;
      case BlockKind::QuadraticField:
        if (std::any_of(imgs.begin(), imgs.end(), [](const BlockImage& i) { return !i.is_zero(); }))
          res = BlockImage::identity(d);
        break;
      case BlockKind::Mat2: {
        // K-rank of the stacked rows.
        std::optional<std::pair<FieldElem, FieldElem>> first;
        bool full = false;
        for (const auto& img : imgs) {
          for (std::size_t r = 0; r < 2 && !full; ++r) {
            const FieldElem& p = img.e[2 * r];
            const FieldElem& s = img.e[2 * r + 1];
            if (p.is_zero() && s.is_zero()) continue;
            if (!first) {
              first.emplace(p, s);
            } else if (!(first->first * s - first->second * p).is_zero()) {
              full = true;
            }
          }
        }
        if (full) {
          res = BlockImage::identity(d);
        } else if (first) {
          // Rank one: M^2 = tr(M) M, so M / tr(M) is idempotent with the same row space.
          bool found = false;
          for (const auto& img : imgs) {
            const FieldElem tr = img.e[0] + img.e[3];
            if (tr.is_zero()) continue;
            const FieldElem inv = tr.inv();
            for (std::size_t i = 0; i < 4; ++i) res.e[i] = img.e[i] * inv;
            found = true;
            break;
          }
          if (!found) throw Error(Errc::AuditFailed, "rank-one block component without an element of nonzero trace");
        }
        break;
      }
    }
    out.push_back(std::move(res));
  }
  return w.rho_inverse(out);
}

}  // namespace quatcode
