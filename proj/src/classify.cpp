#include "quatcode/classify.hpp"

#include <sstream>

namespace quatcode {

BlockClass BlockClass::line(const FieldElem& a, const FieldElem& b) {
  if (a.field() != b.field()) throw Error(Errc::InvalidClass, "line parameters from different fields");
  if (a.is_zero() && b.is_zero()) throw Error(Errc::InvalidClass, "Line(0, 0) is not a line");
  BlockClass c;
  c.tag = Tag::Line;
  if (b.is_zero()) {
    c.a = a.field()->one();
    c.b = b;
  } else {
    c.a = a / b;
    c.b = b.field()->one();
  }
  return c;
}

bool operator==(const BlockClass& x, const BlockClass& y) {
  if (x.tag != y.tag) return false;
  return x.tag != BlockClass::Tag::Line || (x.a == y.a && x.b == y.b);
}

std::string to_string(const BlockClass& c) {
  switch (c.tag) {
    case BlockClass::Tag::Zero: return "0";
    case BlockClass::Tag::Full: return "full";
    case BlockClass::Tag::Line: return "I(" + to_string(c.a) + "," + to_string(c.b) + ")";
  }
  return "?";
}

std::size_t class_dimension(const BlockClass& c, const BlockDescriptor& d) {
  switch (c.tag) {
    case BlockClass::Tag::Zero: return 0;
    case BlockClass::Tag::Full: return d.dim;
    case BlockClass::Tag::Line: return d.dim / 2;
  }
  return 0;
}

namespace {

void require_idempotent(const QElem& lambda) {
  if (!is_idempotent(lambda)) throw Error(Errc::NotIdempotent, "lambda is not idempotent");
}

BlockClass classify_image(const BlockImage& img, const BlockDescriptor& d) {
  switch (d.kind) {
    case BlockKind::CharacterPair: {
      const bool first = !img.e[0].is_zero(), second = !img.e[1].is_zero();
      const FieldElem one = d.field->one(), zero = d.field->zero();
      if (first && second) return BlockClass::full();
      if (first) return BlockClass::line(one, zero);
      if (second) return BlockClass::line(zero, one);
      return BlockClass::zero();
    }
    case BlockKind::QuadraticField: return img.is_zero() ? BlockClass::zero() : BlockClass::full();
    case BlockKind::Mat2: {
      if (img.is_zero()) return BlockClass::zero();
      if (!(img.e[0] * img.e[3] - img.e[1] * img.e[2]).is_zero()) return BlockClass::full();
      const bool top = !(img.e[0].is_zero() && img.e[1].is_zero());
      const FieldElem& p = top ? img.e[0] : img.e[2];
      const FieldElem& s = top ? img.e[1] : img.e[3];
      return BlockClass::line(-s, p);
    }
  }
  throw Error(Errc::InvalidArgument, "unknown block kind");
}

CodeDecomposition decomposition(std::vector<BlockClass> classes, const Wedderburn& w) {
  CodeDecomposition out;
  for (std::size_t b = 0; b < classes.size(); ++b) out.dimension += class_dimension(classes[b], w.blocks()[b]);
  out.classes = std::move(classes);
  return out;
}

}  // namespace

CodeDecomposition classify_rank(const QElem& lambda, const Wedderburn& w) {
  require_idempotent(lambda);
  std::vector<BlockClass> classes;
  for (std::size_t b = 0; b < w.blocks().size(); ++b) classes.push_back(classify_image(w.rho_block(lambda, b), w.blocks()[b]));
  return decomposition(std::move(classes), w);
}

TheoremPath::TheoremPath(const Wedderburn& w) : w_(&w) {
  const FieldPtr& field = w.field();
  const unsigned n = w.n();
  const Coeff half = field->inv(field->from_int(2));
  const QElem y = QElem::y(field, n);
  templates_.resize(w.blocks().size());
  for (std::size_t b = 0; b < w.blocks().size(); ++b) {
    const BlockDescriptor& d = w.blocks()[b];
    eps_.push_back(QElem::from_cyclic(w.eps(b)));
    eps_star_.push_back(QElem::from_cyclic(w.eps_star(b)));
    if (d.kind != BlockKind::CharacterPair) continue;
    // f-side: (1 +- y)/2 e_f. g-side: (e_g +- s y e_g)/2 with s^2 = -1.
    const QElem& e = eps_.back();
    const Coeff s = d.side == Side::F ? Coeff{1} : w.sqrt_minus_one().value();
    const QElem ye = (y * e).scaled(s);
    for (const QElem& t : {(e + ye).scaled(half), (e - ye).scaled(half)})
      templates_[b].push_back({t, classify_image(w.rho_block(t, b), d)});
  }
}

BlockClass TheoremPath::ladder(std::size_t b, const QElem& phi, const QElem& phi_star) const {
  const BlockDescriptor& d = w_->blocks()[b];
  const FieldElem vt_inv = w_->eval(b, phi_star.v(), -1);
  const FieldElem u_theta = w_->eval(b, phi.u(), +1);
  const FieldElem ut_inv = w_->eval(b, phi_star.u(), -1);
  const FieldElem cv_theta = w_->eval(b, phi.v(), +1) * d.field->elem(d.sign);
  if (vt_inv.is_zero() && u_theta.is_zero() && ut_inv.is_zero() && cv_theta.is_zero()) return BlockClass::zero();
  if (phi.v().is_zero() && phi_star.v().is_zero() && phi.u() == w_->eps(b) && phi_star.u() == w_->eps_star(b))
    return BlockClass::full();
  if (!(vt_inv.is_zero() && u_theta.is_zero())) return BlockClass::line(vt_inv, -u_theta);
  if (!(ut_inv.is_zero() && cv_theta.is_zero())) return BlockClass::line(ut_inv, -cv_theta);
  throw Error(Errc::CaseMismatch, "no case of the ladder applies");
}

BlockClass TheoremPath::classify_block(const QElem& lambda, std::size_t b) const {
  const BlockDescriptor& d = w_->blocks()[b];
  const QElem phi = lambda.mul_cyclic(w_->eps(b));
  if (d.kind == BlockKind::Mat2 && !d.self_reciprocal) return ladder(b, phi, lambda.mul_cyclic(w_->eps_star(b)));
  if (phi.is_zero()) return BlockClass::zero();
  if (phi == eps_[b]) return BlockClass::full();
  switch (d.kind) {
    case BlockKind::CharacterPair:
      for (const Template& t : templates_[b])
        if (phi == t.value) return t.cls;
      break;
    case BlockKind::QuadraticField: break;
    case BlockKind::Mat2: return ladder(b, phi, phi);
  }
  throw Error(Errc::CaseMismatch, std::string("no theorem case matches block ") + side_name(d.side) +
                                      std::to_string(d.index));
}

CodeDecomposition TheoremPath::classify(const QElem& lambda) const {
  require_idempotent(lambda);
  std::vector<BlockClass> classes;
  for (std::size_t b = 0; b < w_->blocks().size(); ++b) classes.push_back(classify_block(lambda, b));
  return decomposition(std::move(classes), *w_);
}

CodeDecomposition classify_theorem(const QElem& lambda, const Wedderburn& w) { return TheoremPath(w).classify(lambda); }

QElem code_from_blocks(const std::vector<BlockClass>& classes, const Wedderburn& w) {
  if (classes.size() != w.blocks().size()) throw Error(Errc::InvalidClass, "one class per block expected");
  std::vector<BlockImage> images;
  for (std::size_t b = 0; b < classes.size(); ++b) {
    const BlockDescriptor& d = w.blocks()[b];
    const BlockClass& c = classes[b];
    if (c.tag == BlockClass::Tag::Zero) {
      images.push_back(BlockImage::zero(d));
      continue;
    }
    if (c.tag == BlockClass::Tag::Full) {
      images.push_back(BlockImage::identity(d));
      continue;
    }
    if (c.a.field() != d.field || c.b.field() != d.field)
      throw Error(Errc::InvalidClass, "line parameters outside the block field");
    BlockImage img = BlockImage::zero(d);
    switch (d.kind) {
      case BlockKind::CharacterPair:
        if (c.b.is_zero()) {
          img.e[0] = d.field->one();
        } else if (c.a.is_zero()) {
          img.e[1] = d.field->one();
        } else {
          throw Error(Errc::InvalidClass, "character pairs only admit Line(1,0) and Line(0,1)");
        }
        break;
      case BlockKind::QuadraticField: throw Error(Errc::InvalidClass, "quadratic-field blocks admit no lines");
      case BlockKind::Mat2: {
        if (d.self_reciprocal) throw Error(Errc::InvalidClass, "self-reciprocal blocks admit only 0 and the full block");
        // P = w r with r = (b, -a) and r w = 1.
        const FieldElem r0 = c.b, r1 = -c.a;
        if (!r0.is_zero()) {
          img.e[0] = d.field->one();
          img.e[1] = r1 / r0;
        } else {
          img.e[3] = d.field->one();
        }
        break;
      }
    }
    images.push_back(std::move(img));
  }
  return w.rho_inverse(images);
}

std::uint64_t class_option_count(const BlockDescriptor& d) {
  switch (d.kind) {
    case BlockKind::CharacterPair: return 4;
    case BlockKind::QuadraticField: return 2;
    case BlockKind::Mat2: return d.self_reciprocal ? 2 : 3 + d.field->cardinality();
  }
  return 0;
}

BlockClass class_option(const BlockDescriptor& d, std::uint64_t idx) {
  if (idx >= class_option_count(d)) throw Error(Errc::InvalidArgument, "class option index out of range");
  if (idx == 0) return BlockClass::zero();
  if (idx == 1) return BlockClass::full();
  const FieldElem one = d.field->one(), zero = d.field->zero();
  if (idx == 2) return BlockClass::line(one, zero);
  if (d.kind == BlockKind::CharacterPair) return BlockClass::line(zero, one);
  return BlockClass::line(d.field->from_index(idx - 3), one);
}

}  // namespace quatcode
