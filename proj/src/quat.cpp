#include "quatcode/quat.hpp"

#include <deque>

namespace quatcode {

QElem::QElem(FieldPtr field, unsigned n) : u_(field, 2 * std::size_t{n}), v_(field, 2 * std::size_t{n}) {}

QElem::QElem(CyclicElem u, CyclicElem v) : u_(std::move(u)), v_(std::move(v)) {
  if (u_.field() != v_.field() || u_.modulus_degree() != v_.modulus_degree() || u_.modulus_degree() % 2 != 0)
    throw Error(Errc::ContextMismatch, "u and v must be residues modulo the same x^{2n} - 1");
}

QElem QElem::one(const FieldPtr& field, unsigned n) {
  return QElem(CyclicElem::one(field, 2 * std::size_t{n}), CyclicElem(field, 2 * std::size_t{n}));
}

QElem QElem::x(const FieldPtr& field, unsigned n) {
  return QElem(CyclicElem::x_pow(field, 2 * std::size_t{n}, 1), CyclicElem(field, 2 * std::size_t{n}));
}

QElem QElem::y(const FieldPtr& field, unsigned n) {
  return QElem(CyclicElem(field, 2 * std::size_t{n}), CyclicElem::one(field, 2 * std::size_t{n}));
}

QElem QElem::from_coords(const FieldPtr& field, unsigned n, const Vec& coords) {
  const std::size_t m = 2 * std::size_t{n};
  if (coords.size() != 2 * m) throw Error(Errc::InvalidArgument, "coordinate vector must have length 4n");
  return QElem(CyclicElem(field, m, Vec(coords.begin(), coords.begin() + static_cast<std::ptrdiff_t>(m))),
               CyclicElem(field, m, Vec(coords.begin() + static_cast<std::ptrdiff_t>(m), coords.end())));
}

QElem QElem::from_cyclic(const CyclicElem& w) { return QElem(w, CyclicElem(w.field(), w.modulus_degree())); }

Vec QElem::coords() const {
  Vec c = u_.coeffs();
  c.insert(c.end(), v_.coeffs().begin(), v_.coeffs().end());
  return c;
}

QElem QElem::left_mul_x() const {
  // x (u + y v) = x u + y x^{-1} v
  const std::size_t m = u_.modulus_degree();
  return QElem(u_.shifted(1), v_.shifted(m - 1));
}

QElem QElem::left_mul_y() const {
  // y (u + y v) = x^n v + y u
  return QElem(v_.shifted(n()), u_);
}

QElem operator*(const QElem& a, const QElem& b) {
  if (a.field() != b.field() || a.n() != b.n()) throw Error(Errc::ContextMismatch, "elements of different group algebras");
  const std::size_t n = a.n();
  CyclicElem u = a.u_ * b.u_ + (a.v_.conj() * b.v_).shifted(n);
  CyclicElem v = a.u_.conj() * b.v_ + a.v_ * b.u_;
  return QElem(std::move(u), std::move(v));
}

bool is_idempotent(const QElem& a) { return a * a == a; }

bool is_central(const QElem& a) {
  const QElem x = QElem::x(a.field(), a.n());
  const QElem y = QElem::y(a.field(), a.n());
  return a * x == x * a && a * y == y * a;
}

std::vector<QElem> SubspaceBasis::basis() const {
  std::vector<QElem> out;
  out.reserve(rank());
  for (const auto& row : space_.rows()) out.push_back(QElem::from_coords(field(), n_, row));
  return out;
}

SubspaceBasis left_ideal_closure(const FieldPtr& field, unsigned n, std::span<const QElem> gens) {
  SubspaceBasis c(field, n);
  std::deque<QElem> pending;
  for (const QElem& g : gens)
    if (c.add(g)) pending.push_back(g);
  // Images of an accepted spanning set suffice: rejected candidates lie in the
  // span of accepted ones.
  while (!pending.empty() && c.rank() < 4 * std::size_t{n}) {
    const QElem e = std::move(pending.front());
    pending.pop_front();
    QElem ex = e.left_mul_x();
    if (c.add(ex)) pending.push_back(std::move(ex));
    QElem ey = e.left_mul_y();
    if (c.add(ey)) pending.push_back(std::move(ey));
  }
  return c;
}

bool is_left_ideal(const SubspaceBasis& c) {
  for (const QElem& b : c.basis())
    if (!c.contains(b.left_mul_x()) || !c.contains(b.left_mul_y())) return false;
  return true;
}

}  // namespace quatcode
