#include "quatcode/linear_code.hpp"

#include <sstream>

#include <json.hpp>

namespace quatcode {

LinearCode to_linear(const SubspaceBasis& c) {
  LinearCode code;
  code.field = c.field();
  code.n = c.n();
  code.length = 4 * std::size_t{c.n()};
  code.generator = c.space().rows();
  code.check = nullspace(c.space());
  return code;
}

std::optional<std::vector<std::uint64_t>> weight_enumerator(const LinearCode& code, std::uint64_t budget) {
  const Field& f = *code.field;
  const std::uint64_t q = f.cardinality();
  const std::size_t k = code.k();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > budget / q) return std::nullopt;
    total *= q;
  }
  if (total > budget) return std::nullopt;

  // Rows z^t G_i span the code over F_p; every digit step adds one row.
  const std::uint32_t p = f.characteristic();
  std::vector<Vec> rows;
  const Coeff z = f.degree() > 1 ? Coeff{p} : Coeff{1};
  Coeff zt = 1;
  for (std::size_t t = 0; t < f.degree(); ++t) {
    for (const Vec& g : code.generator) {
      Vec r(g.size());
      for (std::size_t j = 0; j < g.size(); ++j) r[j] = f.mul(zt, g[j]);
      rows.push_back(std::move(r));
    }
    zt = f.mul(zt, z);
  }

  std::vector<std::uint64_t> counts(code.length + 1, 0);
  Vec word(code.length, 0);
  std::size_t weight = 0;
  std::vector<std::uint32_t> digits(rows.size(), 0);
  counts[0] = 1;
  for (std::uint64_t step = 1; step < total; ++step) {
    std::size_t d = 0;
    for (;;) {
      const Vec& r = rows[d];
      for (std::size_t j = 0; j < word.size(); ++j) {
        if (r[j] == 0) continue;
        const bool was = word[j] != 0;
        word[j] = f.add(word[j], r[j]);
        weight += static_cast<std::size_t>(word[j] != 0) - static_cast<std::size_t>(was);
      }
      if (++digits[d] < p) break;
      digits[d++] = 0;
    }
    ++counts[weight];
  }
  return counts;
}

std::optional<std::size_t> min_distance(const LinearCode& code, std::uint64_t budget) {
  if (code.k() == 0) throw Error(Errc::InvalidArgument, "minimum distance of the zero code is undefined");
  const auto w = weight_enumerator(code, budget);
  if (!w) return std::nullopt;
  for (std::size_t i = 1; i < w->size(); ++i)
    if ((*w)[i] != 0) return i;
  return std::nullopt;
}

bool is_left_invariant(const LinearCode& code) {
  RowSpace space(code.field, code.length);
  for (const Vec& g : code.generator) space.add(g);
  for (const Vec& g : code.generator) {
    const QElem a = QElem::from_coords(code.field, code.n, g);
    if (!space.contains(a.left_mul_x().coords()) || !space.contains(a.left_mul_y().coords())) return false;
  }
  return true;
}

namespace {

void write_rows(std::ostringstream& os, const Matrix& m) {
  for (const Vec& row : m) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
    os << '\n';
  }
}

}  // namespace

std::string export_text(const LinearCode& code) {
  std::ostringstream os;
  os << "generator\n";
  write_rows(os, code.generator);
  os << "check\n";
  write_rows(os, code.check);
  return os.str();
}

std::string export_json(const LinearCode& code) {
  nlohmann::json j;
  j["q"] = code.field->cardinality();
  j["n"] = code.n;
  j["length"] = code.length;
  j["k"] = code.k();
  j["generator"] = code.generator;
  j["check"] = code.check;
  return j.dump();
}

}  // namespace quatcode
