#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "quatcode/induced.hpp"
#include "quatcode/linear_code.hpp"
#include "quatcode/selftest.hpp"

namespace quatcode::cli {

namespace {

using nlohmann::ordered_json;

constexpr std::uint64_t kDefaultSeed = 1;

struct Config {
  std::uint32_t p = 0;
  unsigned m = 1;
  unsigned n = 0;
  unsigned ell = 0;
  std::string h;
  std::string elem;
  std::string format = "table";
  std::uint64_t budget = kDefaultBudget;
  std::optional<std::uint64_t> seed;
  std::vector<std::uint64_t> qs{3, 5, 7, 9, 11, 13};
  unsigned n_min = 2, n_max = 12;
};

std::uint64_t resolve_seed(const Config& c) {
  if (c.seed) return *c.seed;
  if (const char* env = std::getenv("QUATCODE_SEED")) {
    try {
      std::size_t pos = 0;
      const auto v = std::stoull(env, &pos);
      if (pos == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw Error(Errc::ParseError, std::string("QUATCODE_SEED is not an unsigned integer: ") + env);
  }
  return kDefaultSeed;
}

FieldPtr make_field(const Config& c) { return c.m == 1 ? Field::prime(c.p) : Field::galois(c.p, c.m); }

ordered_json field_params(const Config& c, const FieldPtr& f) {
  ordered_json j;
  j["p"] = c.p;
  j["m"] = c.m;
  j["q"] = f->cardinality();
  j["n"] = c.n;
  return j;
}

std::string poly_text(const CyclicElem& w) { return to_string(w.to_poly()); }

ordered_json factor_list(const std::vector<ReciprocalFactor>& v) {
  ordered_json arr = ordered_json::array();
  for (std::size_t i = 0; i < v.size(); ++i) {
    ordered_json e;
    e["index"] = i + 1;
    e["factor"] = to_string(v[i].poly);
    e["partner"] = v[i].partner ? to_string(*v[i].partner) : "self";
    e["degree"] = v[i].degree();
    arr.push_back(e);
  }
  return arr;
}

ordered_json block_row(const BlockDescriptor& d) {
  ordered_json e;
  e["side"] = side_name(d.side);
  e["index"] = d.index;
  e["kind"] = kind_name(d.kind);
  e["factor"] = to_string(d.factor);
  e["partner"] = d.partner ? to_string(*d.partner) : "self";
  e["field_degree"] = d.field_degree;
  e["dim"] = d.dim;
  return e;
}

QElem parse_elem(const FieldPtr& f, unsigned n, const std::string& text) {
  const auto semi = text.find(';');
  if (semi == std::string::npos || text.find(';', semi + 1) != std::string::npos)
    throw Error(Errc::ParseError, "element must be written as \"u ; v\"");
  const std::size_t m = 2 * std::size_t{n};
  return QElem(CyclicElem::from_poly(parse_poly(f, text.substr(0, semi)), m),
               CyclicElem::from_poly(parse_poly(f, text.substr(semi + 1)), m));
}

ordered_json cmd_factor(const Config& c, ordered_json& flags) {
  const FieldPtr f = make_field(c);
  const FactorTable t = FactorTable::build(f, c.n);
  ordered_json r;
  r["r"] = t.r();
  r["s"] = t.s();
  r["t"] = t.t();
  r["k"] = t.k();
  r["delta"] = t.delta();
  r["mu"] = t.mu();
  r["f_side"] = factor_list(t.f_side());
  r["g_side"] = factor_list(t.g_side());
  flags = ordered_json::object();
  return r;
}

ordered_json cmd_blocks(const Config& c, ordered_json& flags) {
  const Wedderburn w(FactorTable::build(make_field(c), c.n));
  ordered_json r;
  r["blocks"] = ordered_json::array();
  for (const auto& d : w.blocks()) r["blocks"].push_back(block_row(d));
  r["total_dim"] = w.dimension_audit();
  flags["dimension_audit"] = true;
  return r;
}

ordered_json cmd_classify(const Config& c, ordered_json& flags, std::ostream& err) {
  const FieldPtr f = make_field(c);
  require_coprime(f, c.n);
  const Wedderburn w(FactorTable::build(f, c.n));
  const QElem input = parse_elem(f, c.n, c.elem);
  ordered_json r;
  r["input"] = {{"u", poly_text(input.u())}, {"v", poly_text(input.v())}};
  QElem lambda = input;
  const bool idem = is_idempotent(input);
  r["input_idempotent"] = idem;
  if (!idem) {
    const QElem gens[] = {input};
    lambda = idempotent_of_ideal(left_ideal_closure(f, c.n, gens), w);
    err << "notice: input is not idempotent; classifying the generating idempotent of its left ideal\n";
  }
  r["idempotent"] = {{"u", poly_text(lambda.u())}, {"v", poly_text(lambda.v())}};

  const CodeDecomposition by_rank = classify_rank(lambda, w);
  const CodeDecomposition by_theorem = classify_theorem(lambda, w);
  r["blocks"] = ordered_json::array();
  for (std::size_t b = 0; b < w.blocks().size(); ++b) {
    const auto& d = w.blocks()[b];
    ordered_json e;
    e["side"] = side_name(d.side);
    e["index"] = d.index;
    e["kind"] = kind_name(d.kind);
    e["rank_path"] = to_string(by_rank.classes[b]);
    e["theorem_path"] = to_string(by_theorem.classes[b]);
    r["blocks"].push_back(e);
  }
  r["dimension"] = by_rank.dimension;

  const QElem gens[] = {lambda};
  const SubspaceBasis closure = left_ideal_closure(f, c.n, gens);
  r["closure_rank"] = closure.rank();
  const LinearCode code = to_linear(closure);
  ordered_json lin;
  lin["length"] = code.length;
  lin["k"] = code.k();
  std::optional<std::size_t> d;
  if (code.k() > 0) d = min_distance(code, c.budget);
  lin["d"] = d ? ordered_json(*d) : ordered_json(nullptr);
  r["linear"] = lin;

  flags["paths_agree"] = by_rank == by_theorem;
  flags["dimension_matches_closure"] = by_rank.dimension == closure.rank();
  return r;
}

ordered_json sets_json(const DivisibilitySets& s) {
  ordered_json j;
  for (std::size_t i = 0; i < 6; ++i) j["S" + std::to_string(i + 1)] = s.s[i];
  return j;
}

ordered_json cmd_induce(const Config& c, ordered_json& flags) {
  const FieldPtr f = make_field(c);
  require_coprime(f, c.n);
  const Wedderburn w(FactorTable::build(f, c.n));
  const InducedSpec spec{c.ell, parse_poly(f, c.h)};
  validate(spec, c.n);

  const SmallRing small = SmallRing::build(f, 2 * c.n / c.ell);
  std::size_t lemmas = 0;
  for (Side side : {Side::F, Side::G}) {
    const auto& list = side == Side::F ? small.f_side : small.g_side;
    for (std::size_t i = 0; i < list.size(); ++i) {
      lemma_idem_pullback(small, side, i + 1, false, c.ell, w);
      ++lemmas;
      if (list[i].partner) {
        lemma_idem_pullback(small, side, i + 1, true, c.ell, w);
        ++lemmas;
      }
    }
  }
  const InducedCode ic = induced_code(spec, w);

  ordered_json r;
  r["small_modulus"] = small.modulus;
  r["sets"] = sets_json(ic.sets);
  r["blocks"] = ordered_json::array();
  for (std::size_t b = 0; b < w.blocks().size(); ++b) {
    const auto& d = w.blocks()[b];
    ordered_json e;
    e["side"] = side_name(d.side);
    e["index"] = d.index;
    e["kind"] = kind_name(d.kind);
    e["class"] = to_string(ic.decomposition.classes[b]);
    e["predicted"] = to_string(ic.predicted.classes[b]);
    r["blocks"].push_back(e);
  }
  r["dimension"] = ic.decomposition.dimension;
  r["closure_rank"] = ic.closure_rank;
  r["idempotent"] = {{"u", poly_text(ic.idempotent.u())}, {"v", poly_text(ic.idempotent.v())}};
  r["lemma_identities"] = lemmas;
  flags["theorem_agrees"] = true;
  flags["convention_flip"] = ic.convention_flip;
  flags["lemma_holds"] = true;
  return r;
}

ordered_json cmd_selftest(const Config& c, ordered_json& flags, bool& passed, std::ostream& err) {
  const Grid grid = make_grid(c.qs, c.n_min, c.n_max);
  for (const GridCell& cell : grid.skipped) err << "notice: skipping " << cell.label() << ": gcd(4n, q) != 1\n";
  const SelftestReport rep = run_selftest(grid, resolve_seed(c));
  ordered_json r;
  r["seed"] = rep.seed;
  r["skipped"] = rep.skipped;
  r["criteria"] = ordered_json::array();
  for (const auto& cr : rep.results) {
    ordered_json e;
    e["id"] = cr.id;
    e["name"] = cr.name;
    e["checks"] = cr.checks;
    e["failures"] = cr.failures;
    e["passed"] = cr.passed();
    e["notes"] = cr.notes;
    r["criteria"].push_back(e);
  }
  passed = rep.passed();
  flags["all_pass"] = passed;
  return r;
}

std::string scalar_text(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "unknown";
  return v.dump();
}

bool is_flat(const ordered_json& v) { return !v.is_object() && !(v.is_array() && !v.empty() && !v.front().is_primitive()); }

void render(const ordered_json& v, int indent, std::ostream& os) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (auto it = v.begin(); it != v.end(); ++it) {
    const ordered_json& val = it.value();
    os << pad << it.key() << ':';
    if (val.is_object()) {
      os << '\n';
      render(val, indent + 2, os);
    } else if (val.is_array() && !is_flat(val)) {
      os << '\n';
      for (const auto& item : val) {
        os << pad << "  -";
        for (auto f = item.begin(); f != item.end(); ++f) {
          os << ' ' << f.key() << '=';
          if (f.value().is_array()) {
            std::string joined;
            for (const auto& x : f.value()) joined += (joined.empty() ? "" : "; ") + scalar_text(x);
            os << '[' << joined << ']';
          } else {
            os << scalar_text(f.value());
          }
        }
        os << '\n';
      }
    } else if (val.is_array()) {
      std::string joined;
      for (const auto& x : val) joined += (joined.empty() ? "" : ", ") + scalar_text(x);
      os << " [" << joined << "]\n";
    } else {
      os << ' ' << scalar_text(val) << '\n';
    }
  }
}

int exit_for(Errc code) {
  switch (code) {
    case Errc::ParseError: return kUsage;
    case Errc::NotPrime:
    case Errc::ReducibleModulus:
    case Errc::GcdViolation:
    case Errc::NotADivisor:
    case Errc::BadDivisor:
    case Errc::InvalidArgument:
    case Errc::Unsupported:
    case Errc::TowerTooDeep:
    case Errc::ZeroConstantTerm:
    case Errc::NotSquarefree: return kPrecondition;
    default: return kInternal;
  }
}

void add_field_options(CLI::App* sub, Config& c) {
  sub->add_option("-p", c.p, "field characteristic")->required();
  sub->add_option("-m", c.m, "extension degree of the field")->default_val(1)->check(CLI::Range(1u, 30u));
  sub->add_option("-n", c.n, "group parameter, |Q_4n| = 4n")->required()->check(CLI::Range(1u, 4096u));
  sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"table", "json"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Codes in the generalized quaternion group algebra F_q[Q_4n]", "quatcode"};
  app.require_subcommand(1);
  auto* factor = app.add_subcommand("factor", "factor x^n-1 and x^n+1 with reciprocal pairing");
  auto* blocks = app.add_subcommand("blocks", "list the Wedderburn blocks");
  auto* classify = app.add_subcommand("classify", "classify the code generated by an element");
  auto* induce = app.add_subcommand("induce", "blocks of the code induced from a cyclic code");
  auto* selftest = app.add_subcommand("selftest", "run the property suite over a grid");
  for (auto* sub : {factor, blocks, classify, induce}) add_field_options(sub, c);
  classify->add_option("--elem", c.elem, "element as \"u ; v\" for u(x) + y v(x)")->required();
  classify->add_option("--budget", c.budget, "codeword enumeration budget for the minimum distance");
  induce->set_help_flag("--help", "Print this help message and exit");
  induce->add_option("-l", c.ell, "embedding exponent, X -> x^l")->required();
  induce->add_option("--h", c.h, "monic divisor of X^{2n/l}-1, written in x")->required();
  selftest->add_option("--seed", c.seed, "seed for all randomized checks (fallback: QUATCODE_SEED)");
  selftest->add_option("--q", c.qs, "field sizes of the grid")->delimiter(',');
  selftest->add_option("--n-min", c.n_min, "smallest n of the grid")->check(CLI::Range(1u, 64u));
  selftest->add_option("--n-max", c.n_max, "largest n of the grid")->check(CLI::Range(1u, 64u));
  selftest->add_option("--format", c.format, "output format")->check(CLI::IsMember({"table", "json"}));

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  ordered_json doc;
  ordered_json flags = ordered_json::object();
  bool passed = true;
  try {
    if (factor->parsed()) {
      doc["command"] = "factor";
      doc["params"] = field_params(c, make_field(c));
      doc["result"] = cmd_factor(c, flags);
    } else if (blocks->parsed()) {
      doc["command"] = "blocks";
      doc["params"] = field_params(c, make_field(c));
      doc["result"] = cmd_blocks(c, flags);
    } else if (classify->parsed()) {
      doc["command"] = "classify";
      doc["params"] = field_params(c, make_field(c));
      doc["params"]["elem"] = c.elem;
      doc["params"]["budget"] = c.budget;
      doc["result"] = cmd_classify(c, flags, err);
    } else if (induce->parsed()) {
      doc["command"] = "induce";
      doc["params"] = field_params(c, make_field(c));
      doc["params"]["l"] = c.ell;
      doc["params"]["h"] = c.h;
      doc["result"] = cmd_induce(c, flags);
    } else {
      doc["command"] = "selftest";
      doc["params"] = {{"q", c.qs}, {"n_min", c.n_min}, {"n_max", c.n_max}, {"seed", resolve_seed(c)}};
      doc["result"] = cmd_selftest(c, flags, passed, err);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_for(e.code());
  }
  doc["agreement_flags"] = flags;

  if (c.format == "json") {
    out << doc.dump(2) << '\n';
  } else {
    render(doc, 0, out);
  }
  for (const auto& [key, value] : flags.items()) {
    if (key == "convention_flip") continue;
    if (value.is_boolean() && !value.get<bool>()) {
      err << "error: " << (key == "paths_agree" ? "PathDisagreement" : key + " is false") << '\n';
      return kInternal;
    }
  }
  return passed ? kOk : kInternal;
}

}  // namespace quatcode::cli
