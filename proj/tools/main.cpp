#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "equinoether/equivariant.hpp"
#include "equinoether/errors.hpp"
#include "equinoether/ideal_io.hpp"
#include "equinoether/orbitcat.hpp"
#include "equinoether/polyparse.hpp"
#include "equinoether/polyring.hpp"
#include "equinoether/relations.hpp"
#include "equinoether/skewalg.hpp"

using nlohmann::json;
using namespace equinoether;

namespace {

constexpr std::uint64_t kDefaultSeed = 123456789;

std::size_t default_budget() {
  if (const char* s = std::getenv("EQUINOETHER_BUDGET")) {
    try {
      long v = std::stol(s);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring invalid EQUINOETHER_BUDGET value '" << s
              << "'\n";
  }
  return PairBudget{}.max_s_pairs;
}

RelationKind kind_arg(const std::string& name) {
  auto kind = relation_kind_from_name(name);
  if (!kind) throw InvalidTuple("unknown relation kind '" + name + "'");
  return *kind;
}

SymmetryType symmetry_arg(const std::string& name, int rows) {
  auto sym = SymmetryType::from_name(name, rows);
  if (!sym) throw InvalidTuple("unknown symmetry '" + name + "'");
  return *sym;
}

int int_token(const std::string& text, std::size_t offset, std::size_t len) {
  try {
    std::size_t used = 0;
    int v = std::stoi(text.substr(offset, len), &used);
    if (used != len || len == 0) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ParseError("expected an integer", offset);
  }
}

// "1->4, 3->7" (empty string: the empty map)
FinitePartialInjection map_arg(const std::string& text) {
  std::vector<std::pair<int, int>> pairs;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    std::size_t lo = text.find_first_not_of(" \t", pos);
    if (lo == std::string::npos || lo >= end)
      throw ParseError("empty map entry", pos);
    std::size_t hi = text.find_last_not_of(" \t", end - 1) + 1;
    std::size_t arrow = text.find("->", lo);
    if (arrow == std::string::npos || arrow >= hi)
      throw ParseError("map entries look like 'source->target'", lo);
    pairs.emplace_back(int_token(text, lo, arrow - lo),
                       int_token(text, arrow + 2, hi - (arrow + 2)));
    pos = end + (end < text.size() ? 1 : 0);
  }
  return FinitePartialInjection(std::move(pairs));
}

// "1,2,3" (empty string: the empty set)
std::vector<int> points_arg(const std::string& text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    std::size_t lo = text.find_first_not_of(" \t", pos);
    if (lo == std::string::npos || lo >= end)
      throw ParseError("empty list entry", pos);
    std::size_t hi = text.find_last_not_of(" \t", end - 1) + 1;
    out.push_back(int_token(text, lo, hi - lo));
    pos = end + (end < text.size() ? 1 : 0);
  }
  return out;
}

json injection_json(const FinitePartialInjection& f) {
  json out = json::array();
  for (const auto& [s, t] : f.pairs()) out.push_back(json::array({s, t}));
  return out;
}

void emit(const json& report) { std::cout << report.dump(2) << "\n"; }

int pick(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// ---------------------------------------------------------------- growth ---

struct GrowthArgs {
  std::string kind;
  int n = 0;
  int cap = 7;
  bool as_json = false;
};

int run_growth(const GrowthArgs& a) {
  RelationKind kind = kind_arg(a.kind);
  GrowthTable table = growth(kind, a.n, a.cap);
  if (a.as_json) {
    json rows = json::array();
    for (const auto& [n, row] : table.rows)
      rows.push_back({{"n", n},
                      {"tuple_orbits", row.tuple_orbits},
                      {"subset_orbits", row.subset_orbits}});
    emit({{"command", "growth"},
          {"kind", to_string(kind)},
          {"n_max", a.n},
          {"rows", rows}});
  } else {
    std::cout << "kind: " << to_string(kind) << "\n";
    for (const auto& [n, row] : table.rows)
      std::cout << "n=" << n << " tuple-orbits=" << row.tuple_orbits
                << " subset-orbits=" << row.subset_orbits << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- extend ---

struct ExtendArgs {
  std::string kind;
  std::string map;
  bool as_json = false;
};

int run_extend(const ExtendArgs& a) {
  RelationKind kind = kind_arg(a.kind);
  FinitePartialInjection sigma = map_arg(a.map);
  bool ok = extendable(kind, sigma);
  if (a.as_json) {
    emit({{"command", "extend"},
          {"kind", to_string(kind)},
          {"map", injection_json(sigma)},
          {"extendable", ok}});
  } else {
    std::cout << "map: " << to_string(sigma) << "\n"
              << "extendable: " << (ok ? "true" : "false") << "\n";
  }
  return 0;
}

// --------------------------------------------------------------- divides ---

struct DividesArgs {
  std::string symmetry;
  int rows = 1;
  std::string divisor;
  std::string dividend;
  int cap = 8;
  bool as_json = false;
};

int run_divides(const DividesArgs& a) {
  SymmetryType sym = symmetry_arg(a.symmetry, a.rows);
  Monomial divisor = parse_monomial(a.divisor);
  Monomial dividend = parse_monomial(a.dividend);
  check_shape(divisor, sym);
  check_shape(dividend, sym);
  auto witness = eq_divides(divisor, dividend, sym, a.cap);
  if (a.as_json) {
    json report = {{"command", "divides"},
                   {"symmetry", sym.name()},
                   {"divisor", to_string(divisor)},
                   {"dividend", to_string(dividend)},
                   {"divides", witness.has_value()}};
    if (sym.tag() != SymmetryType::Tag::PairSym) report["rows"] = sym.rows();
    if (witness) {
      report["witness"] = {{"first", injection_json(witness->first)},
                           {"second", injection_json(witness->second)}};
    } else {
      report["witness"] = nullptr;
    }
    emit(report);
  } else if (witness) {
    std::cout << "divides: yes\n" << "witness: " << to_string(witness->first);
    if (sym.tag() == SymmetryType::Tag::PairSym)
      std::cout << " / " << to_string(witness->second);
    std::cout << "\n";
  } else {
    std::cout << "divides: no\n";
  }
  return 0;
}

// -------------------------------------------------------------------- gb ---

struct GbArgs {
  std::string ideal_path;
  std::size_t budget = 0;
  std::string output_path;
  bool as_json = false;
};

int run_gb(const GbArgs& a) {
  IdealFile file = load_ideal_file(a.ideal_path);
  EquivariantIdeal ideal =
      EquivariantIdeal::make(file.symmetry, file.generators);
  CompletionStats stats;
  GroebnerBasis gb = eq_buchberger(ideal, TermOrder::LexColMajor,
                                   PairBudget{a.budget}, &stats);
  if (!a.output_path.empty()) {
    std::ofstream out(a.output_path, std::ios::binary);
    if (!out) throw ParseError("cannot open '" + a.output_path + "'", 0);
    out << format_groebner(gb);
  }
  if (a.as_json) {
    json basis = json::array();
    for (const Poly& g : gb.elements) basis.push_back(print_polynomial(g));
    json report = {{"command", "gb"},
                   {"symmetry", gb.symmetry.name()},
                   {"order", "lex-colmajor"},
                   {"basis", basis},
                   {"basis_size", gb.elements.size()},
                   {"s_pairs_reduced", stats.s_pairs_reduced},
                   {"adjoined", stats.adjoined},
                   {"passes", stats.passes}};
    if (gb.symmetry.tag() != SymmetryType::Tag::PairSym)
      report["rows"] = gb.symmetry.rows();
    emit(report);
  } else {
    std::cout << format_groebner(gb);
    std::cout << "# s-pairs reduced: " << stats.s_pairs_reduced
              << ", adjoined: " << stats.adjoined
              << ", passes: " << stats.passes << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- member ---

struct MemberArgs {
  std::string ideal_path;
  std::string poly;
  std::size_t budget = 0;
  std::string expect;  // "", "true", "false"
  bool as_json = false;
};

int run_member(const MemberArgs& a) {
  IdealFile file = load_ideal_file(a.ideal_path);
  Poly f = parse_polynomial(a.poly);
  check_shape(f, file.symmetry);
  EquivariantIdeal ideal =
      EquivariantIdeal::make(file.symmetry, file.generators);
  GroebnerBasis gb =
      eq_buchberger(ideal, TermOrder::LexColMajor, PairBudget{a.budget});
  bool member = eq_member(f, gb);

  std::optional<bool> expect;
  if (!a.expect.empty()) {
    if (a.expect == "true" || a.expect == "1")
      expect = true;
    else if (a.expect == "false" || a.expect == "0")
      expect = false;
    else
      throw InvalidTuple("--assert takes true or false");
  }

  if (a.as_json) {
    json report = {{"command", "member"},
                   {"symmetry", file.symmetry.name()},
                   {"poly", print_polynomial(f)},
                   {"member", member}};
    if (file.symmetry.tag() != SymmetryType::Tag::PairSym)
      report["rows"] = file.symmetry.rows();
    if (expect) report["expected"] = *expect;
    emit(report);
  } else {
    std::cout << "member: " << (member ? "true" : "false") << "\n";
  }
  if (expect && *expect != member) {
    std::cerr << "assertion failed: expected member=" << a.expect << "\n";
    return 1;
  }
  return 0;
}

// ----------------------------------------------------------------- chain ---

struct ChainArgs {
  std::string symmetry;
  int rows = 1;
  std::vector<std::string> stage_paths;
  int cycles = 0;
  int horizon = 0;
  std::size_t budget = 0;
  bool expect_stabilize = false;
  bool as_json = false;
};

std::vector<Poly> load_poly_list(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  std::vector<Poly> out;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::size_t lo = line.find_first_not_of(" \t\r");
    if (lo == std::string::npos) continue;
    std::size_t hi = line.find_last_not_of(" \t\r");
    out.push_back(parse_polynomial(line.substr(lo, hi - lo + 1)));
  }
  return out;
}

// the 2k-cycle monomial y[1,1]..y[k,k] * y[2,1]..y[1,k]: its bipartite graph
// is a single cycle of length 2k, so no shorter cycle monomial embeds into it
// under independent row/column injections
Poly cycle_monomial(int k) {
  std::vector<std::pair<Variable, int>> factors;
  for (int i = 1; i <= k; ++i) factors.push_back({{i, i}, 1});
  for (int i = 1; i <= k; ++i) factors.push_back({{i % k + 1, i}, 1});
  return Poly::term(Monomial::product(VarShape::Pair, std::move(factors)),
                    Rational(1));
}

int run_chain(const ChainArgs& a) {
  SymmetryType sym = symmetry_arg(a.symmetry, a.rows);
  std::vector<std::vector<Poly>> stages;
  if (a.cycles > 0) {
    if (!a.stage_paths.empty())
      throw InvalidTuple("--cycles and --stage cannot be combined");
    if (sym.tag() != SymmetryType::Tag::PairSym)
      throw InvalidTuple("--cycles builds a pairsym chain");
    std::vector<Poly> gens;
    for (int j = 1; j <= a.cycles; ++j) {
      gens.push_back(cycle_monomial(j + 1));
      stages.push_back(gens);
    }
  } else {
    std::vector<Poly> gens;
    for (const std::string& path : a.stage_paths) {
      for (Poly& p : load_poly_list(path)) gens.push_back(std::move(p));
      stages.push_back(gens);  // stages accumulate, so nesting holds
    }
  }
  int horizon =
      a.horizon > 0 ? a.horizon : static_cast<int>(stages.size()) - 1;
  ChainReport report =
      chain_analyze(sym, stages, horizon, PairBudget{a.budget});

  if (a.as_json) {
    json jstages = json::array();
    for (const auto& st : report.stages) {
      json failing = json::array();
      for (const Poly& f : st.failing) failing.push_back(print_polynomial(f));
      json witnesses = json::array();
      for (const auto& w : st.witnesses) {
        json checked = json::array();
        for (const Poly& c : w.checked) checked.push_back(print_polynomial(c));
        witnesses.push_back({{"generator", print_polynomial(w.generator)},
                             {"checked", checked}});
      }
      jstages.push_back({{"stage", st.stage},
                         {"contained", st.contained},
                         {"failing", failing},
                         {"witnesses", witnesses}});
    }
    json out = {{"command", "chain"},
                {"symmetry", sym.name()},
                {"horizon", horizon},
                {"stages", jstages}};
    if (sym.tag() != SymmetryType::Tag::PairSym) out["rows"] = sym.rows();
    out["stabilized_at"] =
        report.stabilized_at ? json(*report.stabilized_at) : json(nullptr);
    emit(out);
  } else {
    std::cout << "symmetry: " << sym.name() << "\n";
    for (const auto& st : report.stages) {
      std::cout << "stage " << st.stage << ": "
                << (st.contained ? "contained" : "proper growth");
      if (!st.failing.empty())
        std::cout << " (new: " << print_polynomial(st.failing.front()) << ")";
      std::cout << "\n";
    }
    if (report.stabilized_at)
      std::cout << "stabilized at stage " << *report.stabilized_at << "\n";
    else
      std::cout << "not stabilized within horizon " << horizon << "\n";
  }
  if (a.expect_stabilize && !report.stabilized_at) {
    std::cerr << "assertion failed: chain did not stabilize\n";
    return 1;
  }
  return 0;
}

// ------------------------------------------------------------------- hom ---

struct HomArgs {
  std::string kind;
  std::string T;
  std::string L;
  int cap = 8;
  bool as_json = false;
};

int run_hom(const HomArgs& a) {
  RelationKind kind = kind_arg(a.kind);
  OrbitObject T = OrbitObject::make(points_arg(a.T));
  OrbitObject L = OrbitObject::make(points_arg(a.L));
  auto morphisms = hom_set(kind, T, L);

  int m_lo = 1;
  for (int t : T.points) m_lo = std::max(m_lo, t);
  for (int l : L.points) m_lo = std::max(m_lo, l);
  std::vector<std::pair<int, long>> bruteforce;
  std::optional<int> stabilized;
  if (kind == RelationKind::FullSymmetric && m_lo <= a.cap) {
    for (int m = m_lo; m <= a.cap; ++m)
      bruteforce.emplace_back(m, hom_count_bruteforce_sym(m, T, L, a.cap));
    long last = bruteforce.back().second;
    int first_stable = a.cap;
    for (auto it = bruteforce.rbegin(); it != bruteforce.rend(); ++it) {
      if (it->second != last) break;
      first_stable = it->first;
    }
    // a single agreeing sample is no evidence of stabilization
    if (first_stable < a.cap) stabilized = first_stable;
  }

  if (a.as_json) {
    json jmorph = json::array();
    for (const auto& mo : morphisms) jmorph.push_back(injection_json(mo.witness));
    json jbrute = json::array();
    for (const auto& [m, c] : bruteforce)
      jbrute.push_back({{"m", m}, {"count", c}});
    emit({{"command", "hom"},
          {"kind", to_string(kind)},
          {"T", T.points},
          {"L", L.points},
          {"count", morphisms.size()},
          {"stabilized_at", stabilized ? json(*stabilized) : json(nullptr)},
          {"morphisms", jmorph},
          {"bruteforce", jbrute}});
  } else {
    std::cout << "kind: " << to_string(kind) << "\n"
              << "count: " << morphisms.size() << "\n";
    for (const auto& mo : morphisms)
      std::cout << "  " << to_string(mo.witness) << "\n";
    if (!bruteforce.empty()) {
      std::cout << "bruteforce:";
      for (const auto& [m, c] : bruteforce) std::cout << " m=" << m << ":" << c;
      std::cout << "\n";
    }
    if (stabilized)
      std::cout << "stabilized at m=" << *stabilized << "\n";
    else if (!bruteforce.empty())
      std::cout << "stabilization not observed\n";
  }
  return 0;
}

// ----------------------------------------------------------------- sheaf ---

struct SheafArgs {
  std::string L;
  int m = 6;
  int d = 1;
  int free_rank = -1;  // <0: plain sheaf section
  int samples = 100;
  std::uint64_t seed = kDefaultSeed;
  int cap = 8;
  bool as_json = false;
};

int run_sheaf(const SheafArgs& a) {
  OrbitObject L = OrbitObject::make(points_arg(a.L));
  if (a.free_rank >= 0) {
    auto report =
        free_module_section(a.free_rank, L, a.m, a.samples, a.seed, a.cap);
    if (a.as_json) {
      emit({{"command", "sheaf"},
            {"mode", "free-module"},
            {"tuple_length", report.dT},
            {"L", L.points},
            {"m", report.m},
            {"basis", report.basis},
            {"coefficient_columns", report.coefficient_columns},
            {"rank", report.basis.size()},
            {"samples", report.samples},
            {"seed", a.seed},
            {"validated", report.validated}});
    } else {
      std::cout << "free module section: tuples of length " << report.dT
                << " over L, m=" << report.m << "\n"
                << "rank: " << report.basis.size() << "\n";
      std::cout << "validated: " << (report.validated ? "true" : "false")
                << "\n";
    }
    return report.validated ? 0 : 1;
  }
  auto report = sheaf_section(a.d, L, a.m, a.samples, a.seed, a.cap);
  if (a.as_json) {
    json indets = json::array();
    for (const Monomial& v : report.indeterminates)
      indets.push_back(to_string(v));
    emit({{"command", "sheaf"},
          {"mode", "ring"},
          {"d", report.d},
          {"L", L.points},
          {"m", report.m},
          {"indeterminates", indets},
          {"count", report.indeterminates.size()},
          {"samples", report.samples},
          {"seed", a.seed},
          {"validated", report.validated}});
  } else {
    std::cout << "sheaf section: d=" << report.d << ", m=" << report.m << "\n"
              << "indeterminates:";
    for (const Monomial& v : report.indeterminates)
      std::cout << " " << to_string(v);
    std::cout << "\n"
              << "validated: " << (report.validated ? "true" : "false") << "\n";
  }
  return report.validated ? 0 : 1;
}

// ------------------------------------------------------------ skew-check ---

struct SkewArgs {
  int m = 4;
  int support_m = 6;
  int samples = 100;
  std::uint64_t seed = kDefaultSeed;
  bool as_json = false;
};

Poly random_skew_poly(std::mt19937_64& rng, int m) {
  std::vector<std::pair<Monomial, Rational>> terms;
  int nterms = pick(rng, 1, 2);
  for (int t = 0; t < nterms; ++t) {
    std::vector<std::pair<Variable, int>> factors;
    int nvars = pick(rng, 0, 2);
    for (int v = 0; v < nvars; ++v)
      factors.push_back({{pick(rng, 1, 2), pick(rng, 1, m)}, pick(rng, 1, 2)});
    int coeff = pick(rng, 1, 9) * (pick(rng, 0, 1) ? 1 : -1);
    terms.emplace_back(Monomial::product(VarShape::RowColumn, factors),
                       Rational(coeff));
  }
  return Poly::from_terms(std::move(terms));
}

Perm random_perm(std::mt19937_64& rng, int m) {
  Perm g = perm_identity(m);
  for (int i = m - 1; i > 0; --i) std::swap(g[i], g[pick(rng, 0, i)]);
  return g;
}

SkewElement random_skew(std::mt19937_64& rng, int m) {
  std::vector<std::pair<Poly, Perm>> terms;
  int nterms = pick(rng, 1, 2);
  for (int t = 0; t < nterms; ++t)
    terms.emplace_back(random_skew_poly(rng, m), random_perm(rng, m));
  return SkewElement::make(m, terms);
}

int run_skew(const SkewArgs& a) {
  std::mt19937_64 rng(a.seed);
  bool identity_ok = true, assoc_ok = true, dist_ok = true, twist_ok = true,
       support_ok = true;
  SkewElement e = SkewElement::one(a.m);
  for (int s = 0; s < a.samples; ++s) {
    SkewElement u = random_skew(rng, a.m);
    SkewElement v = random_skew(rng, a.m);
    SkewElement w = random_skew(rng, a.m);
    identity_ok = identity_ok && skew_mul(e, u) == u && skew_mul(u, e) == u;
    assoc_ok = assoc_ok &&
               skew_mul(skew_mul(u, v), w) == skew_mul(u, skew_mul(v, w));
    dist_ok = dist_ok &&
              skew_mul(u, skew_add(v, w)) ==
                  skew_add(skew_mul(u, v), skew_mul(u, w)) &&
              skew_mul(skew_add(u, v), w) ==
                  skew_add(skew_mul(u, w), skew_mul(v, w));
    // the defining twist: (1*g)(b*e) = (g.b)*g
    Perm g = random_perm(rng, a.m);
    Poly b = random_skew_poly(rng, a.m);
    SkewElement lhs =
        skew_mul(SkewElement::make(a.m, {{Poly::constant(Rational(1)), g}}),
                 SkewElement::make(a.m, {{b, perm_identity(a.m)}}));
    twist_ok = twist_ok && lhs == SkewElement::make(a.m, {{perm_act(g, b), g}});
  }
  for (int s = 0; s < a.samples; ++s) {
    Poly p = random_skew_poly(rng, a.support_m);
    std::vector<int> cols = minimal_support(p);
    // the pointwise stabilizer of the support fixes p: check every
    // transposition of columns outside the support
    for (int x = 1; x <= a.support_m && support_ok; ++x) {
      if (std::find(cols.begin(), cols.end(), x) != cols.end()) continue;
      for (int y = x + 1; y <= a.support_m && support_ok; ++y) {
        if (std::find(cols.begin(), cols.end(), y) != cols.end()) continue;
        support_ok = perm_act(perm_transposition(a.support_m, x, y), p) == p;
      }
    }
  }
  bool ok = identity_ok && assoc_ok && dist_ok && twist_ok && support_ok;
  if (a.as_json) {
    emit({{"command", "skew_check"},
          {"m", a.m},
          {"support_m", a.support_m},
          {"samples", a.samples},
          {"seed", a.seed},
          {"identity", identity_ok},
          {"associativity", assoc_ok},
          {"distributivity", dist_ok},
          {"twist", twist_ok},
          {"support", support_ok},
          {"ok", ok}});
  } else {
    auto line = [](const char* name, bool b) {
      std::cout << name << ": " << (b ? "ok" : "FAILED") << "\n";
    };
    line("identity", identity_ok);
    line("associativity", assoc_ok);
    line("distributivity", dist_ok);
    line("twist", twist_ok);
    line("support", support_ok);
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"equivariant Gröbner bases and orbit categories"};
  app.require_subcommand(1);

  GrowthArgs growth_args;
  auto* growth_cmd =
      app.add_subcommand("growth", "orbit growth table for a relation kind");
  growth_cmd->add_option("--kind", growth_args.kind,
                         "full|linear|betweenness|cyclic|separation")
      ->required();
  growth_cmd->add_option("--n", growth_args.n, "largest tuple length")
      ->required();
  growth_cmd->add_option("--cap", growth_args.cap, "enumeration cap");
  growth_cmd->add_flag("--json", growth_args.as_json, "JSON report");

  ExtendArgs extend_args;
  auto* extend_cmd = app.add_subcommand(
      "extend", "does a finite map extend to a relation-preserving bijection");
  extend_cmd->add_option("--kind", extend_args.kind, "relation kind")
      ->required();
  extend_cmd
      ->add_option("--map", extend_args.map, "finite map, e.g. '1->4,3->7'")
      ->required();
  extend_cmd->add_flag("--json", extend_args.as_json, "JSON report");

  DividesArgs divides_args;
  auto* divides_cmd =
      app.add_subcommand("divides", "equivariant monomial divisibility");
  divides_cmd->add_option("--symmetry", divides_args.symmetry,
                          "inc|sym|pairsym")
      ->required();
  divides_cmd->add_option("--rows", divides_args.rows, "row count");
  divides_cmd->add_option("--divisor", divides_args.divisor, "monomial")
      ->required();
  divides_cmd->add_option("--dividend", divides_args.dividend, "monomial")
      ->required();
  divides_cmd->add_option("--cap", divides_args.cap, "search cap");
  divides_cmd->add_flag("--json", divides_args.as_json, "JSON report");

  GbArgs gb_args;
  gb_args.budget = default_budget();
  auto* gb_cmd =
      app.add_subcommand("gb", "equivariant Gröbner basis of an ideal file");
  gb_cmd->add_option("--ideal", gb_args.ideal_path, "ideal file")->required();
  gb_cmd->add_option("--budget", gb_args.budget, "S-pair budget");
  gb_cmd->add_option("--output", gb_args.output_path, "write the basis here");
  gb_cmd->add_flag("--json", gb_args.as_json, "JSON report");

  MemberArgs member_args;
  member_args.budget = default_budget();
  auto* member_cmd =
      app.add_subcommand("member", "ideal membership for a polynomial");
  member_cmd->add_option("--ideal", member_args.ideal_path, "ideal file")
      ->required();
  member_cmd->add_option("--poly", member_args.poly, "polynomial")->required();
  member_cmd->add_option("--budget", member_args.budget, "S-pair budget");
  member_cmd->add_option("--assert", member_args.expect,
                         "fail (exit 1) unless membership matches");
  member_cmd->add_flag("--json", member_args.as_json, "JSON report");

  ChainArgs chain_args;
  chain_args.budget = default_budget();
  auto* chain_cmd =
      app.add_subcommand("chain", "stabilization of a nested ideal chain");
  chain_cmd->add_option("--symmetry", chain_args.symmetry, "inc|sym|pairsym")
      ->required();
  chain_cmd->add_option("--rows", chain_args.rows, "row count");
  chain_cmd->add_option("--stage", chain_args.stage_paths,
                        "generator list files; stages accumulate");
  chain_cmd->add_option("--cycles", chain_args.cycles,
                        "built-in pairsym chain of cycle monomials, this many "
                        "stages");
  chain_cmd->add_option("--horizon", chain_args.horizon, "stages to compare");
  chain_cmd->add_option("--budget", chain_args.budget, "S-pair budget");
  chain_cmd->add_flag("--expect-stabilize", chain_args.expect_stabilize,
                      "fail (exit 1) when the chain keeps growing");
  chain_cmd->add_flag("--json", chain_args.as_json, "JSON report");

  HomArgs hom_args;
  auto* hom_cmd =
      app.add_subcommand("hom", "orbit-category hom set and brute-force count");
  hom_cmd->add_option("--kind", hom_args.kind, "relation kind")->required();
  hom_cmd->add_option("--T", hom_args.T, "source object, e.g. '1,2,3'")
      ->required();
  hom_cmd->add_option("--L", hom_args.L, "target object")->required();
  hom_cmd->add_option("--cap", hom_args.cap, "brute-force truncation cap");
  hom_cmd->add_flag("--json", hom_args.as_json, "JSON report");

  SheafArgs sheaf_args;
  auto* sheaf_cmd =
      app.add_subcommand("sheaf", "invariant sections over an orbit object");
  sheaf_cmd->add_option("--L", sheaf_args.L, "orbit object")->required();
  sheaf_cmd->add_option("--m", sheaf_args.m, "truncation");
  sheaf_cmd->add_option("--d", sheaf_args.d, "variable tuple length");
  sheaf_cmd->add_option("--free-rank", sheaf_args.free_rank,
                        "free module over tuples of this length instead");
  sheaf_cmd->add_option("--samples", sheaf_args.samples, "validation samples");
  sheaf_cmd->add_option("--seed", sheaf_args.seed, "sampling seed");
  sheaf_cmd->add_option("--cap", sheaf_args.cap, "truncation cap");
  sheaf_cmd->add_flag("--json", sheaf_args.as_json, "JSON report");

  SkewArgs skew_args;
  auto* skew_cmd =
      app.add_subcommand("skew-check", "skew group ring sanity checks");
  skew_cmd->add_option("--m", skew_args.m, "permutation degree");
  skew_cmd->add_option("--support-m", skew_args.support_m,
                       "truncation for support checks");
  skew_cmd->add_option("--samples", skew_args.samples, "sample count");
  skew_cmd->add_option("--seed", skew_args.seed, "sampling seed");
  skew_cmd->add_flag("--json", skew_args.as_json, "JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*growth_cmd) return run_growth(growth_args);
    if (*extend_cmd) return run_extend(extend_args);
    if (*divides_cmd) return run_divides(divides_args);
    if (*gb_cmd) return run_gb(gb_args);
    if (*member_cmd) return run_member(member_args);
    if (*chain_cmd) return run_chain(chain_args);
    if (*hom_cmd) return run_hom(hom_args);
    if (*sheaf_cmd) return run_sheaf(sheaf_args);
    if (*skew_cmd) return run_skew(skew_args);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const Unsupported& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return 2;
  } catch (const equinoether::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
