#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "equinoether/errors.hpp"
#include "equinoether/polyparse.hpp"
#include "equinoether/polyring.hpp"

using namespace equinoether;

namespace {

Poly P(const std::string& s) { return parse_polynomial(s); }
Monomial M(const std::string& s) { return parse_monomial(s); }

int pick(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Monomial random_x_monomial(std::mt19937_64& rng, int rows, int cols,
                           int max_factors = 3) {
  std::set<std::pair<int, int>> vars;
  int k = pick(rng, 1, max_factors);
  while (static_cast<int>(vars.size()) < k)
    vars.insert({pick(rng, 1, rows), pick(rng, 1, cols)});
  std::vector<std::pair<Variable, int>> factors;
  for (auto [r, c] : vars)
    factors.push_back({Variable{r, c}, pick(rng, 1, 3)});
  return Monomial::product(VarShape::RowColumn, factors);
}

Monomial random_y_monomial(std::mt19937_64& rng, int side) {
  std::set<std::pair<int, int>> vars;
  int k = pick(rng, 1, 3);
  while (static_cast<int>(vars.size()) < k)
    vars.insert({pick(rng, 1, side), pick(rng, 1, side)});
  std::vector<std::pair<Variable, int>> factors;
  for (auto [a, b] : vars)
    factors.push_back({Variable{a, b}, pick(rng, 1, 3)});
  return Monomial::product(VarShape::Pair, factors);
}

Poly random_x_poly(std::mt19937_64& rng, int rows = 2, int cols = 5,
                   int max_terms = 4) {
  std::vector<std::pair<Monomial, Rational>> terms;
  int k = pick(rng, 1, max_terms);
  for (int i = 0; i < k; ++i) {
    int c = pick(rng, 1, 9) * (pick(rng, 0, 1) ? 1 : -1);
    terms.push_back({random_x_monomial(rng, rows, cols), rational_of(c)});
  }
  return Poly::from_terms(std::move(terms));
}

// injection sending the given columns to random distinct targets; sorted
// targets when increasing is requested
FinitePartialInjection random_column_map(std::mt19937_64& rng,
                                         const std::vector<int>& cols,
                                         bool increasing, int hi = 30) {
  std::set<int> tset;
  while (tset.size() < cols.size()) tset.insert(pick(rng, 1, hi));
  std::vector<int> targets(tset.begin(), tset.end());
  if (!increasing)
    for (int i = static_cast<int>(targets.size()) - 1; i > 0; --i)
      std::swap(targets[i], targets[pick(rng, 0, i)]);
  std::vector<int> sorted = cols;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    pairs.emplace_back(sorted[i], targets[i]);
  return FinitePartialInjection(pairs);
}

Poly t_spoly(const Poly& f, const Poly& g) {
  Monomial gamma = f.leading_monomial().lcm(g.leading_monomial());
  auto uf = gamma.divided_by(f.leading_monomial());
  auto ug = gamma.divided_by(g.leading_monomial());
  return f.times_term(*uf, Rational(1) / f.leading_coefficient()) -
         g.times_term(*ug, Rational(1) / g.leading_coefficient());
}

const TermOrder kOrder = TermOrder::LexColMajor;

struct PolyLess {
  bool operator()(const Poly& a, const Poly& b) const {
    return poly_less(a, b);
  }
};
using PolySet = std::set<Poly, PolyLess>;

}  // namespace

TEST_CASE("term order examples") {
  CHECK(compare(kOrder, M("x[1,2]"), M("x[1,1]^3")) == Ordering::Greater);
  CHECK(compare(kOrder, M("x[1,2]*x[2,1]"), M("x[1,2]*x[2,1]")) ==
        Ordering::Equal);
  CHECK(compare(kOrder, M("x[1,3]"), M("x[1,2]^3")) == Ordering::Greater);
  // within a column the higher row dominates
  CHECK(compare(kOrder, M("x[2,1]"), M("x[1,1]^5")) == Ordering::Greater);
  CHECK(monomial_less(M("x[1,1]"), M("x[1,2]")));
}

TEST_CASE("term order laws") {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 400; ++it) {
    Monomial a = random_x_monomial(rng, 2, 5);
    Monomial b = random_x_monomial(rng, 2, 5);
    Monomial c = random_x_monomial(rng, 2, 5);
    Ordering ab = compare(kOrder, a, b);
    // antisymmetry and consistency with equality
    Ordering ba = compare(kOrder, b, a);
    if (ab == Ordering::Equal) {
      CHECK(a == b);
      CHECK(ba == Ordering::Equal);
    } else {
      CHECK(ba == (ab == Ordering::Less ? Ordering::Greater : Ordering::Less));
    }
    // multiplicative invariance (every monomial order has it)
    CHECK(compare(kOrder, a.times(c), b.times(c)) == ab);
    // 1 is the least monomial
    if (!a.is_one()) CHECK(compare(kOrder, a, Monomial()) == Ordering::Greater);
    // compatibility with divisibility: a proper multiple is larger
    Monomial ac = a.times(c);
    if (ac != a) CHECK(compare(kOrder, ac, a) == Ordering::Greater);
  }
}

TEST_CASE("canonical monomial forms") {
  auto inc1 = SymmetryType::inc_columns(1);
  auto sym2 = SymmetryType::sym_columns(2);
  auto pair = SymmetryType::pair_sym();
  CHECK(canonicalize(M("x[1,4]*x[1,9]"), inc1) == M("x[1,1]*x[1,2]"));
  CHECK(canonicalize(M("x[1,5]*x[2,3]"), sym2) == M("x[1,1]*x[2,2]"));
  CHECK(canonicalize(M("y[3,7]*y[5,7]"), pair) == M("y[1,1]*y[2,1]"));
}

TEST_CASE("canonicalize is idempotent and orbit-constant") {
  std::mt19937_64 rng(17);
  auto inc2 = SymmetryType::inc_columns(2);
  auto sym2 = SymmetryType::sym_columns(2);
  auto pair = SymmetryType::pair_sym();

  for (int it = 0; it < 200; ++it) {
    Monomial m = random_x_monomial(rng, 2, 5);
    for (const auto& sym : {inc2, sym2}) {
      Monomial c = canonicalize(m, sym);
      CHECK(canonicalize(c, sym) == c);
      auto pi = random_column_map(rng, m.columns(),
                                  sym.tag() == SymmetryType::Tag::IncColumns);
      CHECK(canonicalize(m.apply_columns(pi), sym) == c);
    }
  }
  for (int it = 0; it < 200; ++it) {
    Monomial m = random_y_monomial(rng, 4);
    Monomial c = canonicalize(m, pair);
    CHECK(canonicalize(c, pair) == c);
    auto alpha = random_column_map(rng, m.rows_used(), false);
    auto beta = random_column_map(rng, m.columns(), false);
    CHECK(canonicalize(m.apply_pair(alpha, beta), pair) == c);
  }
}

TEST_CASE("polynomial canonical forms") {
  auto inc1 = SymmetryType::inc_columns(1);
  auto sym1 = SymmetryType::sym_columns(1);
  CHECK(canonicalize(P("x[1,4]*x[1,9] + x[1,2]"), inc1) ==
        P("x[1,2]*x[1,3] + x[1,1]"));
  std::mt19937_64 rng(29);
  for (int it = 0; it < 100; ++it) {
    Poly p = random_x_poly(rng, 1, 4);
    for (const auto& sym : {inc1, sym1}) {
      Poly c = canonicalize(p, sym);
      CHECK(canonicalize(c, sym) == c);
      auto pi = random_column_map(rng, p.columns(),
                                  sym.tag() == SymmetryType::Tag::IncColumns);
      CHECK(canonicalize(p.apply_columns(pi), sym) == c);
    }
  }
}

TEST_CASE("column compression") {
  CHECK(compress_columns(P("x[1,4]*x[1,9] + x[1,2]")) ==
        P("x[1,2]*x[1,3] + x[1,1]"));
  CHECK(compress_columns(P("x[2,7]")) == P("x[2,1]"));
  CHECK(compress_columns(P("3")) == P("3"));
}

TEST_CASE("classical division examples") {
  std::vector<Poly> b1 = {P("x[1,1]")};
  CHECK(reduce_classical(P("x[1,1]^2"), b1, kOrder).is_zero());
  CHECK(reduce_classical(P("x[1,2]+1"), b1, kOrder) == P("x[1,2]+1"));
  std::vector<Poly> b2 = {P("x[1,2]-x[1,1]")};
  CHECK(reduce_classical(P("x[1,1]*x[1,2]+x[1,2]"), b2, kOrder) ==
        P("x[1,1]^2+x[1,1]"));
  CHECK(reduce_classical(P("5"), b2, kOrder) == P("5"));
  CHECK(reduce_classical(Poly(), b1, kOrder).is_zero());
}

TEST_CASE("division leaves an irreducible remainder") {
  std::mt19937_64 rng(41);
  for (int it = 0; it < 150; ++it) {
    std::vector<Poly> basis;
    int nb = pick(rng, 1, 3);
    for (int i = 0; i < nb; ++i) basis.push_back(random_x_poly(rng));
    Poly f = random_x_poly(rng);
    Poly r = reduce_classical(f, basis, kOrder);
    for (const auto& [t, c] : r.terms())
      for (const auto& g : basis)
        CHECK_FALSE(t.divisible_by(g.leading_monomial()));
    CHECK(reduce_classical(r, basis, kOrder) == r);
  }
}

TEST_CASE("buchberger examples") {
  CHECK(buchberger_classical<Rational>({P("x[1,1]^2")}, kOrder) ==
        std::vector<Poly>{P("x[1,1]^2")});
  CHECK(buchberger_classical<Rational>({}, kOrder).empty());
  std::vector<Poly> g =
      buchberger_classical<Rational>({P("x[1,2]-x[1,1]"), P("x[1,3]-x[1,2]")},
                                     kOrder);
  CHECK(g == std::vector<Poly>{P("x[1,2]-x[1,1]"), P("x[1,3]-x[1,1]")});
}

TEST_CASE("buchberger output certifies itself") {
  std::mt19937_64 rng(53);
  for (int it = 0; it < 60; ++it) {
    std::vector<Poly> gens;
    int ng = pick(rng, 1, 3);
    for (int i = 0; i < ng; ++i) gens.push_back(random_x_poly(rng, 1, 3, 2));
    std::vector<Poly> gb = buchberger_classical<Rational>(gens, kOrder);
    // all original generators lie in the ideal of the basis
    for (const auto& f : gens)
      CHECK(reduce_classical(f, gb, kOrder).is_zero());
    // Buchberger criterion holds for every pair
    for (std::size_t i = 0; i < gb.size(); ++i)
      for (std::size_t j = i + 1; j < gb.size(); ++j)
        CHECK(reduce_classical(t_spoly(gb[i], gb[j]), gb, kOrder).is_zero());
    // monic, sorted, autoreduced
    for (std::size_t i = 0; i < gb.size(); ++i) {
      CHECK(gb[i].leading_coefficient() == Rational(1));
      if (i + 1 < gb.size()) CHECK(poly_less(gb[i], gb[i + 1]));
      for (std::size_t j = 0; j < gb.size(); ++j)
        if (i != j)
          for (const auto& [t, c] : gb[i].terms())
            CHECK_FALSE(t.divisible_by(gb[j].leading_monomial()));
    }
    // random ideal elements reduce to zero
    for (int q = 0; q < 5; ++q) {
      Poly f;
      for (const auto& gen : gens) f = f + random_x_poly(rng, 1, 3, 2) * gen;
      CHECK(reduce_classical(f, gb, kOrder).is_zero());
    }
  }
}

TEST_CASE("orbit expansion examples") {
  auto inc1 = SymmetryType::inc_columns(1);
  auto sym2 = SymmetryType::sym_columns(2);
  auto o1 = orbit_expand(P("x[1,1]"), inc1, {3});
  CHECK(o1.size() == 3);
  auto o2 = orbit_expand(P("x[1,1]*x[1,2]"), inc1, {3});
  PolySet want = {P("x[1,1]*x[1,2]"), P("x[1,1]*x[1,3]"),
                  P("x[1,2]*x[1,3]")};
  PolySet got(o2.begin(), o2.end());
  CHECK(got == want);
  auto o3 = orbit_expand(P("x[1,1]*x[2,2]"), sym2, {2});
  CHECK(o3.size() == 2);
  CHECK_THROWS_AS(orbit_expand(P("x[1,1]*x[1,2]"), inc1, {30}, 10),
                  BudgetExceeded);
}

TEST_CASE("orbit expansion properties") {
  std::mt19937_64 rng(67);
  auto inc1 = SymmetryType::inc_columns(1);
  auto sym1 = SymmetryType::sym_columns(1);
  // Inc, one row: a width-w squarefree monomial has C(m, w) images
  auto binom = [](int m, int w) {
    long r = 1;
    for (int i = 1; i <= w; ++i) r = r * (m - w + i) / i;
    return r;
  };
  for (int w = 1; w <= 3; ++w) {
    std::vector<std::pair<Variable, int>> fac;
    for (int c = 1; c <= w; ++c) fac.push_back({Variable{1, c}, 1});
    Poly g = Poly::term(Monomial::product(VarShape::RowColumn, fac),
                        rational_of(1));
    for (int m = w; m <= 6; ++m)
      CHECK(orbit_expand(g, inc1, {m}).size() ==
            static_cast<std::size_t>(binom(m, w)));
  }
  for (int it = 0; it < 50; ++it) {
    Poly g = random_x_poly(rng, 1, 3, 2);
    for (const auto& sym : {inc1, sym1}) {
      auto orbit = orbit_expand(g, sym, {4});
      // canonical form is constant across the expansion
      for (const auto& h : orbit)
        CHECK(canonicalize(h, sym) == canonicalize(g, sym));
      // the expansion never leaves the window
      for (const auto& h : orbit) CHECK(h.max_col() <= 4);
      // for the group symmetry the expansion is the same from any member
      if (sym.tag() == SymmetryType::Tag::SymColumns && !orbit.empty()) {
        auto again = orbit_expand(orbit.front(), sym, {4});
        PolySet a(orbit.begin(), orbit.end());
        PolySet b(again.begin(), again.end());
        CHECK(a == b);
      }
    }
  }
}

TEST_CASE("column maps act on polynomials") {
  std::mt19937_64 rng(79);
  for (int it = 0; it < 200; ++it) {
    Poly f = random_x_poly(rng);
    Poly g = random_x_poly(rng);
    std::set<int> cols;
    for (int c : f.columns()) cols.insert(c);
    for (int c : g.columns()) cols.insert(c);
    std::vector<int> all(cols.begin(), cols.end());
    if (all.empty()) continue;
    auto pi = random_column_map(rng, all, true);
    CHECK(f.apply_columns(pi) + g.apply_columns(pi) ==
          (f + g).apply_columns(pi));
    CHECK(f.apply_columns(pi) * g.apply_columns(pi) ==
          (f * g).apply_columns(pi));
    // an increasing relabeling commutes with taking the lead term
    if (!f.is_zero())
      CHECK(f.apply_columns(pi).leading_monomial() ==
            f.leading_monomial().apply_columns(pi));
  }
}

TEST_CASE("prime field coefficients") {
  using F = ModP<101>;
  using PolyF = Polynomial<F>;
  auto lift = [](const Poly& p) {
    std::vector<std::pair<Monomial, F>> terms;
    for (const auto& [m, c] : p.terms()) {
      long num = static_cast<long>(mpz_get_si(c.get_num().get_mpz_t()));
      long den = static_cast<long>(mpz_get_si(c.get_den().get_mpz_t()));
      terms.push_back({m, F(num) / F(den)});
    }
    return PolyF::from_terms(std::move(terms));
  };
  std::vector<PolyF> basis = {lift(P("x[1,1]"))};
  CHECK(reduce_classical(lift(P("x[1,1]^2")), basis, kOrder).is_zero());
  auto gb = buchberger_classical<F>(
      {lift(P("x[1,2]-x[1,1]")), lift(P("x[1,3]-x[1,2]"))}, kOrder);
  REQUIRE(gb.size() == 2);
  CHECK(gb[0] == lift(P("x[1,2]-x[1,1]")));
  CHECK(gb[1] == lift(P("x[1,3]-x[1,1]")));
  // 100 == -1 mod 101
  CHECK(reduce_classical(lift(P("x[1,1]^2 + 100*x[1,1]")),
                         std::vector<PolyF>{lift(P("x[1,1]^2 - x[1,1]"))},
                         kOrder)
            .is_zero());
}

TEST_CASE("printing round-trips") {
  std::mt19937_64 rng(97);
  for (int it = 0; it < 200; ++it) {
    Poly p = random_x_poly(rng);
    CHECK(parse_polynomial(print_polynomial(p)) == p);
  }
  CHECK(print_polynomial(P("x[1,2] - x[1,1]")) == "x[1,2] - x[1,1]");
  CHECK(print_polynomial(Poly()) == "0");
}
