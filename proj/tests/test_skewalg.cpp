#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "equinoether/errors.hpp"
#include "equinoether/polyparse.hpp"
#include "equinoether/skewalg.hpp"

using namespace equinoether;

namespace {

Poly P(const std::string& s) { return parse_polynomial(s); }

SkewElement T(int m, const Poly& a, const Perm& g) {
  return SkewElement::make(m, {{a, g}});
}

int pick(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Poly random_coeff(std::mt19937_64& rng, int m) {
  std::vector<std::pair<Monomial, Rational>> terms;
  int k = pick(rng, 0, 2);
  for (int i = 0; i <= k; ++i) {
    std::set<std::pair<int, int>> vars;
    int nv = pick(rng, 0, 2);
    while (static_cast<int>(vars.size()) < nv)
      vars.insert({1, pick(rng, 1, m)});
    std::vector<std::pair<Variable, int>> fac;
    for (auto [r, c] : vars) fac.push_back({Variable{r, c}, pick(rng, 1, 2)});
    terms.push_back({Monomial::product(VarShape::RowColumn, fac),
                     rational_of(pick(rng, 1, 9) * (pick(rng, 0, 1) ? 1 : -1))});
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
  int k = pick(rng, 1, 3);
  for (int i = 0; i < k; ++i)
    terms.push_back({random_coeff(rng, m), random_perm(rng, m)});
  return SkewElement::make(m, std::move(terms));
}

}  // namespace

TEST_CASE("construction and normalization") {
  Perm g = perm_transposition(4, 1, 2);
  SkewElement u = SkewElement::make(4, {{P("x[1,1]"), g}, {P("x[1,2]"), g}});
  REQUIRE(u.terms().size() == 1);
  CHECK(u.terms()[0].first == P("x[1,1]+x[1,2]"));
  // cancelling terms vanish
  CHECK(SkewElement::make(4, {{P("x[1,1]"), g}, {P("-x[1,1]"), g}}).is_zero());
  CHECK(SkewElement::zero(4).is_zero());
  CHECK_FALSE(SkewElement::one(4).is_zero());

  CHECK_THROWS_AS(SkewElement::make(0, {}), ShapeError);
  CHECK_THROWS_AS(SkewElement::make(4, {{P("x[1,5]"), perm_identity(4)}}),
                  ShapeError);
  CHECK_THROWS_AS(SkewElement::make(4, {{P("y[1,2]"), perm_identity(4)}}),
                  ShapeError);
  CHECK_THROWS_AS(SkewElement::make(4, {{P("x[1,1]"), perm_identity(3)}}),
                  ShapeError);
  CHECK_THROWS_AS(SkewElement::make(4, {{P("x[1,1]"), Perm{1, 1, 2, 3}}}),
                  ShapeError);
}

TEST_CASE("permutations act on coefficients") {
  Perm swap12 = perm_transposition(4, 1, 2);
  CHECK(perm_act(swap12, P("x[1,1]")) == P("x[1,2]"));
  CHECK(perm_act(swap12, P("x[1,1]*x[1,2] + x[1,3]")) ==
        P("x[1,1]*x[1,2] + x[1,3]"));
  CHECK(perm_act(swap12, P("7")) == P("7"));
  std::mt19937_64 rng(3);
  for (int it = 0; it < 100; ++it) {
    Perm g = random_perm(rng, 5);
    Perm h = random_perm(rng, 5);
    Poly a = random_coeff(rng, 5);
    Poly b = random_coeff(rng, 5);
    CHECK(perm_act(g, perm_act(h, a)) == perm_act(perm_compose(g, h), a));
    CHECK(perm_act(g, a * b) == perm_act(g, a) * perm_act(g, b));
    CHECK(perm_act(g, a + b) == perm_act(g, a) + perm_act(g, b));
    CHECK(perm_act(perm_identity(5), a) == a);
  }
}

TEST_CASE("twisted multiplication examples") {
  Perm g = perm_transposition(4, 1, 2);
  // (x[1,1]· g)(x[1,1]· e) = x[1,1]·(g·x[1,1]) · g = x[1,1]x[1,2] · g
  SkewElement prod = skew_mul(T(4, P("x[1,1]"), g),
                              T(4, P("x[1,1]"), perm_identity(4)));
  CHECK(prod == T(4, P("x[1,1]*x[1,2]"), g));
  // same factors, opposite order: no twist applies
  SkewElement prod2 = skew_mul(T(4, P("x[1,1]"), perm_identity(4)),
                               T(4, P("x[1,1]"), g));
  CHECK(prod2 == T(4, P("x[1,1]^2"), g));
  CHECK(skew_mul(SkewElement::zero(4), SkewElement::one(4)).is_zero());
}

TEST_CASE("ring laws") {
  std::mt19937_64 rng(7);
  const int m = 4;
  SkewElement one = SkewElement::one(m);
  for (int it = 0; it < 100; ++it) {
    SkewElement u = random_skew(rng, m);
    SkewElement v = random_skew(rng, m);
    SkewElement w = random_skew(rng, m);
    CHECK(skew_mul(one, u) == u);
    CHECK(skew_mul(u, one) == u);
    CHECK(skew_mul(skew_mul(u, v), w) == skew_mul(u, skew_mul(v, w)));
    CHECK(skew_mul(u, skew_add(v, w)) ==
          skew_add(skew_mul(u, v), skew_mul(u, w)));
    CHECK(skew_mul(skew_add(u, v), w) ==
          skew_add(skew_mul(u, w), skew_mul(v, w)));
    CHECK(skew_add(u, v) == skew_add(v, u));
  }
}

TEST_CASE("the twist identity") {
  std::mt19937_64 rng(11);
  const int m = 4;
  for (int it = 0; it < 100; ++it) {
    Perm g = random_perm(rng, m);
    Poly b = random_coeff(rng, m);
    // (1·g)(b·e) = (g·b)·g
    CHECK(skew_mul(T(m, P("1"), g), T(m, b, perm_identity(m))) ==
          T(m, perm_act(g, b), g));
  }
}

TEST_CASE("mixed truncations are rejected") {
  CHECK_THROWS_AS(skew_add(SkewElement::one(4), SkewElement::one(5)),
                  ShapeError);
  CHECK_THROWS_AS(skew_mul(SkewElement::one(4), SkewElement::one(5)),
                  ShapeError);
}

TEST_CASE("minimal support") {
  CHECK(minimal_support(P("x[1,3] + x[1,5]^2")) == std::vector<int>{3, 5});
  CHECK(minimal_support(P("42")).empty());
  CHECK(minimal_support(Poly()).empty());
  CHECK(minimal_support(P("x[2,1]*x[1,4]")) == std::vector<int>{1, 4});
}

TEST_CASE("permutations fixing the support columns fix the element") {
  std::mt19937_64 rng(13);
  const int m = 6;
  for (int it = 0; it < 200; ++it) {
    Poly p = random_coeff(rng, 3);  // support within [1..3]
    auto cols = minimal_support(p);
    for (int x = 1; x <= m; ++x) {
      if (std::find(cols.begin(), cols.end(), x) != cols.end()) continue;
      for (int y = x + 1; y <= m; ++y) {
        if (std::find(cols.begin(), cols.end(), y) != cols.end()) continue;
        CHECK(perm_act(perm_transposition(m, x, y), p) == p);
      }
    }
    // moving a support column changes the polynomial
    if (!cols.empty()) {
      int c = cols.front();
      int free = 0;
      for (int y = 1; y <= m && !free; ++y)
        if (std::find(cols.begin(), cols.end(), y) == cols.end()) free = y;
      if (free) CHECK(perm_act(perm_transposition(m, c, free), p) != p);
    }
  }
}
