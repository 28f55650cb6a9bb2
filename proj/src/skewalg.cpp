#include "equinoether/skewalg.hpp"

#include <algorithm>
#include <map>

#include "equinoether/errors.hpp"

namespace equinoether {

namespace {

void check_term(int m, const Poly& a, const Perm& g) {
  if (static_cast<int>(g.size()) != m || !is_perm(g))
    throw ShapeError("group term is not a permutation of [1.." +
                     std::to_string(m) + "]");
  if (a.shape() == VarShape::Pair)
    throw ShapeError("skew ring coefficients use row/column variables");
  if (a.max_col() > m)
    throw ShapeError("coefficient uses a column outside the truncation");
}

}  // namespace

SkewElement SkewElement::make(int m, std::vector<std::pair<Poly, Perm>> terms) {
  if (m < 1) throw ShapeError("truncation must be positive");
  std::map<Perm, Poly> merged;
  for (auto& [a, g] : terms) {
    check_term(m, a, g);
    auto [it, fresh] = merged.try_emplace(g, a);
    if (!fresh) it->second = it->second + a;
  }
  SkewElement e;
  e.m_ = m;
  for (auto& [g, a] : merged)
    if (!a.is_zero()) e.terms_.emplace_back(std::move(a), g);
  return e;
}

SkewElement SkewElement::one(int m) {
  return make(m, {{Poly::constant(Rational(1)), perm_identity(m)}});
}

Poly perm_act(const Perm& g, const Poly& a) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(g.size());
  for (int s = 1; s <= static_cast<int>(g.size()); ++s)
    pairs.emplace_back(s, g[s - 1]);
  return a.apply_columns(FinitePartialInjection(std::move(pairs)));
}

SkewElement skew_add(const SkewElement& u, const SkewElement& v) {
  if (u.m() != v.m())
    throw ShapeError("skew elements live over different truncations");
  std::vector<std::pair<Poly, Perm>> terms = u.terms();
  terms.insert(terms.end(), v.terms().begin(), v.terms().end());
  return SkewElement::make(u.m(), std::move(terms));
}

SkewElement skew_mul(const SkewElement& u, const SkewElement& v) {
  if (u.m() != v.m())
    throw ShapeError("skew elements live over different truncations");
  std::vector<std::pair<Poly, Perm>> terms;
  for (const auto& [a, g] : u.terms())
    for (const auto& [b, h] : v.terms())
      terms.emplace_back(a * perm_act(g, b), perm_compose(g, h));
  return SkewElement::make(u.m(), std::move(terms));
}

std::vector<int> minimal_support(const Poly& P) { return P.columns(); }

}  // namespace equinoether
