#pragma once

#include <vector>

#include "equinoether/polynomial.hpp"
#include "equinoether/symmetry.hpp"

namespace equinoether {

// Unique orbit representative of a monomial: compress support indices to an
// initial segment, and for the group symmetries take the LexColMajor-greatest
// relabeled image (exhaustively; PairSym support capped).
Monomial canonicalize(const Monomial& m, const SymmetryType& symmetry,
                      int cap = 8);

// Same convention lifted to polynomials: one joint relabeling of the support,
// applied to every term.  Used to normalize ideal generators.
Poly canonicalize(const Poly& p, const SymmetryType& symmetry, int cap = 8);

// joint compression of all support columns to 1..w (the IncColumns canonical
// form, without shape validation)
Poly compress_columns(const Poly& p);

// All distinct images of g with support inside [1..ctx.m].
std::vector<Poly> orbit_expand(const Poly& g, const SymmetryType& symmetry,
                               TruncationContext ctx,
                               std::size_t cap = 500000);

// Classical multivariate division: remainder of f modulo basis, reducing the
// order-greatest reducible term first with the first eligible basis element.
template <class K>
Polynomial<K> reduce_classical(const Polynomial<K>& f,
                               const std::vector<Polynomial<K>>& basis,
                               TermOrder order) {
  (void)order;
  Polynomial<K> h = f;
  std::size_t scan_from = 0;  // terms before this index are known irreducible
  while (scan_from < h.term_count()) {
    bool stepped = false;
    for (std::size_t ti = scan_from; ti < h.term_count() && !stepped; ++ti) {
      const auto& [t, c] = h.terms()[ti];
      for (const auto& g : basis) {
        if (g.is_zero()) continue;
        if (auto u = t.divided_by(g.leading_monomial())) {
          h = h.minus(g.times_term(*u, c / g.leading_coefficient()));
          scan_from = ti;
          stepped = true;
          break;
        }
      }
      if (!stepped) scan_from = ti + 1;
    }
    if (!stepped) break;
  }
  return h;
}

namespace detail {

template <class K>
Polynomial<K> spoly(const Polynomial<K>& f, const Polynomial<K>& g) {
  Monomial gamma = f.leading_monomial().lcm(g.leading_monomial());
  auto uf = gamma.divided_by(f.leading_monomial());
  auto ug = gamma.divided_by(g.leading_monomial());
  return f.times_term(*uf, K(1) / f.leading_coefficient())
      .minus(g.times_term(*ug, K(1) / g.leading_coefficient()));
}

}  // namespace detail

// Buchberger with the coprimality criterion; returns the reduced basis
// (monic, autoreduced, sorted ascending under the order).
template <class K>
std::vector<Polynomial<K>> buchberger_classical(
    std::vector<Polynomial<K>> gens, TermOrder order) {
  std::vector<Polynomial<K>> basis;
  for (auto& g : gens)
    if (!g.is_zero()) basis.push_back(g.monic());

  std::vector<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      pending.emplace_back(i, j);
  std::size_t next = 0;
  while (next < pending.size()) {
    auto [i, j] = pending[next++];
    if (basis[i].leading_monomial().coprime(basis[j].leading_monomial()))
      continue;
    Polynomial<K> r =
        reduce_classical(detail::spoly(basis[i], basis[j]), basis, order);
    if (r.is_zero()) continue;
    r = r.monic();
    basis.push_back(r);
    for (std::size_t k = 0; k + 1 < basis.size(); ++k)
      pending.emplace_back(k, basis.size() - 1);
  }

  // minimalize: drop elements whose lead is divisible by another's
  std::vector<Polynomial<K>> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      if (basis[i].leading_monomial().divisible_by(basis[j].leading_monomial()))
        redundant = basis[i].leading_monomial() != basis[j].leading_monomial()
                    || j < i;  // among equal leads keep the first
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // tail-reduce each element against the others
  std::vector<Polynomial<K>> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial<K>> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced.push_back(reduce_classical(minimal[i], others, order).monic());
  }
  std::sort(reduced.begin(), reduced.end(),
            [](const Polynomial<K>& a, const Polynomial<K>& b) {
              return poly_less(a, b);
            });
  return reduced;
}

}  // namespace equinoether
