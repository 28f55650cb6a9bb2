#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "equinoether/errors.hpp"
#include "equinoether/monomial.hpp"
#include "equinoether/rational.hpp"

namespace equinoether {

// Sparse polynomial over an exact field K.  Terms are kept sorted leading
// term first (descending under LexColMajor); no zero coefficients.
template <class K>
class Polynomial {
 public:
  Polynomial() = default;  // zero

  static Polynomial constant(K c) {
    Polynomial p;
    if (!(c == K(0))) p.terms_.emplace_back(Monomial(), std::move(c));
    return p;
  }

  static Polynomial term(Monomial m, K c) {
    Polynomial p;
    if (!(c == K(0))) p.terms_.emplace_back(std::move(m), std::move(c));
    return p;
  }

  static Polynomial from_terms(std::vector<std::pair<Monomial, K>> terms) {
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
      return monomial_less(b.first, a.first);
    });
    Polynomial p;
    for (auto& [m, c] : terms) {
      if (!p.terms_.empty() && p.terms_.back().first == m)
        p.terms_.back().second += c;
      else
        p.terms_.emplace_back(std::move(m), std::move(c));
      if (p.terms_.back().second == K(0)) p.terms_.pop_back();
    }
    return p;
  }

  const std::vector<std::pair<Monomial, K>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  const Monomial& leading_monomial() const {
    if (is_zero()) throw ShapeError("zero polynomial has no leading monomial");
    return terms_.front().first;
  }
  const K& leading_coefficient() const {
    if (is_zero()) throw ShapeError("zero polynomial has no leading coefficient");
    return terms_.front().second;
  }

  std::optional<VarShape> shape() const {
    for (const auto& [m, c] : terms_)
      if (m.shape()) return m.shape();
    return std::nullopt;
  }

  std::vector<int> columns() const {
    std::vector<int> out;
    for (const auto& [m, c] : terms_) {
      auto cols = m.columns();
      out.insert(out.end(), cols.begin(), cols.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
  int width() const { return static_cast<int>(columns().size()); }
  int max_col() const {
    int best = 0;
    for (const auto& [m, c] : terms_) best = std::max(best, m.max_col());
    return best;
  }
  std::vector<int> rows_used() const {
    std::vector<int> out;
    for (const auto& [m, c] : terms_) {
      auto rows = m.rows_used();
      out.insert(out.end(), rows.begin(), rows.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  Polynomial plus(const Polynomial& other) const {
    auto ts = terms_;
    ts.insert(ts.end(), other.terms_.begin(), other.terms_.end());
    return from_terms(std::move(ts));
  }
  Polynomial negated() const {
    Polynomial p = *this;
    for (auto& [m, c] : p.terms_) c = -c;
    return p;
  }
  Polynomial minus(const Polynomial& other) const {
    return plus(other.negated());
  }
  Polynomial times_term(const Monomial& m, const K& c) const {
    std::vector<std::pair<Monomial, K>> ts;
    ts.reserve(terms_.size());
    for (const auto& [mm, cc] : terms_) ts.emplace_back(mm.times(m), cc * c);
    return from_terms(std::move(ts));
  }
  Polynomial times(const Polynomial& other) const {
    Polynomial acc;
    for (const auto& [m, c] : other.terms_) acc = acc.plus(times_term(m, c));
    return acc;
  }
  Polynomial scaled(const K& c) const {
    if (c == K(0)) return Polynomial();
    Polynomial p = *this;
    for (auto& [m, cc] : p.terms_) cc = cc * c;
    return p;
  }
  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(K(1) / leading_coefficient());
  }

  Polynomial apply_columns(const FinitePartialInjection& pi) const {
    std::vector<std::pair<Monomial, K>> ts;
    ts.reserve(terms_.size());
    for (const auto& [m, c] : terms_) ts.emplace_back(m.apply_columns(pi), c);
    return from_terms(std::move(ts));
  }
  Polynomial apply_pair(const FinitePartialInjection& first,
                        const FinitePartialInjection& second) const {
    std::vector<std::pair<Monomial, K>> ts;
    ts.reserve(terms_.size());
    for (const auto& [m, c] : terms_)
      ts.emplace_back(m.apply_pair(first, second), c);
    return from_terms(std::move(ts));
  }

  bool operator==(const Polynomial&) const = default;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    return a.plus(b);
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a.minus(b);
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    return a.times(b);
  }

 private:
  std::vector<std::pair<Monomial, K>> terms_;
};

using Poly = Polynomial<Rational>;

// total order on polynomials (term lists lexicographically); used only for
// deterministic storage and deduplication
template <class K>
int poly_compare(const Polynomial<K>& a, const Polynomial<K>& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  for (std::size_t i = 0; i < ta.size() && i < tb.size(); ++i) {
    auto ord = compare(TermOrder::LexColMajor, ta[i].first, tb[i].first);
    if (ord == Ordering::Less) return -1;
    if (ord == Ordering::Greater) return 1;
    if (ta[i].second < tb[i].second) return -1;
    if (tb[i].second < ta[i].second) return 1;
  }
  if (ta.size() != tb.size()) return ta.size() < tb.size() ? -1 : 1;
  return 0;
}

template <class K>
bool poly_less(const Polynomial<K>& a, const Polynomial<K>& b) {
  return poly_compare(a, b) < 0;
}

}  // namespace equinoether
