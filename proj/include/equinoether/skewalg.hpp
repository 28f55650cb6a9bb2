#pragma once

#include <utility>
#include <vector>

#include "equinoether/polynomial.hpp"
#include "equinoether/smallperm.hpp"

namespace equinoether {

// Element of the skew group ring R_m * Sym(m): a finite sum of terms a·g with
// a in the truncated polynomial ring (columns <= m) and g a permutation of
// [1..m].  Multiplication twists by the action: (a·g)(b·h) = a(g·b)·gh.
class SkewElement {
 public:
  SkewElement() = default;  // zero with no ambient m; usable only via make

  static SkewElement make(int m, std::vector<std::pair<Poly, Perm>> terms);
  static SkewElement zero(int m) { return make(m, {}); }
  static SkewElement one(int m);

  int m() const { return m_; }
  const std::vector<std::pair<Poly, Perm>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool operator==(const SkewElement&) const = default;

 private:
  int m_ = 0;
  std::vector<std::pair<Poly, Perm>> terms_;  // sorted by perm, coeffs nonzero
};

// g acting on columns: x[i,s] -> x[i,g(s)]
Poly perm_act(const Perm& g, const Poly& a);

SkewElement skew_add(const SkewElement& u, const SkewElement& v);
SkewElement skew_mul(const SkewElement& u, const SkewElement& v);

// Columns a truncation must retain for P to survive: exactly the support
// columns of P (empty for constants).
std::vector<int> minimal_support(const Poly& P);

}  // namespace equinoether
