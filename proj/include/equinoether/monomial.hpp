#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "equinoether/injection.hpp"

namespace equinoether {

// RowColumn: x[row, col] with the symmetry acting on col.
// Pair: y[a, b] with independent actions on both coordinates; a is stored in
// `row`, b in `col`.
enum class VarShape { RowColumn, Pair };

struct Variable {
  int row = 1;
  int col = 1;
  bool operator==(const Variable&) const = default;
};

// significance under LexColMajor: higher column, then higher row
inline bool var_less(const Variable& a, const Variable& b) {
  return a.col != b.col ? a.col < b.col : a.row < b.row;
}

enum class Ordering { Less, Equal, Greater };

enum class TermOrder { LexColMajor };

class Monomial {
 public:
  Monomial() = default;  // the monomial 1; carries no shape

  static Monomial variable(VarShape shape, Variable v, int exp = 1);
  // merges repeated variables; exponents must end up positive
  static Monomial product(VarShape shape,
                          std::vector<std::pair<Variable, int>> factors);

  std::optional<VarShape> shape() const { return shape_; }
  // factors ascending in significance; exponents positive
  const std::vector<std::pair<Variable, int>>& factors() const {
    return factors_;
  }
  bool is_one() const { return factors_.empty(); }
  int degree() const;
  int exponent(Variable v) const;

  std::vector<int> columns() const;  // distinct support columns, ascending
  std::vector<int> rows_used() const;
  int width() const;  // number of distinct support columns
  int max_col() const;  // 0 for the monomial 1

  Monomial times(const Monomial& other) const;
  bool divisible_by(const Monomial& d) const;  // plain, no symmetry
  std::optional<Monomial> divided_by(const Monomial& d) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  // relabel support columns through pi (every support column must be mapped)
  Monomial apply_columns(const FinitePartialInjection& pi) const;
  // Pair shape: relabel both coordinates independently
  Monomial apply_pair(const FinitePartialInjection& first,
                      const FinitePartialInjection& second) const;

  bool operator==(const Monomial&) const = default;

 private:
  std::optional<VarShape> shape_;
  std::vector<std::pair<Variable, int>> factors_;
};

Ordering compare(TermOrder order, const Monomial& m1, const Monomial& m2);
bool monomial_less(const Monomial& m1, const Monomial& m2);

std::string to_string(const Monomial& m);

}  // namespace equinoether
