#include "equinoether/symmetry.hpp"

#include "equinoether/errors.hpp"

namespace equinoether {

SymmetryType SymmetryType::inc_columns(int rows) {
  if (rows < 1) throw ShapeError("row count must be >= 1");
  return SymmetryType(Tag::IncColumns, rows);
}

SymmetryType SymmetryType::sym_columns(int rows) {
  if (rows < 1) throw ShapeError("row count must be >= 1");
  return SymmetryType(Tag::SymColumns, rows);
}

SymmetryType SymmetryType::pair_sym() {
  return SymmetryType(Tag::PairSym, 0);
}

std::string SymmetryType::name() const {
  switch (tag_) {
    case Tag::IncColumns: return "inc";
    case Tag::SymColumns: return "sym";
    case Tag::PairSym: return "pairsym";
  }
  return "?";
}

std::optional<SymmetryType> SymmetryType::from_name(std::string_view name,
                                                    int rows) {
  if (name == "inc") return inc_columns(rows);
  if (name == "sym") return sym_columns(rows);
  if (name == "pairsym") return pair_sym();
  return std::nullopt;
}

void check_shape(const Monomial& m, const SymmetryType& symmetry) {
  if (m.is_one()) return;
  if (*m.shape() != symmetry.shape())
    throw ShapeError("variable shape does not match the symmetry");
  if (symmetry.shape() == VarShape::RowColumn) {
    for (int r : m.rows_used())
      if (r > symmetry.rows())
        throw ShapeError("row " + std::to_string(r) + " exceeds declared row count " +
                         std::to_string(symmetry.rows()));
  }
}

void check_shape(const Poly& p, const SymmetryType& symmetry) {
  for (const auto& [m, c] : p.terms()) check_shape(m, symmetry);
}

}  // namespace equinoether
