#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "equinoether/monomial.hpp"
#include "equinoether/polynomial.hpp"

namespace equinoether {

// Which monoid/group acts on variable indices: strictly increasing column
// maps, arbitrary injective column maps, or independent injective maps on
// both coordinates of pair variables.
class SymmetryType {
 public:
  enum class Tag { IncColumns, SymColumns, PairSym };

  static SymmetryType inc_columns(int rows);
  static SymmetryType sym_columns(int rows);
  static SymmetryType pair_sym();

  Tag tag() const { return tag_; }
  int rows() const { return rows_; }  // 0 for PairSym
  VarShape shape() const {
    return tag_ == Tag::PairSym ? VarShape::Pair : VarShape::RowColumn;
  }
  std::string name() const;
  static std::optional<SymmetryType> from_name(std::string_view name, int rows);

  bool operator==(const SymmetryType&) const = default;

 private:
  SymmetryType(Tag tag, int rows) : tag_(tag), rows_(rows) {}
  Tag tag_;
  int rows_;
};

struct TruncationContext {
  int m = 1;  // column horizon: all column indices stay within [1..m]
};

// shape + row-range validation against the acting symmetry; ShapeError on
// mismatch
void check_shape(const Monomial& m, const SymmetryType& symmetry);
void check_shape(const Poly& p, const SymmetryType& symmetry);

}  // namespace equinoether
