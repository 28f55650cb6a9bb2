#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "equinoether/equivariant.hpp"
#include "equinoether/symmetry.hpp"

namespace equinoether {

// Line-oriented ideal/basis file:
//   # comment
//   symmetry: inc|sym|pairsym
//   rows: <n>              (inc/sym only)
//   order: lex-colmajor    (optional; written for Gröbner output)
//   basis-size: <n>        (optional; validated when present)
//   <one generator per line>
struct IdealFile {
  SymmetryType symmetry = SymmetryType::inc_columns(1);
  std::vector<Poly> generators;
};

IdealFile load_ideal(const std::string& text);
IdealFile load_ideal_file(const std::string& path);

std::string format_ideal(const SymmetryType& symmetry,
                         const std::vector<Poly>& generators);
std::string format_groebner(const GroebnerBasis& gb);

}  // namespace equinoether
