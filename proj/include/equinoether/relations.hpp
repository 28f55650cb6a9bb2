#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "equinoether/injection.hpp"

namespace equinoether {

// The five reducts of (Q, <) with a highly homogeneous automorphism group:
// no structure, the order itself, betweenness, the circular order, and
// separation.
enum class RelationKind {
  FullSymmetric,
  LinearOrder,
  Betweenness,
  CyclicOrder,
  Separation,
};

int relation_arity(RelationKind kind);  // 0, 2, 3, 3, 4
std::string to_string(RelationKind kind);
std::optional<RelationKind> relation_kind_from_name(std::string_view name);

// ternary betweenness on distinct rationals: x lies strictly between y and z
bool betweenness(int x, int y, int z);
// cyclic (clockwise) orientation of distinct a, b, c
bool cyclic(int a, int b, int c);
// {a,b} separates {c,d} on the circle
bool separates(int a, int b, int c, int d);

// Rank pattern of a tuple of pairwise distinct positive integers: entry i is
// the rank of tuple[i] (1 = smallest).  Throws InvalidTuple on repeats,
// non-positive entries, or an empty tuple.
std::vector<int> pattern(const std::vector<int>& tuple);

// All images of a rank pattern under the value symmetries the kind allows
// (identity only, order reversal, rotations, rotations + reflections, or all
// of Sym(n)).  Deduplicated, sorted.
std::vector<std::vector<int>> value_symmetry_images(RelationKind kind,
                                                    const std::vector<int>& pat);

// Lexicographically least pattern in the value-symmetry orbit of the tuple's
// pattern.  Two tuples get the same canonical pattern exactly when some
// relation-preserving injection maps one onto the other.
std::vector<int> canonical_tuple(RelationKind kind,
                                 const std::vector<int>& tuple);

// Does the finite partial injection extend to a permutation of the rationals
// preserving the kind's relation?  Decided on the support alone.
bool extendable(RelationKind kind, const FinitePartialInjection& sigma);

struct GrowthRow {
  long tuple_orbits = 0;
  long subset_orbits = 0;
};

struct GrowthTable {
  RelationKind kind;
  std::map<int, GrowthRow> rows;  // keyed by n = 1..n_max
};

// Orbit counts on n-tuples (pairwise distinct entries) and n-subsets for
// n = 1..n_max.  Enumerates rank patterns, so n_max is capped (default 7).
GrowthTable growth(RelationKind kind, int n_max, int cap = 7);

}  // namespace equinoether
