#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "equinoether/injection.hpp"
#include "equinoether/polynomial.hpp"
#include "equinoether/relations.hpp"

namespace equinoether {

// A finite set of positive integers, the object of an orbit category.
struct OrbitObject {
  std::vector<int> points;  // sorted, distinct

  static OrbitObject make(std::vector<int> points);
  int size() const { return static_cast<int>(points.size()); }
  bool operator==(const OrbitObject&) const = default;
};

// Morphism source -> target, carried contravariantly by an extendable
// injection target.points -> source.points.
struct OrbitMorphism {
  RelationKind kind = RelationKind::FullSymmetric;
  OrbitObject source;
  OrbitObject target;
  FinitePartialInjection witness;

  bool operator==(const OrbitMorphism&) const = default;
};

// All morphisms T -> L for the given kind, i.e. all extendable injections
// L.points -> T.points, in lexicographic order of the target tuple.
std::vector<OrbitMorphism> hom_set(RelationKind kind, const OrbitObject& T,
                                   const OrbitObject& L);

OrbitMorphism identity_morphism(RelationKind kind, const OrbitObject& T);

// Composition g ∘ f for f : T -> L and g : L -> M; the witness composes the
// other way round.
OrbitMorphism compose(const OrbitMorphism& g, const OrbitMorphism& f);

// Counts Hom(T, L) in the full-symmetric kind by brute force inside Sym(m):
// keeps g with g·H_T·g^{-1} ⊆ H_L (checked on transposition generators) and
// counts the cosets H_L·g among them.  T, L ⊆ [1..m]; m > cap throws
// BudgetExceeded.
long hom_count_bruteforce_sym(int m, const OrbitObject& T, const OrbitObject& L,
                              int cap = 8);

// Invariant sections of the polynomial sheaf at truncation m: the fixed ring
// of H_L acting on variables indexed by injective d-tuples (d = 1 gives
// x[1,l], d = 2 gives y[a,b] with the diagonal action).  Validation samples
// random ring elements and checks "fixed by the generators of H_L" against
// "supported on section indeterminates".
struct SheafSectionReport {
  int d = 1;
  OrbitObject L;
  int m = 0;
  std::vector<Monomial> indeterminates;
  int samples = 0;
  bool validated = false;
};

SheafSectionReport sheaf_section(int d, const OrbitObject& L, int m,
                                 int samples = 100,
                                 std::uint64_t seed = 123456789, int cap = 8);

// Fixed sections of the free module with basis e_σ for injective dT-tuples σ
// into [1..m] over the one-row truncated ring; the group permutes basis
// tuples and coefficient columns simultaneously.  The section is free over
// the fixed subring on the tuples landing in L.
struct FreeModuleSectionReport {
  int dT = 0;
  OrbitObject L;
  int m = 0;
  std::vector<std::vector<int>> basis;   // injective dT-tuples into L
  std::vector<int> coefficient_columns;  // columns of the fixed subring
  int samples = 0;
  bool validated = false;
};

FreeModuleSectionReport free_module_section(int dT, const OrbitObject& L, int m,
                                            int samples = 100,
                                            std::uint64_t seed = 123456789,
                                            int cap = 8);

}  // namespace equinoether
