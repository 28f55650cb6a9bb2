#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "equinoether/injection.hpp"
#include "equinoether/polynomial.hpp"
#include "equinoether/polyring.hpp"
#include "equinoether/symmetry.hpp"

namespace equinoether {

// Witness that some monoid/group element carries m onto a divisor of n.
// `first` maps support columns (row-column shapes) or first coordinates
// (pair shape); `second` is used by the pair shape only.
struct DivisionWitness {
  FinitePartialInjection first;
  FinitePartialInjection second;
};

// Equivariant divisibility: an injection of m's support indices into n's —
// strictly increasing for IncColumns, arbitrary for SymColumns, independent
// per coordinate for PairSym — whose image of m divides n.  Returns the
// lexicographically least witness, or nullopt.
std::optional<DivisionWitness> eq_divides(const Monomial& m, const Monomial& n,
                                          const SymmetryType& symmetry,
                                          int cap = 8);

// All compressed images of g under permutations of its support columns.  The
// IncColumns ideal of the returned list equals the SymColumns ideal of {g}.
std::vector<Poly> sym_to_inc_generators(const Poly& g, int rows, int cap = 8);

// Equivariant division.  SymColumns bases are first translated through
// sym_to_inc_generators; PairSym has no reduction engine.
Poly eq_reduce(const Poly& f, const std::vector<Poly>& basis,
               const SymmetryType& symmetry, TermOrder order);

struct EquivariantIdeal {
  SymmetryType symmetry;
  std::vector<Poly> generators;  // nonzero, canonicalized, deduplicated

  static EquivariantIdeal make(SymmetryType symmetry, std::vector<Poly> gens);
};

struct PairBudget {
  std::size_t max_s_pairs = 10000;  // reductions attempted before giving up
};

struct GroebnerBasis {
  SymmetryType symmetry;
  TermOrder order = TermOrder::LexColMajor;
  // monic, autoreduced, sorted; for SymColumns these are the translated
  // IncColumns basis elements, closed under the needed permutation images
  std::vector<Poly> elements;
};

struct CompletionStats {
  std::size_t s_pairs_reduced = 0;
  std::size_t adjoined = 0;
  std::size_t passes = 0;
};

GroebnerBasis eq_buchberger(const EquivariantIdeal& ideal, TermOrder order,
                            PairBudget budget = {},
                            CompletionStats* stats = nullptr);

bool eq_member(const Poly& f, const GroebnerBasis& gb);

// strict-growth certificate for one stage of a PairSym chain
struct ChainWitness {
  Poly generator;            // next-stage generator with no divisor
  std::vector<Poly> checked;  // current-stage generators exhaustively tried
};

struct ChainStageReport {
  int stage = 0;             // compares this stage against stage+1
  bool contained = false;    // next stage's generators all lie in this ideal
  std::vector<Poly> failing;
  std::vector<ChainWitness> witnesses;  // PairSym only
};

struct ChainReport {
  SymmetryType symmetry;
  std::optional<int> stabilized_at;  // least j with stage j+1 inside stage j
  std::vector<ChainStageReport> stages;
};

// Stages must be nested (each stage repeats the previous generators).  For
// Inc/Sym, containment is decided by the Gröbner engine; for PairSym all
// generators must be monomials and containment is exhaustive divisibility.
ChainReport chain_analyze(const SymmetryType& symmetry,
                          const std::vector<std::vector<Poly>>& stages,
                          int horizon, PairBudget budget = {});

}  // namespace equinoether
