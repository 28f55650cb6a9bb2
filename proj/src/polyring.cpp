#include "equinoether/polyring.hpp"

#include <algorithm>
#include <set>

#include "equinoether/errors.hpp"
#include "equinoether/smallperm.hpp"

namespace equinoether {

namespace {

// strictly increasing map: support -> 1..w
FinitePartialInjection compression(const std::vector<int>& support) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(support.size());
  int next = 1;
  for (int c : support) pairs.emplace_back(c, next++);
  return FinitePartialInjection(std::move(pairs));
}

// compose a permutation of [1..w] after the compression of `support`
FinitePartialInjection relabeling(const std::vector<int>& support,
                                  const Perm& perm) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(support.size());
  for (std::size_t i = 0; i < support.size(); ++i)
    pairs.emplace_back(support[i], perm[i]);
  return FinitePartialInjection(std::move(pairs));
}

long factorial(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

Monomial canonicalize(const Monomial& m, const SymmetryType& symmetry,
                      int cap) {
  check_shape(m, symmetry);
  if (m.is_one()) return m;
  switch (symmetry.tag()) {
    case SymmetryType::Tag::IncColumns:
      return m.apply_columns(compression(m.columns()));
    case SymmetryType::Tag::SymColumns: {
      auto cols = m.columns();
      Monomial best;
      bool have = false;
      for (const Perm& perm : all_permutations(static_cast<int>(cols.size()))) {
        Monomial img = m.apply_columns(relabeling(cols, perm));
        if (!have || monomial_less(best, img)) best = img, have = true;
      }
      return best;
    }
    case SymmetryType::Tag::PairSym: {
      auto first = m.rows_used();
      auto second = m.columns();
      if (static_cast<int>(first.size()) > cap ||
          static_cast<int>(second.size()) > cap)
        throw BudgetExceeded("pair support exceeds canonicalization cap");
      if (factorial(static_cast<int>(first.size())) *
              factorial(static_cast<int>(second.size())) >
          2000000)
        throw BudgetExceeded("pair canonicalization search too large");
      Monomial best;
      bool have = false;
      for (const Perm& pa : all_permutations(static_cast<int>(first.size())))
        for (const Perm& pb :
             all_permutations(static_cast<int>(second.size()))) {
          Monomial img =
              m.apply_pair(relabeling(first, pa), relabeling(second, pb));
          if (!have || monomial_less(best, img)) best = img, have = true;
        }
      return best;
    }
  }
  throw Unsupported("unknown symmetry");
}

Poly compress_columns(const Poly& p) {
  if (p.is_zero()) return p;
  return p.apply_columns(compression(p.columns()));
}

Poly canonicalize(const Poly& p, const SymmetryType& symmetry, int cap) {
  check_shape(p, symmetry);
  if (p.is_zero()) return p;
  switch (symmetry.tag()) {
    case SymmetryType::Tag::IncColumns:
      return p.apply_columns(compression(p.columns()));
    case SymmetryType::Tag::SymColumns: {
      auto cols = p.columns();
      if (static_cast<int>(cols.size()) > 9)
        throw BudgetExceeded("support exceeds relabeling cap");
      Poly best;
      bool have = false;
      for (const Perm& perm : all_permutations(static_cast<int>(cols.size()))) {
        Poly img = p.apply_columns(relabeling(cols, perm));
        if (!have || poly_less(best, img)) best = img, have = true;
      }
      return best;
    }
    case SymmetryType::Tag::PairSym: {
      auto first = p.rows_used();
      auto second = p.columns();
      if (static_cast<int>(first.size()) > cap ||
          static_cast<int>(second.size()) > cap)
        throw BudgetExceeded("pair support exceeds canonicalization cap");
      if (factorial(static_cast<int>(first.size())) *
              factorial(static_cast<int>(second.size())) >
          2000000)
        throw BudgetExceeded("pair canonicalization search too large");
      Poly best;
      bool have = false;
      for (const Perm& pa : all_permutations(static_cast<int>(first.size())))
        for (const Perm& pb :
             all_permutations(static_cast<int>(second.size()))) {
          Poly img =
              p.apply_pair(relabeling(first, pa), relabeling(second, pb));
          if (!have || poly_less(best, img)) best = img, have = true;
        }
      return best;
    }
  }
  throw Unsupported("unknown symmetry");
}

namespace {

// all size-k subsets of [1..m], each ascending
std::vector<std::vector<int>> combinations(int m, int k) {
  std::vector<std::vector<int>> out;
  if (k > m) return out;
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i + 1;
  for (;;) {
    out.push_back(pick);
    int i = k - 1;
    while (i >= 0 && pick[i] == m - (k - 1 - i)) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

// all injective placements of `support` into [1..m]; increasing only, or all
std::vector<FinitePartialInjection> placements(const std::vector<int>& support,
                                               int m, bool increasing_only) {
  std::vector<FinitePartialInjection> out;
  const int k = static_cast<int>(support.size());
  for (const auto& targets : combinations(m, k)) {
    if (increasing_only) {
      std::vector<std::pair<int, int>> pairs;
      for (int i = 0; i < k; ++i) pairs.emplace_back(support[i], targets[i]);
      out.emplace_back(std::move(pairs));
    } else {
      std::vector<int> arranged = targets;
      std::sort(arranged.begin(), arranged.end());
      do {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < k; ++i) pairs.emplace_back(support[i], arranged[i]);
        out.emplace_back(std::move(pairs));
      } while (std::next_permutation(arranged.begin(), arranged.end()));
    }
  }
  return out;
}

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

long arrangements_count(int m, int k) {
  long a = 1;
  for (int i = 0; i < k; ++i) a *= (m - i);
  return a;
}

}  // namespace

std::vector<Poly> orbit_expand(const Poly& g, const SymmetryType& symmetry,
                               TruncationContext ctx, std::size_t cap) {
  check_shape(g, symmetry);
  if (g.is_zero()) return {};
  if (ctx.m < 1) throw ShapeError("truncation horizon must be >= 1");

  std::set<Poly, bool (*)(const Poly&, const Poly&)> images(&poly_less<Rational>);
  switch (symmetry.tag()) {
    case SymmetryType::Tag::IncColumns:
    case SymmetryType::Tag::SymColumns: {
      auto cols = g.columns();
      if (static_cast<int>(cols.size()) > ctx.m)
        throw ShapeError("support is wider than the truncation");
      bool inc = symmetry.tag() == SymmetryType::Tag::IncColumns;
      long predicted = inc ? binomial(ctx.m, static_cast<int>(cols.size()))
                           : arrangements_count(ctx.m, static_cast<int>(cols.size()));
      if (predicted > static_cast<long>(cap))
        throw BudgetExceeded("orbit expansion too large");
      for (const auto& pi : placements(cols, ctx.m, inc))
        images.insert(g.apply_columns(pi));
      break;
    }
    case SymmetryType::Tag::PairSym: {
      auto first = g.rows_used();
      auto second = g.columns();
      if (static_cast<int>(first.size()) > ctx.m ||
          static_cast<int>(second.size()) > ctx.m)
        throw ShapeError("support is wider than the truncation");
      long predicted =
          arrangements_count(ctx.m, static_cast<int>(first.size())) *
          arrangements_count(ctx.m, static_cast<int>(second.size()));
      if (predicted > static_cast<long>(cap))
        throw BudgetExceeded("orbit expansion too large");
      for (const auto& pa : placements(first, ctx.m, false))
        for (const auto& pb : placements(second, ctx.m, false))
          images.insert(g.apply_pair(pa, pb));
      break;
    }
  }
  return {images.begin(), images.end()};
}

}  // namespace equinoether
