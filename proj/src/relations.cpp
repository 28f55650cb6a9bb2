#include "equinoether/relations.hpp"

#include <algorithm>
#include <set>

#include "equinoether/errors.hpp"

namespace equinoether {

int relation_arity(RelationKind kind) {
  switch (kind) {
    case RelationKind::FullSymmetric: return 0;
    case RelationKind::LinearOrder: return 2;
    case RelationKind::Betweenness: return 3;
    case RelationKind::CyclicOrder: return 3;
    case RelationKind::Separation: return 4;
  }
  throw Unsupported("unknown relation kind");
}

std::string to_string(RelationKind kind) {
  switch (kind) {
    case RelationKind::FullSymmetric: return "full";
    case RelationKind::LinearOrder: return "linear";
    case RelationKind::Betweenness: return "betweenness";
    case RelationKind::CyclicOrder: return "cyclic";
    case RelationKind::Separation: return "separation";
  }
  throw Unsupported("unknown relation kind");
}

std::optional<RelationKind> relation_kind_from_name(std::string_view name) {
  if (name == "full") return RelationKind::FullSymmetric;
  if (name == "linear") return RelationKind::LinearOrder;
  if (name == "betweenness") return RelationKind::Betweenness;
  if (name == "cyclic") return RelationKind::CyclicOrder;
  if (name == "separation") return RelationKind::Separation;
  return std::nullopt;
}

bool betweenness(int x, int y, int z) {
  return (y < x && x < z) || (z < x && x < y);
}

bool cyclic(int a, int b, int c) {
  return (a < b && b < c) || (b < c && c < a) || (c < a && a < b);
}

bool separates(int a, int b, int c, int d) {
  return cyclic(a, c, b) != cyclic(a, d, b);
}

std::vector<int> pattern(const std::vector<int>& tuple) {
  if (tuple.empty()) throw InvalidTuple("empty tuple");
  std::vector<int> sorted;
  for (int v : tuple) {
    if (v < 1) throw InvalidTuple("tuple entries must be positive");
    sorted.push_back(v);
  }
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvalidTuple("tuple entries must be pairwise distinct");
  std::vector<int> out;
  out.reserve(tuple.size());
  for (int v : tuple) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
    out.push_back(static_cast<int>(it - sorted.begin()) + 1);
  }
  return out;
}

namespace {

std::vector<int> apply_values(const std::vector<int>& pat,
                              const std::vector<int>& value_map) {
  std::vector<int> out;
  out.reserve(pat.size());
  for (int v : pat) out.push_back(value_map[v - 1]);
  return out;
}

}  // namespace

std::vector<std::vector<int>> value_symmetry_images(
    RelationKind kind, const std::vector<int>& pat) {
  const int n = static_cast<int>(pat.size());
  std::set<std::vector<int>> images;
  auto add_map = [&](const std::vector<int>& value_map) {
    images.insert(apply_values(pat, value_map));
  };

  std::vector<int> reversal(n), rotation(n);
  for (int v = 1; v <= n; ++v) reversal[v - 1] = n + 1 - v;

  switch (kind) {
    case RelationKind::LinearOrder:
      images.insert(pat);
      break;
    case RelationKind::Betweenness:
      images.insert(pat);
      add_map(reversal);
      break;
    case RelationKind::CyclicOrder:
      for (int k = 0; k < n; ++k) {
        for (int v = 1; v <= n; ++v) rotation[v - 1] = (v - 1 + k) % n + 1;
        add_map(rotation);
      }
      break;
    case RelationKind::Separation:
      for (int k = 0; k < n; ++k) {
        for (int v = 1; v <= n; ++v) rotation[v - 1] = (v - 1 + k) % n + 1;
        add_map(rotation);
        add_map(apply_values(reversal, rotation));  // rotation o reversal
      }
      break;
    case RelationKind::FullSymmetric: {
      // every relabeling of values; the orbit is all patterns of length n
      std::vector<int> value_map(n);
      for (int v = 1; v <= n; ++v) value_map[v - 1] = v;
      do {
        add_map(value_map);
      } while (std::next_permutation(value_map.begin(), value_map.end()));
      break;
    }
  }
  return {images.begin(), images.end()};
}

std::vector<int> canonical_tuple(RelationKind kind,
                                 const std::vector<int>& tuple) {
  std::vector<int> pat = pattern(tuple);
  if (kind == RelationKind::FullSymmetric) {
    // lex-least image relabels values in order of first occurrence, giving
    // (1,2,...,n) without walking all of Sym(n)
    std::vector<int> value_map(pat.size(), 0);
    int next = 1;
    for (int v : pat)
      if (value_map[v - 1] == 0) value_map[v - 1] = next++;
    return apply_values(pat, value_map);
  }
  auto images = value_symmetry_images(kind, pat);
  return images.front();  // sorted set, first = lex least
}

bool extendable(RelationKind kind, const FinitePartialInjection& sigma) {
  const auto& pairs = sigma.pairs();
  const int k = static_cast<int>(pairs.size());
  auto s = [&](int i) { return pairs[i].first; };
  auto t = [&](int i) { return pairs[i].second; };

  switch (kind) {
    case RelationKind::FullSymmetric:
      return true;
    case RelationKind::LinearOrder:
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          if (i != j && s(i) < s(j) && !(t(i) < t(j))) return false;
      return true;
    case RelationKind::Betweenness:
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          for (int l = 0; l < k; ++l) {
            if (i == j || j == l || i == l) continue;
            if (betweenness(s(i), s(j), s(l)) &&
                !betweenness(t(i), t(j), t(l)))
              return false;
          }
      return true;
    case RelationKind::CyclicOrder:
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          for (int l = 0; l < k; ++l) {
            if (i == j || j == l || i == l) continue;
            if (cyclic(s(i), s(j), s(l)) && !cyclic(t(i), t(j), t(l)))
              return false;
          }
      return true;
    case RelationKind::Separation:
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          for (int l = 0; l < k; ++l)
            for (int p = 0; p < k; ++p) {
              if (i == j || i == l || i == p || j == l || j == p || l == p)
                continue;
              if (separates(s(i), s(j), s(l), s(p)) &&
                  !separates(t(i), t(j), t(l), t(p)))
                return false;
            }
      return true;
  }
  throw Unsupported("unknown relation kind");
}

GrowthTable growth(RelationKind kind, int n_max, int cap) {
  if (n_max < 1) throw InvalidTuple("n_max must be >= 1");
  if (n_max > cap)
    throw BudgetExceeded("growth table capped at n = " + std::to_string(cap));
  GrowthTable table;
  table.kind = kind;
  for (int n = 1; n <= n_max; ++n) {
    std::set<std::vector<int>> tuple_canon, subset_canon;
    std::vector<int> pat(n);
    for (int v = 1; v <= n; ++v) pat[v - 1] = v;
    do {
      tuple_canon.insert(canonical_tuple(kind, pat));
    } while (std::next_permutation(pat.begin(), pat.end()));
    // a subset is an increasing tuple up to reordering of positions: canonical
    // form = lex-least sorted image over the value symmetries
    std::vector<int> increasing(n);
    for (int v = 1; v <= n; ++v) increasing[v - 1] = v;
    std::vector<int> best;
    for (auto img : value_symmetry_images(kind, increasing)) {
      std::sort(img.begin(), img.end());
      if (best.empty() || img < best) best = img;
    }
    subset_canon.insert(best);
    table.rows[n] = GrowthRow{static_cast<long>(tuple_canon.size()),
                              static_cast<long>(subset_canon.size())};
  }
  return table;
}

}  // namespace equinoether
