#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "equinoether/errors.hpp"
#include "equinoether/relations.hpp"

using namespace equinoether;

namespace {

const RelationKind kAllKinds[] = {
    RelationKind::FullSymmetric, RelationKind::LinearOrder,
    RelationKind::Betweenness, RelationKind::CyclicOrder,
    RelationKind::Separation};

// ---- oracle 1: value-symmetry group by generator closure, orbit counting by
// ---- BFS partition (independent of the library's image formulas)

using Map = std::vector<int>;  // images of ranks 1..n

Map apply_map(const Map& g, const Map& p) {
  Map out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = g[p[i] - 1];
  return out;
}

std::vector<Map> oracle_group(RelationKind kind, int n) {
  Map id(n);
  std::iota(id.begin(), id.end(), 1);
  Map rev(n), rot(n);
  for (int r = 1; r <= n; ++r) rev[r - 1] = n + 1 - r;
  for (int r = 1; r <= n; ++r) rot[r - 1] = r % n + 1;

  std::vector<Map> gens;
  switch (kind) {
    case RelationKind::LinearOrder:
      break;
    case RelationKind::Betweenness:
      gens = {rev};
      break;
    case RelationKind::CyclicOrder:
      gens = {rot};
      break;
    case RelationKind::Separation:
      gens = {rot, rev};
      break;
    case RelationKind::FullSymmetric:
      for (int i = 1; i < n; ++i) {
        Map t = id;
        std::swap(t[i - 1], t[i]);
        gens.push_back(t);
      }
      break;
  }

  std::set<Map> closed = {id};
  std::vector<Map> frontier = {id};
  while (!frontier.empty()) {
    std::vector<Map> next;
    for (const Map& g : frontier)
      for (const Map& h : gens) {
        Map gh = apply_map(h, g);
        if (closed.insert(gh).second) next.push_back(gh);
      }
    frontier = std::move(next);
  }
  return {closed.begin(), closed.end()};
}

long oracle_tuple_orbits(RelationKind kind, int n) {
  auto group = oracle_group(kind, n);
  Map p(n);
  std::iota(p.begin(), p.end(), 1);
  std::set<Map> seen;
  long orbits = 0;
  do {
    if (seen.count(p)) continue;
    ++orbits;
    for (const Map& g : group) seen.insert(apply_map(g, p));
  } while (std::next_permutation(p.begin(), p.end()));
  return orbits;
}

// ---- oracle 2: extendability straight from the defining relations, checked
// ---- as an iff in both directions

bool o_between(int x, int y, int z) {
  return (y < x && x < z) || (z < x && x < y);
}
bool o_cyclic(int a, int b, int c) {
  return (a < b && b < c) || (b < c && c < a) || (c < a && a < b);
}
bool o_separates(int a, int b, int c, int d) {
  return o_cyclic(a, c, b) != o_cyclic(a, d, b);
}

void distinct_tuples(const std::vector<int>& pool, int arity,
                     std::vector<int>& tup,
                     const std::function<void(const std::vector<int>&)>& f) {
  if (static_cast<int>(tup.size()) == arity) {
    f(tup);
    return;
  }
  for (int v : pool) {
    if (std::find(tup.begin(), tup.end(), v) != tup.end()) continue;
    tup.push_back(v);
    distinct_tuples(pool, arity, tup, f);
    tup.pop_back();
  }
}

bool oracle_extendable(RelationKind kind, const FinitePartialInjection& sigma) {
  std::vector<int> src = sigma.sources();
  int arity = relation_arity(kind);
  if (arity == 0) return true;
  bool ok = true;
  std::vector<int> tup;
  distinct_tuples(src, arity, tup, [&](const std::vector<int>& t) {
    std::vector<int> it(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) it[i] = sigma.at(t[i]);
    bool before = false, after = false;
    switch (kind) {
      case RelationKind::LinearOrder:
        before = t[0] < t[1];
        after = it[0] < it[1];
        break;
      case RelationKind::Betweenness:
        before = o_between(t[0], t[1], t[2]);
        after = o_between(it[0], it[1], it[2]);
        break;
      case RelationKind::CyclicOrder:
        before = o_cyclic(t[0], t[1], t[2]);
        after = o_cyclic(it[0], it[1], it[2]);
        break;
      case RelationKind::Separation:
        before = o_separates(t[0], t[1], t[2], t[3]);
        after = o_separates(it[0], it[1], it[2], it[3]);
        break;
      case RelationKind::FullSymmetric:
        break;
    }
    ok = ok && before == after;
  });
  return ok;
}

// every partial injection with sources a subset of [1..maxSrc] (up to size 5)
// and targets in [1..maxTgt]
std::vector<FinitePartialInjection> small_injections(int maxSrc, int maxTgt) {
  std::vector<FinitePartialInjection> out;
  out.emplace_back();
  std::vector<int> srcs;
  auto rec_targets = [&](auto&& self, const std::vector<int>& sources,
                         std::vector<std::pair<int, int>>& acc,
                         std::vector<bool>& used) -> void {
    if (acc.size() == sources.size()) {
      out.push_back(FinitePartialInjection(acc));
      return;
    }
    for (int t = 1; t <= maxTgt; ++t) {
      if (used[t]) continue;
      used[t] = true;
      acc.emplace_back(sources[acc.size()], t);
      self(self, sources, acc, used);
      acc.pop_back();
      used[t] = false;
    }
  };
  auto rec_sources = [&](auto&& self, int from) -> void {
    if (!srcs.empty()) {
      std::vector<std::pair<int, int>> acc;
      std::vector<bool> used(maxTgt + 1, false);
      rec_targets(rec_targets, srcs, acc, used);
    }
    if (static_cast<int>(srcs.size()) == 5) return;
    for (int s = from; s <= maxSrc; ++s) {
      srcs.push_back(s);
      self(self, s + 1);
      srcs.pop_back();
    }
  };
  rec_sources(rec_sources, 1);
  return out;
}

int pick(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

std::vector<int> random_distinct(std::mt19937_64& rng, int len, int lo,
                                 int hi) {
  std::set<int> s;
  while (static_cast<int>(s.size()) < len) s.insert(pick(rng, lo, hi));
  std::vector<int> v(s.begin(), s.end());
  for (int i = len - 1; i > 0; --i) std::swap(v[i], v[pick(rng, 0, i)]);
  return v;
}

// a random injection extendable for the kind: an increasing map optionally
// composed with a reversal or a circle rotation where the kind allows it
FinitePartialInjection random_extendable(std::mt19937_64& rng,
                                         RelationKind kind,
                                         const std::vector<int>& domain) {
  std::vector<int> targets =
      random_distinct(rng, static_cast<int>(domain.size()), 1, 60);
  std::sort(targets.begin(), targets.end());
  std::vector<int> sorted = domain;
  std::sort(sorted.begin(), sorted.end());

  bool reversal = false, rotation = false;
  switch (kind) {
    case RelationKind::FullSymmetric:
      reversal = pick(rng, 0, 1);
      rotation = pick(rng, 0, 1);
      break;
    case RelationKind::Betweenness:
      reversal = pick(rng, 0, 1);
      break;
    case RelationKind::CyclicOrder:
      rotation = pick(rng, 0, 1);
      break;
    case RelationKind::Separation:
      reversal = pick(rng, 0, 1);
      rotation = pick(rng, 0, 1);
      break;
    case RelationKind::LinearOrder:
      break;
  }
  if (kind == RelationKind::FullSymmetric && pick(rng, 0, 1)) {
    // any injection at all
    for (int i = static_cast<int>(targets.size()) - 1; i > 0; --i)
      std::swap(targets[i], targets[pick(rng, 0, i)]);
  } else {
    if (reversal) std::reverse(targets.begin(), targets.end());
    if (rotation) {
      int cut = pick(rng, 0, static_cast<int>(targets.size()) - 1);
      // rotate around the circle at value 100: points after the cut come
      // first, shifted below the others
      std::vector<int> rotated;
      for (std::size_t i = cut; i < targets.size(); ++i)
        rotated.push_back(targets[i]);
      for (int i = 0; i < cut; ++i) rotated.push_back(targets[i] + 100);
      targets = rotated;
    }
  }
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    pairs.emplace_back(sorted[i], targets[i]);
  return FinitePartialInjection(pairs);
}

}  // namespace

TEST_CASE("rank patterns") {
  CHECK(pattern({5, 2, 9}) == std::vector<int>{2, 1, 3});
  CHECK(pattern({1, 2, 3}) == std::vector<int>{1, 2, 3});
  CHECK(pattern({7}) == std::vector<int>{1});
  CHECK_THROWS_AS(pattern({}), InvalidTuple);
  CHECK_THROWS_AS(pattern({2, 2}), InvalidTuple);
  CHECK_THROWS_AS(pattern({3, 0}), InvalidTuple);
}

TEST_CASE("canonical tuples") {
  CHECK(canonical_tuple(RelationKind::FullSymmetric, {5, 2, 9}) ==
        std::vector<int>{1, 2, 3});
  CHECK(canonical_tuple(RelationKind::Betweenness, {9, 2, 5}) ==
        std::vector<int>{1, 3, 2});
  CHECK(canonical_tuple(RelationKind::CyclicOrder, {2, 9, 5}) ==
        std::vector<int>{1, 3, 2});
  CHECK_THROWS_AS(canonical_tuple(RelationKind::LinearOrder, {4, 4}),
                  InvalidTuple);
}

TEST_CASE("canonical tuple idempotence") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 200; ++it) {
    int n = pick(rng, 1, 6);
    auto t = random_distinct(rng, n, 1, 40);
    for (RelationKind kind : kAllKinds) {
      auto c = canonical_tuple(kind, t);
      CHECK(canonical_tuple(kind, c) == c);
    }
  }
}

TEST_CASE("extendability matches the defining relations") {
  auto sigmas = small_injections(5, 6);
  // 1 empty + injections with up to 5 sources: decently large space
  CHECK(sigmas.size() > 1000);
  for (RelationKind kind : kAllKinds)
    for (const auto& sigma : sigmas)
      CHECK(extendable(kind, sigma) == oracle_extendable(kind, sigma));
}

TEST_CASE("extendability examples") {
  FinitePartialInjection keep({{1, 4}, {3, 7}});
  FinitePartialInjection swap({{1, 7}, {3, 4}});
  CHECK(extendable(RelationKind::LinearOrder, keep));
  CHECK_FALSE(extendable(RelationKind::LinearOrder, swap));
  CHECK(extendable(RelationKind::Betweenness,
                   FinitePartialInjection({{1, 7}, {3, 4}, {5, 2}})));
}

TEST_CASE("closure under composition and inversion") {
  auto sigmas = small_injections(4, 5);
  for (RelationKind kind : kAllKinds) {
    std::vector<FinitePartialInjection> good;
    for (const auto& s : sigmas)
      if (extendable(kind, s)) good.push_back(s);
    for (const auto& s : good) CHECK(extendable(kind, s.inverse()));
    std::mt19937_64 rng(11);
    for (int it = 0; it < 400; ++it) {
      const auto& a = good[pick(rng, 0, static_cast<int>(good.size()) - 1)];
      const auto& b = good[pick(rng, 0, static_cast<int>(good.size()) - 1)];
      CHECK(extendable(kind, a.compose_after(b)));
    }
  }
}

TEST_CASE("orbit soundness under extendable maps") {
  std::mt19937_64 rng(23);
  for (int it = 0; it < 300; ++it) {
    int n = pick(rng, 1, 6);
    auto t = random_distinct(rng, n, 1, 40);
    for (RelationKind kind : kAllKinds) {
      auto sigma = random_extendable(rng, kind, t);
      REQUIRE(extendable(kind, sigma));
      REQUIRE(oracle_extendable(kind, sigma));
      std::vector<int> image(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) image[i] = sigma.at(t[i]);
      CHECK(canonical_tuple(kind, t) == canonical_tuple(kind, image));
    }
  }
}

TEST_CASE("growth tables against frozen values and the BFS oracle") {
  const long expected[5][6] = {
      {1, 1, 1, 1, 1, 1},        // full
      {1, 2, 6, 24, 120, 720},   // linear
      {1, 1, 3, 12, 60, 360},    // betweenness
      {1, 1, 2, 6, 24, 120},     // cyclic
      {1, 1, 1, 3, 12, 60},      // separation
  };
  for (int k = 0; k < 5; ++k) {
    RelationKind kind = kAllKinds[k];
    GrowthTable table = growth(kind, 6);
    for (int n = 1; n <= 6; ++n) {
      CAPTURE(k);
      CAPTURE(n);
      CHECK(table.rows.at(n).tuple_orbits == expected[k][n - 1]);
      CHECK(table.rows.at(n).tuple_orbits == oracle_tuple_orbits(kind, n));
      CHECK(table.rows.at(n).subset_orbits == 1);
    }
  }
}

TEST_CASE("growth examples") {
  GrowthTable full = growth(RelationKind::FullSymmetric, 4);
  for (int n = 1; n <= 4; ++n) CHECK(full.rows.at(n).tuple_orbits == 1);
  GrowthTable lin = growth(RelationKind::LinearOrder, 3);
  CHECK(lin.rows.at(1).tuple_orbits == 1);
  CHECK(lin.rows.at(2).tuple_orbits == 2);
  CHECK(lin.rows.at(3).tuple_orbits == 6);
  for (int n = 1; n <= 3; ++n) CHECK(lin.rows.at(n).subset_orbits == 1);
  GrowthTable sep = growth(RelationKind::Separation, 4);
  CHECK(sep.rows.at(4).tuple_orbits == 3);
  CHECK(sep.rows.at(4).subset_orbits == 1);
  CHECK_THROWS_AS(growth(RelationKind::LinearOrder, 8), BudgetExceeded);
}

TEST_CASE("monotone refinement between the groups") {
  GrowthTable full = growth(RelationKind::FullSymmetric, 6);
  GrowthTable lin = growth(RelationKind::LinearOrder, 6);
  GrowthTable bet = growth(RelationKind::Betweenness, 6);
  GrowthTable cyc = growth(RelationKind::CyclicOrder, 6);
  GrowthTable sep = growth(RelationKind::Separation, 6);
  for (int n = 1; n <= 6; ++n) {
    long f = full.rows.at(n).tuple_orbits, l = lin.rows.at(n).tuple_orbits;
    long b = bet.rows.at(n).tuple_orbits, c = cyc.rows.at(n).tuple_orbits;
    long s = sep.rows.at(n).tuple_orbits;
    CHECK(f <= s);
    CHECK(s <= c);
    CHECK(c <= l);
    CHECK(f <= b);
    CHECK(b <= l);
  }
}

TEST_CASE("kind names round-trip") {
  for (RelationKind kind : kAllKinds)
    CHECK(relation_kind_from_name(to_string(kind)) == kind);
  CHECK_FALSE(relation_kind_from_name("nope").has_value());
  CHECK(relation_arity(RelationKind::FullSymmetric) == 0);
  CHECK(relation_arity(RelationKind::LinearOrder) == 2);
  CHECK(relation_arity(RelationKind::Betweenness) == 3);
  CHECK(relation_arity(RelationKind::CyclicOrder) == 3);
  CHECK(relation_arity(RelationKind::Separation) == 4);
}
