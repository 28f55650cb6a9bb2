#include "equinoether/orbitcat.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "equinoether/errors.hpp"
#include "equinoether/smallperm.hpp"

namespace equinoether {

OrbitObject OrbitObject::make(std::vector<int> points) {
  std::sort(points.begin(), points.end());
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i] < 1) throw InvalidTuple("orbit object points must be positive");
    if (i > 0 && points[i] == points[i - 1])
      throw InvalidTuple("orbit object points must be distinct");
  }
  return OrbitObject{std::move(points)};
}

std::vector<OrbitMorphism> hom_set(RelationKind kind, const OrbitObject& T,
                                   const OrbitObject& L) {
  std::vector<OrbitMorphism> out;
  const int k = L.size();
  const int n = T.size();
  if (k > n) return out;

  // enumerate injective assignments L.points -> T.points in lexicographic
  // order of the target tuple
  std::vector<int> idx(k, 0);
  std::vector<bool> used(n, false);
  std::vector<int> targets(k, 0);
  std::size_t depth = 0;
  if (k == 0) {
    out.push_back({kind, T, L, FinitePartialInjection{}});
    return out;
  }
  while (true) {
    if (idx[depth] == n) {
      if (depth == 0) break;
      --depth;
      used[idx[depth]] = false;
      ++idx[depth];
      continue;
    }
    if (used[idx[depth]]) {
      ++idx[depth];
      continue;
    }
    used[idx[depth]] = true;
    targets[depth] = T.points[idx[depth]];
    if (depth + 1 == static_cast<std::size_t>(k)) {
      std::vector<std::pair<int, int>> pairs;
      pairs.reserve(k);
      for (int i = 0; i < k; ++i) pairs.emplace_back(L.points[i], targets[i]);
      FinitePartialInjection sigma(std::move(pairs));
      if (extendable(kind, sigma)) out.push_back({kind, T, L, std::move(sigma)});
      used[idx[depth]] = false;
      ++idx[depth];
    } else {
      ++depth;
      idx[depth] = 0;
    }
  }
  return out;
}

OrbitMorphism identity_morphism(RelationKind kind, const OrbitObject& T) {
  return {kind, T, T, FinitePartialInjection::identity_on(T.points)};
}

OrbitMorphism compose(const OrbitMorphism& g, const OrbitMorphism& f) {
  if (!(f.target == g.source) || f.kind != g.kind)
    throw InvalidTuple("morphisms are not composable");
  // f: T -> L with witness L -> T, g: L -> M with witness M -> L; the
  // composite witness sends M through L into T
  return {f.kind, f.source, g.target, f.witness.compose_after(g.witness)};
}

long hom_count_bruteforce_sym(int m, const OrbitObject& T, const OrbitObject& L,
                              int cap) {
  if (m < 1) throw InvalidTuple("truncation must be positive");
  if (m > cap) throw BudgetExceeded("brute-force hom count capped at m <= " +
                                    std::to_string(cap));
  for (int t : T.points)
    if (t > m) throw InvalidTuple("orbit object exceeds the truncation");
  for (int l : L.points)
    if (l > m) throw InvalidTuple("orbit object exceeds the truncation");

  std::vector<bool> in_T(m + 1, false), in_L(m + 1, false);
  for (int t : T.points) in_T[t] = true;
  for (int l : L.points) in_L[l] = true;

  // adjacent transpositions of the complement of T generate H_T
  std::vector<Perm> h_T_gens;
  {
    std::vector<int> comp;
    for (int x = 1; x <= m; ++x)
      if (!in_T[x]) comp.push_back(x);
    for (std::size_t i = 0; i + 1 < comp.size(); ++i)
      h_T_gens.push_back(perm_transposition(m, comp[i], comp[i + 1]));
  }

  std::set<std::vector<int>> cosets;
  for (const Perm& g : all_permutations(m)) {
    Perm ginv = perm_inverse(g);
    bool ok = true;
    for (const Perm& tau : h_T_gens) {
      Perm conj = perm_compose(perm_compose(g, tau), ginv);
      for (int l : L.points) {
        if (conj[l - 1] != l) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (!ok) continue;
    // g and g' induce the same morphism exactly when H_L g = H_L g', i.e.
    // when their inverses agree on L
    std::vector<int> finger;
    finger.reserve(L.points.size());
    for (int l : L.points) finger.push_back(ginv[l - 1]);
    cosets.insert(std::move(finger));
  }
  return static_cast<long>(cosets.size());
}

namespace {

// deterministic die independent of library distribution internals
int pick(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Monomial tuple_var(int d, const std::vector<int>& tup) {
  if (d == 1) return Monomial::variable(VarShape::RowColumn, {1, tup[0]});
  return Monomial::variable(VarShape::Pair, {tup[0], tup[1]});
}

std::vector<std::vector<int>> injective_tuples(int d,
                                               const std::vector<int>& pool) {
  std::vector<std::vector<int>> out;
  if (d == 0) {
    out.push_back({});
    return out;
  }
  std::vector<int> tup;
  std::vector<bool> used(pool.size(), false);
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == d) {
      out.push_back(tup);
      return;
    }
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (used[i]) continue;
      used[i] = true;
      tup.push_back(pool[i]);
      self(self, depth + 1);
      tup.pop_back();
      used[i] = false;
    }
  };
  rec(rec, 0);
  return out;
}

// distinct variables with pairwise distinct exponents; such a monomial is
// fixed by a transposition of columns exactly when its support avoids both
// swapped points, so "fixed by every generator" pins the support inside L
Monomial sample_monomial(std::mt19937_64& rng,
                         const std::vector<Monomial>& pool) {
  int nvars = std::min<int>(pick(rng, 1, 3), static_cast<int>(pool.size()));
  std::vector<int> exps = {1, 2, 3};
  for (int i = 2; i > 0; --i) std::swap(exps[i], exps[pick(rng, 0, i)]);
  std::set<int> chosen;
  while (static_cast<int>(chosen.size()) < nvars)
    chosen.insert(pick(rng, 0, static_cast<int>(pool.size()) - 1));
  Monomial m;
  int j = 0;
  for (int i : chosen) {
    const Monomial& v = pool[i];
    m = m.times(Monomial::product(*v.shape(), {{v.factors()[0].first, exps[j++]}}));
  }
  return m;
}

Poly sample_poly(std::mt19937_64& rng, const std::vector<Monomial>& pool) {
  if (pool.empty()) return Poly::constant(Rational(pick(rng, 1, 9)));
  int nterms = pick(rng, 1, 3);
  std::set<int> coeffs;
  while (static_cast<int>(coeffs.size()) < nterms) coeffs.insert(pick(rng, 2, 50));
  std::vector<std::pair<Monomial, Rational>> terms;
  int sign = pick(rng, 0, 1) ? 1 : -1;
  for (int c : coeffs)
    terms.emplace_back(sample_monomial(rng, pool), Rational(sign * c));
  return Poly::from_terms(std::move(terms));
}

std::vector<FinitePartialInjection> complement_transpositions(
    int m, const std::vector<int>& L) {
  std::vector<bool> in_L(m + 1, false);
  for (int l : L) in_L[l] = true;
  std::vector<int> comp;
  for (int x = 1; x <= m; ++x)
    if (!in_L[x]) comp.push_back(x);
  std::vector<FinitePartialInjection> gens;
  for (std::size_t i = 0; i + 1 < comp.size(); ++i) {
    std::vector<std::pair<int, int>> pairs;
    for (int x = 1; x <= m; ++x) {
      int y = x;
      if (x == comp[i]) y = comp[i + 1];
      if (x == comp[i + 1]) y = comp[i];
      pairs.emplace_back(x, y);
    }
    gens.emplace_back(std::move(pairs));
  }
  return gens;
}

Poly act(int d, const Poly& p, const FinitePartialInjection& tau) {
  // the group permutes points; a pair variable moves diagonally
  return d == 1 ? p.apply_columns(tau) : p.apply_pair(tau, tau);
}

}  // namespace

SheafSectionReport sheaf_section(int d, const OrbitObject& L, int m,
                                 int samples, std::uint64_t seed, int cap) {
  if (d < 1) throw InvalidTuple("tuple length must be positive");
  if (d > 2) throw Unsupported("sections are implemented for d <= 2");
  if (m < 1) throw InvalidTuple("truncation must be positive");
  if (m > cap)
    throw BudgetExceeded("section validation capped at m <= " +
                         std::to_string(cap));
  for (int l : L.points)
    if (l > m) throw InvalidTuple("orbit object exceeds the truncation");

  SheafSectionReport report;
  report.d = d;
  report.L = L;
  report.m = m;
  report.samples = samples;

  std::vector<int> all_points(m);
  for (int x = 1; x <= m; ++x) all_points[x - 1] = x;
  std::vector<Monomial> section_vars, all_vars;
  for (const auto& tup : injective_tuples(d, L.points))
    section_vars.push_back(tuple_var(d, tup));
  for (const auto& tup : injective_tuples(d, all_points))
    all_vars.push_back(tuple_var(d, tup));
  report.indeterminates = section_vars;

  auto gens = complement_transpositions(m, L.points);
  auto fixed = [&](const Poly& p) {
    for (const auto& tau : gens)
      if (!(act(d, p, tau) == p)) return false;
    return true;
  };
  auto in_section = [&](const Poly& p) {
    for (const auto& [mono, c] : p.terms())
      for (const auto& [v, e] : mono.factors())
        if (std::find_if(section_vars.begin(), section_vars.end(),
                         [&](const Monomial& sv) {
                           return sv.factors()[0].first == v;
                         }) == section_vars.end())
          return false;
    return true;
  };

  bool ok = true;
  // the indeterminates themselves must be invariant
  for (const Monomial& v : section_vars)
    ok = ok && fixed(Poly::term(v, Rational(1)));

  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples && ok; ++s) {
    const auto& pool =
        (!section_vars.empty() && pick(rng, 0, 1)) ? section_vars : all_vars;
    Poly p = sample_poly(rng, pool);
    ok = ok && (in_section(p) == fixed(p));
  }
  report.validated = ok;
  return report;
}

FreeModuleSectionReport free_module_section(int dT, const OrbitObject& L, int m,
                                            int samples, std::uint64_t seed,
                                            int cap) {
  if (dT < 0) throw InvalidTuple("basis tuple length must be nonnegative");
  if (m < 1) throw InvalidTuple("truncation must be positive");
  if (m > cap)
    throw BudgetExceeded("section validation capped at m <= " +
                         std::to_string(cap));
  for (int l : L.points)
    if (l > m) throw InvalidTuple("orbit object exceeds the truncation");

  FreeModuleSectionReport report;
  report.dT = dT;
  report.L = L;
  report.m = m;
  report.samples = samples;
  report.coefficient_columns = L.points;

  std::vector<int> all_points(m);
  for (int x = 1; x <= m; ++x) all_points[x - 1] = x;
  auto all_tuples = injective_tuples(dT, all_points);
  report.basis = injective_tuples(dT, L.points);

  std::vector<Monomial> section_vars, all_vars;
  for (int l : L.points)
    section_vars.push_back(Monomial::variable(VarShape::RowColumn, {1, l}));
  for (int x = 1; x <= m; ++x)
    all_vars.push_back(Monomial::variable(VarShape::RowColumn, {1, x}));

  auto gens = complement_transpositions(m, L.points);

  using Element = std::vector<std::pair<std::vector<int>, Poly>>;  // sorted
  auto normalize = [](Element e) {
    std::sort(e.begin(), e.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    Element out;
    for (auto& [tup, p] : e) {
      if (!out.empty() && out.back().first == tup)
        out.back().second = out.back().second + p;
      else
        out.emplace_back(std::move(tup), std::move(p));
      if (out.back().second.is_zero()) out.pop_back();
    }
    return out;
  };
  auto apply = [&](const Element& e, const FinitePartialInjection& tau) {
    Element out;
    for (const auto& [tup, p] : e) {
      std::vector<int> moved;
      moved.reserve(tup.size());
      for (int x : tup) moved.push_back(tau.at(x));
      out.emplace_back(std::move(moved), p.apply_columns(tau));
    }
    return normalize(std::move(out));
  };
  auto fixed = [&](const Element& e) {
    for (const auto& tau : gens)
      if (!(apply(e, tau) == e)) return false;
    return true;
  };
  auto in_section = [&](const Element& e) {
    for (const auto& [tup, p] : e) {
      if (std::find(report.basis.begin(), report.basis.end(), tup) ==
          report.basis.end())
        return false;
      for (int c : p.columns())
        if (std::find(L.points.begin(), L.points.end(), c) == L.points.end())
          return false;
    }
    return true;
  };

  bool ok = true;
  for (const auto& tup : report.basis)
    ok = ok && fixed({{tup, Poly::constant(Rational(1))}});

  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples && ok; ++s) {
    bool inside = !report.basis.empty() && pick(rng, 0, 1);
    const auto& tuple_pool = inside ? report.basis : all_tuples;
    const auto& var_pool = inside ? section_vars : all_vars;
    if (tuple_pool.empty()) break;  // dT > m: the module itself is zero
    Element e;
    int nterms = pick(rng, 1, 3);
    std::set<int> consts;
    while (static_cast<int>(consts.size()) < nterms)
      consts.insert(pick(rng, 2, 50));
    // distinct leading constants keep distinct basis tuples from pairing up
    // into an accidental orbit sum
    for (int c : consts) {
      const auto& tup =
          tuple_pool[pick(rng, 0, static_cast<int>(tuple_pool.size()) - 1)];
      Poly coeff = var_pool.empty()
                       ? Poly::constant(Rational(c))
                       : Poly::term(sample_monomial(rng, var_pool), Rational(c));
      e.emplace_back(tup, std::move(coeff));
    }
    e = normalize(std::move(e));
    ok = ok && (in_section(e) == fixed(e));
  }
  report.validated = ok;
  return report;
}

}  // namespace equinoether
