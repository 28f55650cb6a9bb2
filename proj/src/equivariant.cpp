#include "equinoether/equivariant.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "equinoether/errors.hpp"
#include "equinoether/smallperm.hpp"

namespace equinoether {

namespace {

// per-column view of a monomial: (col, ascending (row, exp) list)
struct ColEntry {
  int col = 0;
  std::vector<std::pair<int, int>> rows;
};

std::vector<ColEntry> column_profile(const Monomial& m) {
  std::vector<ColEntry> out;
  for (const auto& [v, e] : m.factors()) {
    if (out.empty() || out.back().col != v.col)
      out.push_back(ColEntry{v.col, {}});
    out.back().rows.emplace_back(v.row, e);
  }
  return out;
}

// every (row, exp) of `small` is matched by >= exp in `big`
bool dominates(const std::vector<std::pair<int, int>>& small,
               const std::vector<std::pair<int, int>>& big) {
  std::size_t j = 0;
  for (const auto& [row, exp] : small) {
    while (j < big.size() && big[j].first < row) ++j;
    if (j >= big.size() || big[j].first != row || big[j].second < exp)
      return false;
  }
  return true;
}

// Greedy order-preserving embedding of the profile columns of m into those
// of n with row-vector domination; min_gap[i] forces target[i] to exceed
// target[i-1] (or 0) by more than min_gap[i].  Returns target columns.
std::optional<std::vector<int>> inc_targets(const std::vector<ColEntry>& m,
                                            const std::vector<ColEntry>& n,
                                            const std::vector<int>& min_gap) {
  std::vector<int> v(m.size());
  std::size_t start = 0;
  int prev = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    int required = prev + min_gap[i] + 1;
    bool found = false;
    for (std::size_t p = start; p < n.size(); ++p) {
      if (n[p].col < required) continue;
      if (dominates(m[i].rows, n[p].rows)) {
        v[i] = n[p].col;
        prev = n[p].col;
        start = p + 1;
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  return v;
}

FinitePartialInjection pairs_to_injection(const std::vector<int>& sources,
                                          const std::vector<int>& targets) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(sources.size());
  for (std::size_t i = 0; i < sources.size(); ++i)
    pairs.emplace_back(sources[i], targets[i]);
  return FinitePartialInjection(std::move(pairs));
}

// ---- SymColumns witness: lexicographically least injective matching ----

struct SymMatcher {
  std::vector<std::vector<int>> edges;  // per left, ascending right indices
  std::size_t rights = 0;

  // can lefts [from..) be matched into rights not in `used`?
  bool feasible(std::size_t from, std::vector<int>& used) const {
    std::vector<int> match(rights, -1);  // right -> left
    for (std::size_t l = from; l < edges.size(); ++l) {
      std::vector<bool> seen(rights, false);
      if (!augment(l, from, used, match, seen)) return false;
    }
    return true;
  }

  bool augment(std::size_t left, std::size_t from, std::vector<int>& used,
               std::vector<int>& match, std::vector<bool>& seen) const {
    for (int r : edges[left]) {
      if (used[r] || seen[r]) continue;
      seen[r] = true;
      if (match[r] < 0 ||
          augment(static_cast<std::size_t>(match[r]), from, used, match, seen)) {
        match[r] = static_cast<int>(left);
        return true;
      }
    }
    return false;
  }
};

std::optional<std::vector<int>> sym_targets(const std::vector<ColEntry>& m,
                                            const std::vector<ColEntry>& n) {
  SymMatcher matcher;
  matcher.rights = n.size();
  matcher.edges.resize(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < n.size(); ++j)
      if (dominates(m[i].rows, n[j].rows))
        matcher.edges[i].push_back(static_cast<int>(j));

  std::vector<int> used(n.size(), 0), picked(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    bool found = false;
    for (int r : matcher.edges[i]) {
      if (used[r]) continue;
      used[r] = 1;
      if (matcher.feasible(i + 1, used)) {
        picked[i] = r;
        found = true;
        break;
      }
      used[r] = 0;
    }
    if (!found) return std::nullopt;
  }
  std::vector<int> v(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) v[i] = n[picked[i]].col;
  return v;
}

// ---- PairSym witness: bounded exhaustive search over both coordinates ----

struct PairSearch {
  const Monomial* m = nullptr;
  const Monomial* n = nullptr;
  std::vector<int> am, bm, an, bn;   // supports of both coordinates
  std::vector<std::vector<std::pair<int, int>>> by_second;  // per bm index: (am index, exp)
  std::vector<int> alpha, beta;      // chosen target indices
  std::vector<bool> used_a, used_b;
  long work = 0, work_cap = 5000000;

  bool beta_step(std::size_t bi) {
    if (bi == bm.size()) return true;
    for (std::size_t t = 0; t < bn.size(); ++t) {
      if (used_b[t]) continue;
      if (++work > work_cap)
        throw BudgetExceeded("pair divisibility search too large");
      bool ok = true;
      for (const auto& [ai, exp] : by_second[bi]) {
        Variable target{an[alpha[ai]], bn[t]};
        if (n->exponent(target) < exp) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      used_b[t] = true;
      beta[bi] = static_cast<int>(t);
      if (beta_step(bi + 1)) return true;
      used_b[t] = false;
    }
    return false;
  }

  bool alpha_step(std::size_t ai) {
    if (ai == am.size()) return beta_step(0);
    for (std::size_t t = 0; t < an.size(); ++t) {
      if (used_a[t]) continue;
      if (++work > work_cap)
        throw BudgetExceeded("pair divisibility search too large");
      used_a[t] = true;
      alpha[ai] = static_cast<int>(t);
      if (alpha_step(ai + 1)) return true;
      used_a[t] = false;
    }
    return false;
  }
};

std::optional<DivisionWitness> pair_witness(const Monomial& m,
                                            const Monomial& n, int cap) {
  PairSearch s;
  s.m = &m;
  s.n = &n;
  s.am = m.rows_used();
  s.bm = m.columns();
  s.an = n.rows_used();
  s.bn = n.columns();
  if (static_cast<int>(s.am.size()) > cap ||
      static_cast<int>(s.bm.size()) > cap ||
      static_cast<int>(s.an.size()) > cap ||
      static_cast<int>(s.bn.size()) > cap)
    throw BudgetExceeded("pair support exceeds divisibility cap");
  if (s.am.size() > s.an.size() || s.bm.size() > s.bn.size())
    return std::nullopt;

  s.by_second.resize(s.bm.size());
  for (const auto& [v, e] : m.factors()) {
    std::size_t ai = std::lower_bound(s.am.begin(), s.am.end(), v.row) - s.am.begin();
    std::size_t bi = std::lower_bound(s.bm.begin(), s.bm.end(), v.col) - s.bm.begin();
    s.by_second[bi].emplace_back(static_cast<int>(ai), e);
  }
  s.alpha.assign(s.am.size(), 0);
  s.beta.assign(s.bm.size(), 0);
  s.used_a.assign(s.an.size(), false);
  s.used_b.assign(s.bn.size(), false);
  if (!s.alpha_step(0)) return std::nullopt;

  std::vector<int> ta(s.am.size()), tb(s.bm.size());
  for (std::size_t i = 0; i < s.am.size(); ++i) ta[i] = s.an[s.alpha[i]];
  for (std::size_t i = 0; i < s.bm.size(); ++i) tb[i] = s.bn[s.beta[i]];
  return DivisionWitness{pairs_to_injection(s.am, ta),
                         pairs_to_injection(s.bm, tb)};
}

}  // namespace

std::optional<DivisionWitness> eq_divides(const Monomial& m, const Monomial& n,
                                          const SymmetryType& symmetry,
                                          int cap) {
  check_shape(m, symmetry);
  check_shape(n, symmetry);
  if (m.is_one()) return DivisionWitness{};
  if (n.is_one()) return std::nullopt;

  switch (symmetry.tag()) {
    case SymmetryType::Tag::IncColumns: {
      auto pm = column_profile(m), pn = column_profile(n);
      std::vector<int> zero_gaps(pm.size(), 0);
      auto v = inc_targets(pm, pn, zero_gaps);
      if (!v) return std::nullopt;
      return DivisionWitness{pairs_to_injection(m.columns(), *v), {}};
    }
    case SymmetryType::Tag::SymColumns: {
      auto v = sym_targets(column_profile(m), column_profile(n));
      if (!v) return std::nullopt;
      return DivisionWitness{pairs_to_injection(m.columns(), *v), {}};
    }
    case SymmetryType::Tag::PairSym:
      return pair_witness(m, n, cap);
  }
  throw Unsupported("unknown symmetry");
}

std::vector<Poly> sym_to_inc_generators(const Poly& g, int rows, int cap) {
  check_shape(g, SymmetryType::sym_columns(rows));
  if (g.is_zero()) return {};
  auto cols = g.columns();
  if (static_cast<int>(cols.size()) > cap)
    throw BudgetExceeded("support width exceeds permutation cap");
  std::set<Poly, bool (*)(const Poly&, const Poly&)> images(&poly_less<Rational>);
  for (const Perm& perm : all_permutations(static_cast<int>(cols.size()))) {
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < cols.size(); ++i)
      pairs.emplace_back(cols[i], perm[i]);
    images.insert(g.apply_columns(FinitePartialInjection(std::move(pairs))));
  }
  return {images.begin(), images.end()};
}

namespace {

// basis element prepared for repeated equivariant division
struct Reducer {
  Poly g;
  Monomial lm;
  Rational lc;
  std::vector<ColEntry> lm_profile;
  std::vector<int> lm_cols;
  std::vector<int> gaps;  // free columns of g below / between lm support cols
  std::vector<std::vector<int>> free_cols;  // the actual columns per gap
};

Reducer make_reducer(const Poly& g) {
  Reducer r;
  r.g = g;
  r.lm = g.leading_monomial();
  r.lc = g.leading_coefficient();
  r.lm_profile = column_profile(r.lm);
  r.lm_cols = r.lm.columns();
  auto all = g.columns();
  // the leading monomial always contains the maximal column of g under
  // LexColMajor, so free columns sit below or between lm support columns
  r.gaps.assign(r.lm_cols.size(), 0);
  r.free_cols.assign(r.lm_cols.size(), {});
  std::size_t slot = 0;
  for (int c : all) {
    while (slot < r.lm_cols.size() && c > r.lm_cols[slot]) ++slot;
    if (slot < r.lm_cols.size() && c == r.lm_cols[slot]) continue;
    if (slot >= r.lm_cols.size())
      throw ShapeError("leading monomial misses the maximal column");
    r.gaps[slot]++;
    r.free_cols[slot].push_back(c);
  }
  return r;
}

// full strictly increasing relabeling of all columns of the reducer, given
// lm-support targets; free columns slot into the room the gaps reserved
FinitePartialInjection extend_witness(const Reducer& r,
                                      const std::vector<int>& v) {
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < r.lm_cols.size(); ++i) {
    int base = i == 0 ? 0 : v[i - 1];
    int t = base + 1;
    for (int c : r.free_cols[i]) pairs.emplace_back(c, t++);
    pairs.emplace_back(r.lm_cols[i], v[i]);
  }
  return FinitePartialInjection(std::move(pairs));
}

struct IncEngine {
  std::vector<Reducer> reducers;

  explicit IncEngine(const std::vector<Poly>& basis) {
    for (const auto& g : basis)
      if (!g.is_zero()) reducers.push_back(make_reducer(g));
  }

  // one division step on term (t, c) of h, if some reducer applies
  std::optional<Poly> step(const Poly& h, const Monomial& t,
                           const Rational& c) const {
    auto pt = column_profile(t);
    for (const Reducer& r : reducers) {
      auto v = inc_targets(r.lm_profile, pt, r.gaps);
      if (!v) continue;
      FinitePartialInjection pi = extend_witness(r, *v);
      Poly shifted = r.g.apply_columns(pi);
      Monomial u = *t.divided_by(shifted.leading_monomial());
      return h.minus(shifted.times_term(u, c / r.lc));
    }
    return std::nullopt;
  }

  Poly reduce(const Poly& f) const {
    Poly h = f;
    std::size_t scan_from = 0;
    while (scan_from < h.term_count()) {
      bool stepped = false;
      for (std::size_t ti = scan_from; ti < h.term_count(); ++ti) {
        const auto& [t, c] = h.terms()[ti];
        if (auto next = step(h, t, c)) {
          h = std::move(*next);
          scan_from = ti;
          stepped = true;
          break;
        }
        scan_from = ti + 1;
      }
      if (!stepped) break;
    }
    return h;
  }

  bool lead_reducible(const Monomial& t) const {
    auto pt = column_profile(t);
    for (const Reducer& r : reducers)
      if (inc_targets(r.lm_profile, pt, r.gaps)) return true;
    return false;
  }
};

std::vector<Poly> translated_basis(const std::vector<Poly>& basis,
                                   const SymmetryType& symmetry) {
  if (symmetry.tag() == SymmetryType::Tag::IncColumns) return basis;
  std::set<Poly, bool (*)(const Poly&, const Poly&)> out(&poly_less<Rational>);
  for (const auto& g : basis) {
    if (g.is_zero()) continue;
    for (auto& img : sym_to_inc_generators(g, symmetry.rows()))
      out.insert(std::move(img));
  }
  return {out.begin(), out.end()};
}

}  // namespace

Poly eq_reduce(const Poly& f, const std::vector<Poly>& basis,
               const SymmetryType& symmetry, TermOrder order) {
  (void)order;
  if (symmetry.tag() == SymmetryType::Tag::PairSym)
    throw Unsupported("no reduction engine for pairsym");
  check_shape(f, symmetry);
  for (const auto& g : basis) check_shape(g, symmetry);
  IncEngine engine(translated_basis(basis, symmetry));
  return engine.reduce(f);
}

EquivariantIdeal EquivariantIdeal::make(SymmetryType symmetry,
                                        std::vector<Poly> gens) {
  std::set<Poly, bool (*)(const Poly&, const Poly&)> normalized(&poly_less<Rational>);
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    normalized.insert(canonicalize(g, symmetry));
  }
  return EquivariantIdeal{symmetry,
                          std::vector<Poly>(normalized.begin(), normalized.end())};
}

namespace {

// subsets A (size ka) and C (size kc) of [1..u] with A ∪ C = [1..u], for all
// u up to ka+kc: the canonical complete set of relative shift interleavings
struct ShiftPair {
  std::vector<int> a, c;
};

std::vector<std::vector<int>> subsets_of(int u, int k) {
  std::vector<std::vector<int>> out;
  if (k > u || k < 0) return out;
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i + 1;
  for (;;) {
    out.push_back(pick);
    int i = k - 1;
    while (i >= 0 && pick[i] == u - (k - 1 - i)) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

std::vector<ShiftPair> interleavings(int ka, int kc, bool same_element) {
  std::vector<ShiftPair> out;
  for (int u = std::max(ka, kc); u <= ka + kc; ++u) {
    auto as = subsets_of(u, ka);
    auto cs = subsets_of(u, kc);
    for (const auto& a : as)
      for (const auto& c : cs) {
        std::vector<bool> hit(u, false);
        for (int x : a) hit[x - 1] = true;
        for (int x : c) hit[x - 1] = true;
        if (std::find(hit.begin(), hit.end(), false) != hit.end()) continue;
        if (same_element && !(a < c)) continue;  // unordered; skip a == c
        out.push_back(ShiftPair{a, c});
      }
  }
  return out;
}

Poly shift_onto(const Poly& g, const std::vector<int>& targets) {
  auto cols = g.columns();
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < cols.size(); ++i)
    pairs.emplace_back(cols[i], targets[i]);
  return g.apply_columns(FinitePartialInjection(std::move(pairs)));
}

struct Completion {
  TermOrder order;
  PairBudget budget;
  CompletionStats* stats;
  std::vector<Poly> basis;
  struct Pending {
    std::size_t i, j;
    ShiftPair shifts;
  };
  std::deque<Pending> queue;

  void push_pairs_with(std::size_t j) {
    for (std::size_t i = 0; i <= j; ++i) {
      auto pairs = interleavings(basis[i].width(), basis[j].width(), i == j);
      for (auto& sp : pairs) queue.push_back(Pending{i, j, std::move(sp)});
    }
  }

  // run S-pair closure; returns number adjoined
  std::size_t close() {
    std::size_t adjoined = 0;
    while (!queue.empty()) {
      Pending p = std::move(queue.front());
      queue.pop_front();
      Poly pf = shift_onto(basis[p.i], p.shifts.a);
      Poly sg = shift_onto(basis[p.j], p.shifts.c);
      if (pf.leading_monomial().coprime(sg.leading_monomial())) continue;
      if (stats) stats->s_pairs_reduced++;
      if (stats && stats->s_pairs_reduced > budget.max_s_pairs)
        throw BudgetExceeded("S-pair budget exhausted");
      IncEngine engine(basis);
      Poly r = engine.reduce(detail::spoly(pf, sg));
      if (r.is_zero()) continue;
      r = compress_columns(r).monic();
      basis.push_back(r);
      adjoined++;
      if (stats) stats->adjoined++;
      push_pairs_with(basis.size() - 1);
    }
    return adjoined;
  }
};

bool eq_lead_divides(const Poly& a, const Poly& b) {
  // does some shift of a's lead (with room for a's free columns) divide b's?
  Reducer r = make_reducer(a);
  auto pt = column_profile(b.leading_monomial());
  return inc_targets(r.lm_profile, pt, r.gaps).has_value();
}

std::vector<Poly> autoreduce(std::vector<Poly> basis, TermOrder order) {
  std::sort(basis.begin(), basis.end(), &poly_less<Rational>);
  basis.erase(std::unique(basis.begin(), basis.end()), basis.end());

  // Tail-reduction followed by compression can lower an element's lead, which
  // may make another element redundant, so minimalize + tail-reduce until the
  // set stops moving.
  for (int outer = 0; outer < 100; ++outer) {
    // minimalize: drop elements whose lead another's shifted lead covers
    std::vector<Poly> kept;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
        if (i == j) continue;
        if (!eq_lead_divides(basis[j], basis[i])) continue;
        // mutual cover means shift-equal leads: keep the earlier element
        redundant = !eq_lead_divides(basis[i], basis[j]) || j < i;
      }
      if (!redundant) kept.push_back(basis[i]);
    }

    // tail-reduce to a fixpoint
    for (int pass = 0; pass < 100; ++pass) {
      bool changed = false;
      IncEngine engine(kept);
      for (auto& b : kept) {
        Poly lead = Poly::term(b.leading_monomial(), b.leading_coefficient());
        Poly reduced = lead.plus(engine.reduce(b.minus(lead)));
        reduced = compress_columns(reduced).monic();
        if (!(reduced == b)) {
          b = reduced;
          changed = true;
        }
      }
      if (!changed) break;
      if (pass == 99) throw BudgetExceeded("autoreduction failed to stabilize");
    }
    std::sort(kept.begin(), kept.end(), &poly_less<Rational>);
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    if (kept == basis) break;
    basis = std::move(kept);
    if (outer == 99) throw BudgetExceeded("autoreduction failed to stabilize");
  }
  (void)order;
  return basis;
}

}  // namespace

GroebnerBasis eq_buchberger(const EquivariantIdeal& ideal, TermOrder order,
                            PairBudget budget, CompletionStats* stats) {
  if (ideal.symmetry.tag() == SymmetryType::Tag::PairSym)
    throw Unsupported("no completion engine for pairsym");
  CompletionStats local;
  if (!stats) stats = &local;
  *stats = CompletionStats{};  // counts are per run

  auto normalized = [](std::vector<Poly> list) {
    for (auto& g : list) g = compress_columns(g).monic();
    std::sort(list.begin(), list.end(), &poly_less<Rational>);
    list.erase(std::unique(list.begin(), list.end()), list.end());
    return list;
  };
  std::vector<Poly> work =
      normalized(translated_basis(ideal.generators, ideal.symmetry));

  // Complete and autoreduce; for SymColumns iterate until the result
  // retranslates to its own engine input, which makes a rerun reproduce the
  // basis exactly.
  for (int round = 0; round < 8; ++round) {
    stats->passes++;
    Completion completion{order, budget, stats, work, {}};
    for (std::size_t j = 0; j < completion.basis.size(); ++j)
      completion.push_pairs_with(j);
    completion.close();
    std::vector<Poly> result = autoreduce(completion.basis, order);
    if (ideal.symmetry.tag() == SymmetryType::Tag::SymColumns) {
      std::vector<Poly> retranslated =
          normalized(translated_basis(result, ideal.symmetry));
      if (retranslated != work) {
        work = std::move(retranslated);
        continue;
      }
    }
    return GroebnerBasis{ideal.symmetry, order, std::move(result)};
  }
  throw BudgetExceeded("completion failed to reach a stable basis");
}

bool eq_member(const Poly& f, const GroebnerBasis& gb) {
  if (f.is_zero()) return true;
  SymmetryType engine_symmetry =
      gb.symmetry.tag() == SymmetryType::Tag::SymColumns
          ? SymmetryType::inc_columns(gb.symmetry.rows())
          : gb.symmetry;
  // a SymColumns basis already generates the translated ideal as an
  // IncColumns basis, so no retranslation is needed here
  return eq_reduce(f, gb.elements, engine_symmetry, gb.order).is_zero();
}

ChainReport chain_analyze(const SymmetryType& symmetry,
                          const std::vector<std::vector<Poly>>& stages,
                          int horizon, PairBudget budget) {
  if (horizon < 1) throw InvalidTuple("horizon must be >= 1");
  for (std::size_t s = 1; s < stages.size(); ++s)
    for (const auto& g : stages[s - 1])
      if (std::find(stages[s].begin(), stages[s].end(), g) == stages[s].end())
        throw InvalidTuple("stage " + std::to_string(s + 1) +
                           " drops a generator of stage " + std::to_string(s));

  ChainReport report{symmetry, std::nullopt, {}};
  const bool pair = symmetry.tag() == SymmetryType::Tag::PairSym;
  if (pair) {
    for (const auto& stage : stages)
      for (const auto& g : stage)
        if (g.term_count() != 1)
          throw Unsupported("pairsym chain analysis needs monomial generators");
  }

  int last = std::min<int>(horizon, static_cast<int>(stages.size()) - 1);
  for (int j = 1; j <= last; ++j) {
    const auto& current = stages[j - 1];
    const auto& next = stages[j];
    ChainStageReport stage_report;
    stage_report.stage = j;
    stage_report.contained = true;

    if (pair) {
      for (const auto& g : next) {
        bool member = false;
        for (const auto& d : current)
          if (eq_divides(d.leading_monomial(), g.leading_monomial(), symmetry)) {
            member = true;
            break;
          }
        if (!member) {
          stage_report.contained = false;
          stage_report.failing.push_back(g);
          stage_report.witnesses.push_back(ChainWitness{g, current});
        }
      }
    } else {
      GroebnerBasis gb = eq_buchberger(EquivariantIdeal::make(symmetry, current),
                                       TermOrder::LexColMajor, budget);
      for (const auto& g : next)
        if (!eq_member(g, gb)) {
          stage_report.contained = false;
          stage_report.failing.push_back(g);
        }
    }
    report.stages.push_back(std::move(stage_report));
    if (report.stages.back().contained) {
      report.stabilized_at = j;
      break;
    }
  }
  return report;
}

}  // namespace equinoether
