#include "equinoether/smallperm.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "equinoether/errors.hpp"

namespace equinoether {

Perm perm_identity(int m) {
  Perm g(m);
  for (int i = 0; i < m; ++i) g[i] = i + 1;
  return g;
}

Perm perm_compose(const Perm& g, const Perm& h) {
  if (g.size() != h.size()) throw ShapeError("permutation size mismatch");
  Perm out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = g[h[i] - 1];
  return out;
}

Perm perm_inverse(const Perm& g) {
  Perm out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[g[i] - 1] = static_cast<int>(i) + 1;
  return out;
}

Perm perm_transposition(int m, int a, int b) {
  Perm g = perm_identity(m);
  std::swap(g[a - 1], g[b - 1]);
  return g;
}

bool is_perm(const Perm& g) {
  std::vector<bool> seen(g.size(), false);
  for (int x : g) {
    if (x < 1 || x > static_cast<int>(g.size()) || seen[x - 1]) return false;
    seen[x - 1] = true;
  }
  return true;
}

const std::vector<Perm>& all_permutations(int m) {
  if (m < 0 || m > 9) throw BudgetExceeded("permutation enumeration limited to m <= 9");
  static std::map<int, std::vector<Perm>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  std::vector<Perm> all;
  Perm g = perm_identity(m);
  do {
    all.push_back(g);
  } while (std::next_permutation(g.begin(), g.end()));
  return cache.emplace(m, std::move(all)).first->second;
}

}  // namespace equinoether
