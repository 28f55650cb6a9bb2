#pragma once

#include <vector>

namespace equinoether {

// Permutation of {1..m}: perm[i-1] is the image of i.
using Perm = std::vector<int>;

Perm perm_identity(int m);
Perm perm_compose(const Perm& g, const Perm& h);  // x -> g(h(x))
Perm perm_inverse(const Perm& g);
Perm perm_transposition(int m, int a, int b);
bool is_perm(const Perm& g);

// All m! permutations in lexicographic order; cached per m.  m <= 9.
const std::vector<Perm>& all_permutations(int m);

}  // namespace equinoether
