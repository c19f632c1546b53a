#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "qpos/poset.hpp"

namespace qpos_test {

// Random strict order on {1..n}: pick a random linear order, keep each of the
// n(n-1)/2 order-compatible pairs with probability 1/2, close transitively.
inline qpos::Poset random_poset(int n, std::mt19937& rng) {
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution coin(0.5);
  std::vector<std::pair<int, int>> rels;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (coin(rng)) rels.emplace_back(perm[static_cast<size_t>(a)], perm[static_cast<size_t>(b)]);
  return qpos::Poset::from_relations(n, rels);
}

inline std::vector<int> random_permutation(int n, std::mt19937& rng) {
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

inline qpos::Poset random_relabel(const qpos::Poset& p, std::mt19937& rng) {
  return qpos::relabel(p, random_permutation(p.size(), rng));
}

}  // namespace qpos_test
