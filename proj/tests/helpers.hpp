#pragma once

#include <random>
#include <vector>

#include "hypoly/hypoly.hpp"

namespace hypoly::testing {

/// Random generic weight vector with small rational entries; rejection
/// sampling keeps it off every wall.
inline WeightVector random_generic_alpha(int n, std::mt19937_64& rng,
                                         int max_num = 12, int max_den = 4) {
  std::uniform_int_distribution<int> num(1, max_num), den(1, max_den);
  for (;;) {
    std::vector<Eps> e;
    for (int i = 0; i < n; ++i) e.emplace_back(Rat(num(rng), den(rng)));
    WeightVector a(std::move(e));
    if (is_generic(a)) return a;
  }
}

/// Random permutation of the entries of alpha; returns the permuted vector
/// and the map new-position (1-based) -> old index (1-based).
inline std::pair<WeightVector, std::vector<int>> random_permutation(
    const WeightVector& alpha, std::mt19937_64& rng) {
  std::vector<int> perm;
  for (int i = 1; i <= alpha.n(); ++i) perm.push_back(i);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Eps> e;
  for (int i : perm) e.push_back(alpha.at1(i));
  return {WeightVector(std::move(e)), perm};
}

inline IndexSet permute_set(const IndexSet& S, const std::vector<int>& perm) {
  std::vector<int> idx;
  for (int pos = 1; pos <= static_cast<int>(perm.size()); ++pos)
    if (S.contains(perm[static_cast<std::size_t>(pos - 1)])) idx.push_back(pos);
  return IndexSet::from_indices(idx, S.n);
}

}  // namespace hypoly::testing
