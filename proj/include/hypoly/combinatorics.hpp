#pragma once

#include <map>
#include <optional>
#include <vector>

#include "hypoly/index_set.hpp"
#include "hypoly/weights.hpp"

namespace hypoly {

/// eps_S(alpha) = sum_{i in S} alpha_i - sum_{i notin S} alpha_i.
inline Eps epsilon_S(const WeightVector& alpha, const IndexSet& S) {
  Eps acc;
  for (int i = 1; i <= alpha.n(); ++i) {
    if (S.contains(i))
      acc += alpha.at1(i);
    else
      acc -= alpha.at1(i);
  }
  return acc;
}

/// alpha is generic iff eps_S(alpha) != 0 for every subset S.
inline bool is_generic(const WeightVector& alpha) {
  const int n = alpha.n();
  // eps_{S^c} = -eps_S, so scanning the half containing index 1 suffices;
  // S = {1..n} gives the total, nonzero for positive weights.
  for (std::uint32_t m = 1; m < (1u << n); m += 2) {
    if (epsilon_S(alpha, IndexSet(m, n)).sign() == 0) return false;
  }
  return true;
}

inline void require_generic(const WeightVector& alpha) {
  if (!is_generic(alpha)) throw NonGenericWeights();
}

/// All short sets (eps_S < 0) of cardinality >= min_card, ascending bitmask.
inline std::vector<IndexSet> short_sets(const WeightVector& alpha, int min_card) {
  const int n = alpha.n();
  std::vector<IndexSet> out;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    IndexSet S(m, n);
    int s = epsilon_S(alpha, S).sign();
    if (s == 0) throw NonGenericWeights();
    if (s < 0 && S.card() >= min_card) out.push_back(S);
  }
  return out;
}

/// Short sets of cardinality >= 2 that are inclusion-maximal among all
/// short sets.
inline std::vector<IndexSet> maximal_short_sets(const WeightVector& alpha) {
  auto shorts = short_sets(alpha, 0);
  std::vector<IndexSet> out;
  for (const auto& S : shorts) {
    if (S.card() < 2) continue;
    bool maximal = true;
    for (const auto& T : shorts) {
      if (S.proper_subset_of(T)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(S);
  }
  return out;
}

/// Per-chamber invariant: sign of eps_S for every canonical proper subset
/// (the representative of {S, S^c} containing index 1).
struct ChamberSignature {
  int n = 0;
  std::map<std::uint32_t, int> signs;  // canonical mask -> -1 / +1

  friend bool operator==(const ChamberSignature& a, const ChamberSignature& b) {
    return a.n == b.n && a.signs == b.signs;
  }
  friend bool operator!=(const ChamberSignature& a, const ChamberSignature& b) {
    return !(a == b);
  }
};

inline ChamberSignature chamber_signature(const WeightVector& alpha) {
  const int n = alpha.n();
  ChamberSignature sig;
  sig.n = n;
  std::uint32_t full = IndexSet::full(n).mask;
  for (std::uint32_t m = 1; m < full; m += 2) {
    int s = epsilon_S(alpha, IndexSet(m, n)).sign();
    if (s == 0) throw NonGenericWeights();
    sig.signs[m] = s;
  }
  return sig;
}

/// Wall between two chambers; discrete data stored canonically (the
/// representative of {S, S^c} containing index 1).
struct Wall {
  IndexSet discrete_data;
};

/// True iff the polygon space M(alpha) is nonempty: no edge longer than the
/// sum of the others (equivalently, no short set of cardinality n-1).
inline bool polygon_nonempty(const WeightVector& alpha) {
  require_generic(alpha);
  Eps tot = alpha.total();
  for (int i = 1; i <= alpha.n(); ++i) {
    if (alpha.at1(i) + alpha.at1(i) > tot) return false;
  }
  return true;
}

/// Short test for a single set without enumerating everything.
inline bool is_short(const WeightVector& alpha, const IndexSet& S) {
  int s = epsilon_S(alpha, S).sign();
  if (s == 0) throw NonGenericWeights();
  return s < 0;
}

}  // namespace hypoly
