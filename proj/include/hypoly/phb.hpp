#pragma once

#include <string>
#include <vector>

#include "hypoly/combinatorics.hpp"

namespace hypoly {

/// Rank-2 parabolic weights at n marked points: 0 <= beta1_i < beta2_i < 1.
struct ParabolicWeights {
  std::vector<Rat> beta1, beta2;

  int n() const { return static_cast<int>(beta1.size()); }

  void validate() const {
    if (beta1.size() != beta2.size() || n() < 3)
      throw ParseError("parabolic weights need matching lists, n >= 3");
    for (int i = 0; i < n(); ++i) {
      if (!(Rat(0) <= beta1[static_cast<std::size_t>(i)] &&
            beta1[static_cast<std::size_t>(i)] < beta2[static_cast<std::size_t>(i)] &&
            beta2[static_cast<std::size_t>(i)] < Rat(1)))
        throw ParseError("need 0 <= beta1 < beta2 < 1 at every point");
    }
  }

  /// alpha_i = beta2_i - beta1_i, the weight vector of the matching X(alpha).
  WeightVector alpha() const {
    validate();
    std::vector<Eps> a;
    for (int i = 0; i < n(); ++i)
      a.emplace_back(beta2[static_cast<std::size_t>(i)] -
                     beta1[static_cast<std::size_t>(i)]);
    return WeightVector(std::move(a));
  }
};

/// Critical submanifold M_{(d0,S)} of the Higgs moduli, with its invariants.
struct CriticalSubmanifold {
  int d0;
  IndexSet S;
  int g, d;
  int m;            // = d - 2 d0 + 2(g-1) + |S|
  int morse_index;  // = 2(g-1+n) + 4 d0 - 2 d - 2|S|
  std::string description;
};

inline int morse_index_phb(int g, int d, int d0, const IndexSet& S, int n) {
  return 2 * (g - 1 + n) + 4 * d0 - 2 * d - 2 * S.card();
}

/// All (d0, S) with eps_S(alpha) + d < 2 d0 <= d + 2(g-1) + |S|.
inline std::vector<CriticalSubmanifold> critical_submanifolds(
    int g, int d, const ParabolicWeights& beta) {
  WeightVector alpha = beta.alpha();
  require_generic(alpha);
  const int n = alpha.n();
  std::vector<CriticalSubmanifold> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    IndexSet S(mask, n);
    Eps eps = epsilon_S(alpha, S);
    int upper = d + 2 * (g - 1) + S.card();  // 2 d0 <= upper
    // descend over even 2 d0 <= upper while eps + d < 2 d0 still holds
    for (int two_d0 = upper - (((upper % 2) + 2) % 2); ; two_d0 -= 2) {
      Eps gap = eps + Eps(Rat(d - two_d0));
      int sg = gap.sign();
      if (sg == 0) throw NonGenericWeights();
      if (sg > 0) break;
      int d0 = two_d0 / 2;
      int m = d - 2 * d0 + 2 * (g - 1) + S.card();
      int idx = morse_index_phb(g, d, d0, S, n);
      std::string desc = (g == 0) ? ("CP^" + std::to_string(m))
                                  : ("2^{2g}-cover of Sym^" + std::to_string(m) +
                                     " of the genus-" + std::to_string(g) + " curve");
      out.push_back({d0, S, g, d, m, idx, desc});
    }
  }
  // descending d0 inside each S produced reversed order; normalize: sort by
  // (mask, d0) ascending for deterministic output
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.S.mask != b.S.mask) return a.S.mask < b.S.mask;
    return a.d0 < b.d0;
  });
  return out;
}

/// Hyperplanes H_{(d0,S)} whose crossing empties the moduli (g = 0 only):
/// 2 d0 - d - 1 + n - |S| = 0.
inline std::vector<std::pair<int, IndexSet>> vanishing_walls(int g, int d, int n) {
  if (g != 0) throw UnsupportedGenus(std::to_string(g));
  std::vector<std::pair<int, IndexSet>> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    IndexSet S(mask, n);
    int num = d + 1 - n + S.card();
    if (((num % 2) + 2) % 2 != 0) continue;
    out.emplace_back(num / 2, S);
  }
  return out;
}

/// Index-0 critical submanifolds; at most one exists when g = 0 and none
/// when g >= 1.
inline std::vector<CriticalSubmanifold> zero_index_components(
    int g, int d, const ParabolicWeights& beta) {
  std::vector<CriticalSubmanifold> out;
  for (const auto& c : critical_submanifolds(g, d, beta))
    if (c.morse_index == 0) out.push_back(c);
  if (g >= 1 && !out.empty())
    throw InvariantViolation("index-0 component with g >= 1");
  if (g == 0 && out.size() > 1)
    throw InvariantViolation("multiple index-0 components with g = 0");
  return out;
}

/// The H(beta) restriction of Example-2.23 type: holomorphically trivial,
/// d = 0, d0 = 0 components only.
inline std::vector<CriticalSubmanifold> critical_submanifolds_restricted(
    const ParabolicWeights& beta) {
  std::vector<CriticalSubmanifold> out;
  for (const auto& c : critical_submanifolds(0, 0, beta))
    if (c.d0 == 0) out.push_back(c);
  return out;
}

}  // namespace hypoly
