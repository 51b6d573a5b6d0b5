#pragma once

#include <string>
#include <vector>

#include "hypoly/cohomology.hpp"
#include "hypoly/combinatorics.hpp"

namespace hypoly {

/// Connected component of the S^1-fixed locus of X(alpha).
struct FixedComponent {
  enum class Kind { PolygonSpace, XS };
  Kind kind;
  IndexSet S;       // meaningful iff kind == XS
  int morse_index;  // 0 for the polygon space, 2(n-1-|S|) for X_S

  /// "polygon space" or "CP^{|S|-2}"
  std::string diffeo_type() const {
    if (kind == Kind::PolygonSpace) return "polygon space";
    return "CP^" + std::to_string(S.card() - 2);
  }
};

/// Closure of the downward flow from X_S; one per S in S'(alpha).
struct CoreComponent {
  IndexSet S;
  int complex_dim;           // always n-3
  bool is_projective_space;  // iff S is a maximal short set
};

enum class CoreIntersectionClass {
  PolygonIntersection,  // S ∩ T = ∅
  Empty,                // S ∩ T ≠ ∅ and S ∪ T long
  InsideUnion,          // S ∩ T ≠ ∅ and S ∪ T short
  FlagIntersection,     // S ⊊ T or T ⊊ S
};

struct PoincarePolynomial {
  std::vector<int> coefficients;  // index d = coefficient of t^{2d}

  bool palindromic() const {
    for (std::size_t d = 0; d < coefficients.size(); ++d)
      if (coefficients[d] != coefficients[coefficients.size() - 1 - d])
        return false;
    return true;
  }
  bool is_zero() const {
    for (int c : coefficients)
      if (c != 0) return false;
    return true;
  }
};

inline std::vector<FixedComponent> fixed_components(const WeightVector& alpha) {
  const int n = alpha.n();
  std::vector<FixedComponent> out;
  if (polygon_nonempty(alpha))
    out.push_back({FixedComponent::Kind::PolygonSpace, IndexSet(0, n), 0});
  for (const auto& S : short_sets(alpha, 2))
    out.push_back({FixedComponent::Kind::XS, S, 2 * (n - 1 - S.card())});
  return out;
}

inline std::vector<CoreComponent> core_components(const WeightVector& alpha) {
  const int n = alpha.n();
  auto maximal = maximal_short_sets(alpha);
  std::vector<CoreComponent> out;
  for (const auto& S : short_sets(alpha, 2)) {
    bool is_max = false;
    for (const auto& M : maximal)
      if (M == S) is_max = true;
    out.push_back({S, n - 3, is_max});
  }
  return out;
}

inline CoreIntersectionClass core_intersection(const WeightVector& alpha,
                                               const IndexSet& S,
                                               const IndexSet& T) {
  auto check = [&](const IndexSet& A) {
    int sg = epsilon_S(alpha, A).sign();
    if (sg == 0) throw NonGenericWeights();
    if (sg > 0 || A.card() < 2) throw SetNotShort(A.str());
  };
  check(S);
  check(T);
  if (S == T) throw BadShape("core_intersection requires S != T");
  if (S.proper_subset_of(T) || T.proper_subset_of(S))
    return CoreIntersectionClass::FlagIntersection;
  if (S.intersect(T).empty()) return CoreIntersectionClass::PolygonIntersection;
  int u = epsilon_S(alpha, S.unite(T)).sign();
  if (u == 0) throw NonGenericWeights();
  return u > 0 ? CoreIntersectionClass::Empty
               : CoreIntersectionClass::InsideUnion;
}

/// Betti numbers of X(alpha); chamber-independent, so keyed by n alone.
inline PoincarePolynomial poincare_X(int n) {
  GradedDims gd = graded_dims(ring_X(n));
  return {gd.dims};
}

/// Poincaré polynomial of M(alpha), recovered from the Morse decomposition
/// P_X = P_M + sum_S t^{2(n-1-|S|)} (1 + t^2 + ... + t^{2(|S|-2)}).
inline PoincarePolynomial derived_polygon_poincare(const WeightVector& alpha) {
  const int n = alpha.n();
  std::vector<int> coeff = poincare_X(n).coefficients;
  coeff.resize(static_cast<std::size_t>(n - 2), 0);
  for (const auto& S : short_sets(alpha, 2)) {
    int base = n - 1 - S.card();
    for (int j = 0; j <= S.card() - 2; ++j)
      coeff[static_cast<std::size_t>(base + j)] -= 1;
  }
  bool nonempty = polygon_nonempty(alpha);
  if (!nonempty) {
    for (int c : coeff)
      if (c != 0) throw MorseInconsistency("nonzero residue with empty polygon space");
    return {std::vector<int>(static_cast<std::size_t>(n - 2), 0)};
  }
  coeff.resize(static_cast<std::size_t>(n - 2), 0);
  for (int c : coeff)
    if (c < 0) throw MorseInconsistency("negative coefficient");
  PoincarePolynomial pm{coeff};
  if (!pm.palindromic()) throw MorseInconsistency("not palindromic");
  return pm;
}

}  // namespace hypoly
