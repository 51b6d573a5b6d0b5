#pragma once

#include <algorithm>
#include <vector>

#include "hypoly/combinatorics.hpp"
#include "hypoly/poly.hpp"

namespace hypoly {

/// Exponent vector (k_1,...,k_n) of a Chern-class monomial c_1^{k_1}...c_n^{k_n}.
struct Monomial {
  std::vector<int> exponents;

  int n() const { return static_cast<int>(exponents.size()); }
  int degree() const {
    int d = 0;
    for (int k : exponents) d += k;
    return d;
  }
};

/// Canonical integrand after the reduction identities:
///  * exponents on S folded onto the pivot c_1,
///  * square pairs on S^c folded onto the pivot,
///  * for |S| = n-1 the leftover single factor folded with a sign flip.
/// The weight vector is simultaneously permuted so that S = {1..|S|} and the
/// surviving single factors (the tail) occupy the last positions. After the
/// permutation the integrand reads  sign * c_1^K c_{n-t+1} ... c_n.
struct CanonicalIntegrand {
  int n = 0;
  int s = 0;          // |S| after permutation (S = {1..s})
  int pivot_power = 0;  // K
  int tail = 0;         // |T|; occupies positions n-tail+1 .. n
  int sign = 1;
  std::vector<int> sigma;  // sigma[new_pos-1] = original 1-based index
};

struct CanonicalForm {
  WeightVector alpha;  // permuted weights
  IndexSet S;          // = {1..s}
  CanonicalIntegrand integrand;
};

inline int pow_sign(int exponent) { return (exponent % 2 == 0) ? 1 : -1; }

/// Triangular subsets J of {3..m} for alpha_prime = (a_1,...,a_m):
/// ell_J = sum_J a_i - sum_{({3..m} minus J)} a_i > 0 together with the three
/// (non-strict) triangle inequalities against a_1, a_2.
inline std::vector<IndexSet> triangular_sets(const WeightVector& ap) {
  const int m = ap.n();
  std::vector<IndexSet> out;
  std::vector<int> I;
  for (int i = 3; i <= m; ++i) I.push_back(i);
  const std::uint32_t count = 1u << I.size();
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    Eps ell;
    IndexSet J(0, m);
    for (std::size_t b = 0; b < I.size(); ++b) {
      if ((mask >> b) & 1u) {
        ell += ap.at1(I[b]);
        J.mask |= 1u << (I[b] - 1);
      } else {
        ell -= ap.at1(I[b]);
      }
    }
    if (ell.sign() <= 0) continue;
    if (ap.at1(1) <= ap.at1(2) + ell && ap.at1(2) <= ap.at1(1) + ell &&
        ell <= ap.at1(1) + ap.at1(2))
      out.push_back(J);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// The |S|-independent factor of the type-I formula: the signed triangular
/// count for a polygon space M(alpha_tilde) with m = len(alpha_tilde).
inline Int polygon_c1_power(const WeightVector& at) {
  const int m = at.n();
  require_generic(at);
  Int total = 0;
  for (const auto& J : triangular_sets(at)) {
    int e = (m - 1) * (J.contains(m) ? 1 : 0) + J.card() + 1;
    total += pow_sign(e);
  }
  return total;
}

namespace detail {

inline Eps sum_range(const WeightVector& a, int from, int to) {
  Eps s;
  for (int i = from; i <= to; ++i) s += a.at1(i);
  return s;
}

/// Maximality test for the canonical S = {1..s}: no short proper superset.
inline bool canonical_maximal_short(const WeightVector& alpha, int s) {
  const int n = alpha.n();
  IndexSet S = IndexSet::from_indices([&] {
    std::vector<int> v;
    for (int i = 1; i <= s; ++i) v.push_back(i);
    return v;
  }(), n);
  auto shorts = short_sets(alpha, 0);
  for (const auto& T : shorts)
    if (S.proper_subset_of(T)) return false;
  return true;
}

}  // namespace detail

/// A_{n,l}: subsets J of {n-l-1..n} with ell_J > 0 and
/// sum_S alpha < ell_J + alpha_{s+1} + ... + alpha_{n-l-2};
/// alpha is in canonical order with S = {1..s}, s <= n-l-2.
inline std::vector<IndexSet> family_A(const WeightVector& alpha, int s, int l) {
  const int n = alpha.n();
  if (s > n - l - 2) throw BadShape("family A requires |S| <= n-l-2");
  std::vector<int> I;
  for (int i = n - l - 1; i <= n; ++i) I.push_back(i);
  Eps sumS = detail::sum_range(alpha, 1, s);
  Eps mid = detail::sum_range(alpha, s + 1, n - l - 2);
  std::vector<IndexSet> out;
  for (std::uint32_t mask = 0; mask < (1u << I.size()); ++mask) {
    Eps ell;
    IndexSet J(0, n);
    for (std::size_t b = 0; b < I.size(); ++b) {
      if ((mask >> b) & 1u) {
        ell += alpha.at1(I[b]);
        J.mask |= 1u << (I[b] - 1);
      } else {
        ell -= alpha.at1(I[b]);
      }
    }
    if (ell.sign() > 0 && sumS < ell + mid) out.push_back(J);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Atilde_{n,l}: subsets J of {n-l..n} with ell_J > sum_S alpha, the
/// complement in ell_J taken inside {n-l..n}; requires s = n-l-1.
inline std::vector<IndexSet> family_Atilde(const WeightVector& alpha, int s, int l) {
  const int n = alpha.n();
  if (s != n - l - 1) throw BadShape("family Atilde requires |S| = n-l-1");
  std::vector<int> I;
  for (int i = n - l; i <= n; ++i) I.push_back(i);
  Eps sumS = detail::sum_range(alpha, 1, s);
  std::vector<IndexSet> out;
  for (std::uint32_t mask = 0; mask < (1u << I.size()); ++mask) {
    Eps ell;
    IndexSet J(0, n);
    for (std::size_t b = 0; b < I.size(); ++b) {
      if ((mask >> b) & 1u) {
        ell += alpha.at1(I[b]);
        J.mask |= 1u << (I[b] - 1);
      } else {
        ell -= alpha.at1(I[b]);
      }
    }
    if (ell > sumS) out.push_back(J);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

/// Type-I closed formula for the canonical integral of c_1^{n-3} over
/// U_S(alpha) with S = {1..s} short.
inline Int type_I(const WeightVector& alpha, int s) {
  const int n = alpha.n();
  if (s <= n - 3) {
    std::vector<Eps> e;
    e.push_back(alpha.at1(n));
    for (int i = s + 1; i <= n - 1; ++i) e.push_back(alpha.at1(i));
    e.push_back(sum_range(alpha, 1, s));
    WeightVector at(std::move(e));
    const int m = at.n();  // = n - s + 1
    Int total = 0;
    for (const auto& J : triangular_sets(at)) {
      int exp = (n - s) * (J.contains(m) ? 1 : 0) + J.card() + s;
      total += pow_sign(exp);
    }
    return total;
  }
  if (s == n - 2) return canonical_maximal_short(alpha, s) ? pow_sign(n - 1) : 0;
  // s == n - 1
  return pow_sign(n - 1);
}

/// Type-II closed formula for sign-free canonical data: integral of
/// c_1^K c_{n-t+1}...c_n over U_S(alpha), S = {1..s} short, t >= 1.
inline Int type_II(const WeightVector& alpha, int s, int t) {
  const int n = alpha.n();
  const int l = t - 1;
  if (s < n - l - 2) {
    Int total = 0;
    Eps sumS = sum_range(alpha, 1, s);
    for (const auto& J : family_A(alpha, s, l)) {
      std::vector<Eps> e;
      Eps ell;
      for (int i = n - l - 1; i <= n; ++i)
        if (J.contains(i))
          ell += alpha.at1(i);
        else
          ell -= alpha.at1(i);
      e.push_back(ell);
      for (int i = s + 1; i <= n - l - 2; ++i) e.push_back(alpha.at1(i));
      e.push_back(sumS);
      WeightVector at(std::move(e));
      const int m = at.n();  // = n - l - s
      for (const auto& Jp : triangular_sets(at)) {
        int exp = (J.contains(n - l - 1) ? 1 : 0) +
                  (Jp.contains(m) ? 1 : 0) * (n - l - s + 1) + Jp.card() + s + 1;
        total += pow_sign(exp);
      }
    }
    return total;
  }
  if (s == n - l - 2) {
    Int total = 0;
    for (const auto& J : family_A(alpha, s, l))
      total += pow_sign((J.contains(n - l - 1) ? 1 : 0) + s + 1);
    return total;
  }
  if (s == n - l - 1)
    return Int(pow_sign(n - l)) *
           Int(static_cast<long>(family_Atilde(alpha, s, l).size()));
  throw BadShape("type II requires |S| <= n-l-1");
}

}  // namespace detail

/// Reduces (alpha, S, monomial) to canonical form; total degree must be n-3.
inline CanonicalForm canonicalize(const WeightVector& alpha, const IndexSet& S,
                                  const Monomial& mono) {
  const int n = alpha.n();
  if (mono.n() != n) throw BadShape("monomial length mismatch");
  if (mono.degree() != n - 3) throw DegreeMismatch();
  require_generic(alpha);
  int es = epsilon_S(alpha, S).sign();
  if (es > 0 || S.card() < 2) throw SetNotShort(S.str());

  int K = 0, sign = 1;
  std::vector<int> residual(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n; ++i) {
    int k = mono.exponents[static_cast<std::size_t>(i - 1)];
    if (S.contains(i)) {
      K += k;  // c_i = c_1 on U_S for i in S
    } else {
      K += 2 * (k / 2);  // c_j^2 = c_1^2 on U_S for j off S
      residual[static_cast<std::size_t>(i - 1)] = k % 2;
    }
  }
  if (S.card() == n - 1) {
    // the unique leftover factor satisfies c_j = -c_1
    for (int j = 1; j <= n; ++j)
      if (!S.contains(j) && residual[static_cast<std::size_t>(j - 1)] == 1) {
        residual[static_cast<std::size_t>(j - 1)] = 0;
        K += 1;
        sign = -sign;
      }
  }

  std::vector<int> order;  // new position -> original index
  for (int i = 1; i <= n; ++i)
    if (S.contains(i)) order.push_back(i);
  for (int i = 1; i <= n; ++i)
    if (!S.contains(i) && residual[static_cast<std::size_t>(i - 1)] == 0)
      order.push_back(i);
  int tail = 0;
  for (int i = 1; i <= n; ++i)
    if (residual[static_cast<std::size_t>(i - 1)] == 1) {
      order.push_back(i);
      ++tail;
    }

  std::vector<Eps> perm;
  for (int idx : order) perm.push_back(alpha.at1(idx));
  CanonicalForm cf;
  cf.alpha = WeightVector(std::move(perm));
  std::vector<int> sidx;
  for (int i = 1; i <= S.card(); ++i) sidx.push_back(i);
  cf.S = IndexSet::from_indices(sidx, n);
  cf.integrand = {n, S.card(), K, tail, sign, order};
  return cf;
}

/// Closed-formula evaluation of a canonical integrand.
inline Int integral_closed(const WeightVector& alpha, const IndexSet& S,
                           const CanonicalIntegrand& ig) {
  const int n = alpha.n();
  if (ig.pivot_power + ig.tail != n - 3) throw DegreeMismatch();
  int es = epsilon_S(alpha, S).sign();
  if (es == 0) throw NonGenericWeights();
  if (es > 0 || S.card() < 2) throw SetNotShort(S.str());
  Int base = (ig.tail == 0) ? detail::type_I(alpha, ig.s)
                            : detail::type_II(alpha, ig.s, ig.tail);
  return Int(ig.sign) * base;
}

/// Exact intersection number via canonicalization + closed formulas.
inline Int integrate(const WeightVector& alpha, const IndexSet& S,
                     const Monomial& mono) {
  CanonicalForm cf = canonicalize(alpha, S, mono);
  return integral_closed(cf.alpha, cf.S, cf.integrand);
}

namespace detail {

/// Independent oracle: the recursion on the last tail factor. alpha is in
/// canonical order, S = {1..s}, integrand c_1^K c_{n-t+1}...c_n.
inline Int eval_recursive(WeightVector alpha, int s, int K, int t) {
  const int n = alpha.n();
  int es = (sum_range(alpha, 1, s) - sum_range(alpha, s + 1, n)).sign();
  if (es == 0) throw NonGenericWeights();
  if (es > 0) return 0;  // U_S empty when S is long

  if (t == 0) {
    if (K != n - 3) throw RecursionShape();
    if (n == 3) return 1;  // degree-0 integral over a point
    return type_I(alpha, s);
  }
  if (s == n - 1) {
    // every tail factor folds with c_j = -c_1
    return Int(pow_sign(t)) * Int(pow_sign(n - 1));
  }

  // keep the split well defined and both children generic
  for (int guard = 0; guard < 4; ++guard) {
    bool ok = alpha.at1(n - 1) != alpha.at1(n);
    if (ok) {
      std::vector<Eps> p(alpha.entries.begin(), alpha.entries.end() - 2);
      p.push_back(alpha.at1(n - 1) + alpha.at1(n));
      std::vector<Eps> m(alpha.entries.begin(), alpha.entries.end() - 2);
      m.push_back(abs(alpha.at1(n - 1) - alpha.at1(n)));
      ok = is_generic(WeightVector(p)) && is_generic(WeightVector(m));
    }
    if (ok) break;
    alpha[n - 1] += Eps::infinitesimal(alpha.depth() + 1);
  }

  int sg = (alpha.at1(n - 1) - alpha.at1(n)).sign();
  std::vector<Eps> p(alpha.entries.begin(), alpha.entries.end() - 2);
  p.push_back(alpha.at1(n - 1) + alpha.at1(n));
  std::vector<Eps> m(alpha.entries.begin(), alpha.entries.end() - 2);
  m.push_back(abs(alpha.at1(n - 1) - alpha.at1(n)));
  // factor (-1)^{k_n - 1} sgn^{k_{n-1} + k_n} with k_n = 1 and
  // k_{n-1} = 1 when another tail factor remains, 0 otherwise
  Int factor = (t >= 2) ? Int(1) : Int(sg);
  return eval_recursive(WeightVector(std::move(p)), s, K, t - 1) +
         factor * eval_recursive(WeightVector(std::move(m)), s, K, t - 1);
}

}  // namespace detail

/// Independent oracle for the same integrals, by the wall-crossing recursion.
inline Int integrate_recursive(const WeightVector& alpha, const IndexSet& S,
                               const Monomial& mono) {
  CanonicalForm cf = canonicalize(alpha, S, mono);
  if (cf.integrand.tail > 0 &&
      cf.integrand.pivot_power + cf.integrand.tail != cf.integrand.n - 3)
    throw RecursionShape();
  return Int(cf.integrand.sign) *
         detail::eval_recursive(cf.alpha, cf.integrand.s,
                                cf.integrand.pivot_power, cf.integrand.tail);
}

/// Integrates a polynomial in c_1..c_n (top degree n-3) with exact rational
/// coefficients; the result must be an exact rational.
inline Rat integrate_poly(const WeightVector& alpha, const IndexSet& S,
                          const Poly& p) {
  Rat total(0);
  for (const auto& [m, c] : p.terms) {
    Monomial mono;
    mono.exponents = m;
    total += c * Rat(integrate(alpha, S, mono));
  }
  return total;
}

/// Gram matrix of the intersection pairing on the given basis of class
/// expressions; every entry must come out an exact integer.
inline std::vector<std::vector<Int>> pairing_matrix(
    const WeightVector& alpha, const IndexSet& S, const std::vector<Poly>& basis) {
  const int n = alpha.n();
  for (const auto& b : basis) {
    int d = b.homogeneous_degree();
    if (d < 0) throw DegreeMismatch("zero basis element");
    (void)d;
  }
  std::vector<std::vector<Int>> M;
  for (const auto& bi : basis) {
    std::vector<Int> row;
    for (const auto& bj : basis) {
      Poly prod = bi * bj;
      if (!prod.is_zero() && prod.homogeneous_degree() != n - 3)
        throw DegreeMismatch("pairing product is not of top degree");
      Rat v = integrate_poly(alpha, S, prod);
      if (v.get_den() != 1) throw NonIntegerPairing(v.get_str());
      row.push_back(v.get_num());
    }
    M.push_back(std::move(row));
  }
  return M;
}

}  // namespace hypoly
