#pragma once

#include <string>
#include <vector>

#include "hypoly/intersection.hpp"

namespace hypoly {

/// Quotient presentation of a graded ring with degree-1 generators.
struct GradedRingPresentation {
  int n = 0;                // number of generators
  std::string generator;    // "c" or "b"
  std::vector<Poly> relations;  // homogeneous, over the n generators
  int top_degree = 0;
};

struct GradedDims {
  std::vector<int> dims;  // dims[d] = dimension of the degree-d piece

  bool palindromic() const {
    for (std::size_t d = 0; d < dims.size(); ++d)
      if (dims[d] != dims[dims.size() - 1 - d]) return false;
    return true;
  }
};

/// H*(X(alpha)) = Q[c_1..c_n] / ( <c_i^2 - c_j^2> + <monomials of degree n-2> );
/// independent of the chamber.
inline GradedRingPresentation ring_X(int n) {
  if (n < 4) throw BadShape("ring requires n >= 4");
  GradedRingPresentation pres;
  pres.n = n;
  pres.generator = "c";
  pres.top_degree = n - 3;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      Poly ci = Poly::var(n, i), cj = Poly::var(n, j);
      pres.relations.push_back(ci * ci - cj * cj);
    }
  for (const auto& m : monomials_of_degree(n, n - 2)) {
    Poly p;
    p.add_term(m, Rat(1));
    pres.relations.push_back(std::move(p));
  }
  return pres;
}

/// H*(U_S) = Q[b_1..b_n] / I_S with the four relation families; requires
/// 1 in S (callers permute coordinates first).
inline GradedRingPresentation ring_US(const WeightVector& alpha, const IndexSet& S) {
  const int n = alpha.n();
  int es = epsilon_S(alpha, S).sign();
  if (es == 0) throw NonGenericWeights();
  if (es > 0 || S.card() < 2) throw SetNotShort(S.str());
  if (!S.contains(1)) throw BadShape("ring_US requires 1 in S");

  GradedRingPresentation pres;
  pres.n = n;
  pres.generator = "b";
  pres.top_degree = n - 3;
  Poly b1 = Poly::var(n, 1);

  for (int i = 2; i <= n; ++i)
    if (S.contains(i)) pres.relations.push_back(b1 - Poly::var(n, i));
  for (int j = 1; j <= n; ++j)
    if (!S.contains(j)) {
      Poly bj = Poly::var(n, j);
      pres.relations.push_back(bj * (b1 - bj));
    }

  IndexSet Sc = S.complement();
  auto members = Sc.indices();
  for (std::uint32_t mask = 1; mask < (1u << members.size()); ++mask) {
    IndexSet R(0, n);
    for (std::size_t b = 0; b < members.size(); ++b)
      if ((mask >> b) & 1u) R.mask |= 1u << (members[b] - 1);
    int sgn_r = epsilon_S(alpha, R.unite(S)).sign();
    if (sgn_r == 0) throw NonGenericWeights();
    if (sgn_r > 0) {  // R ∪ S long
      Poly p = Poly::constant(n, Rat(1));
      for (int j : R.indices()) p = p * Poly::var(n, j);
      pres.relations.push_back(std::move(p));
    }
    int sgn_l = epsilon_S(alpha, R).sign();
    if (sgn_l == 0) throw NonGenericWeights();
    if (sgn_l > 0) {  // L := R itself long
      Poly p = Poly::constant(n, Rat(1));
      for (int k = 0; k < S.card() - 2; ++k) p = p * b1;
      for (int j : R.indices()) p = p * (Poly::var(n, j) - b1);
      pres.relations.push_back(std::move(p));
    }
  }
  return pres;
}

/// Exact graded dimensions of the quotient, by rank computation per degree.
inline GradedDims graded_dims(const GradedRingPresentation& pres) {
  GradedDims out;
  for (int d = 0; d <= pres.top_degree; ++d) {
    auto monos = monomials_of_degree(pres.n, d);
    std::map<Mono, int> col;
    for (std::size_t i = 0; i < monos.size(); ++i)
      col[monos[i]] = static_cast<int>(i);
    RowSpace rs;
    for (const auto& rel : pres.relations) {
      if (rel.is_zero()) continue;
      int e = rel.homogeneous_degree();
      if (e > d) continue;
      for (const auto& mu : monomials_of_degree(pres.n, d - e)) {
        std::map<int, Rat> row;
        for (const auto& [m, c] : rel.terms) {
          Mono prod(m);
          for (std::size_t i = 0; i < prod.size(); ++i) prod[i] += mu[i];
          row[col.at(prod)] += c;
        }
        for (auto it = row.begin(); it != row.end();)
          it = (it->second == 0) ? row.erase(it) : std::next(it);
        rs.insert(std::move(row));
      }
    }
    out.dims.push_back(static_cast<int>(monos.size()) - rs.rank());
  }
  return out;
}

/// Cross-check between the ring presentation and the intersection formulas:
/// every ideal generator, expanded through b_i = -(c_1 + c_i)/2 and padded to
/// top degree by arbitrary monomials, must integrate to zero over U_S.
inline bool verify_ideal_consistency(const WeightVector& alpha, const IndexSet& S) {
  const int n = alpha.n();
  // permute so S occupies {1..|S|}; integration is permutation-equivariant
  std::vector<int> order;
  for (int i = 1; i <= n; ++i)
    if (S.contains(i)) order.push_back(i);
  for (int i = 1; i <= n; ++i)
    if (!S.contains(i)) order.push_back(i);
  std::vector<Eps> perm;
  for (int idx : order) perm.push_back(alpha.at1(idx));
  WeightVector pa{std::move(perm)};
  std::vector<int> sidx;
  for (int i = 1; i <= S.card(); ++i) sidx.push_back(i);
  IndexSet pS = IndexSet::from_indices(sidx, n);

  auto pres = ring_US(pa, pS);
  std::vector<Poly> images;
  Poly c1 = Poly::var(n, 1);
  for (int i = 1; i <= n; ++i)
    images.push_back((c1 + Poly::var(n, i)) * Rat(-1, 2));

  for (const auto& rel : pres.relations) {
    int e = rel.homogeneous_degree();
    if (e < 0 || e > n - 3) continue;
    Poly g = rel.substitute(images, n);
    for (const auto& mu : monomials_of_degree(n, n - 3 - e)) {
      Poly muP;
      muP.add_term(mu, Rat(1));
      if (integrate_poly(pa, pS, g * muP) != 0) return false;
    }
  }
  return true;
}

}  // namespace hypoly
