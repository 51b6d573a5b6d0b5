#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "hypoly/combinatorics.hpp"

namespace hypoly {

using Cx = std::complex<double>;

inline double to_double(const Eps& x) { return x.base().get_d(); }

/// Point of the ambient quiver representation space: p_i = (a_i, b_i) are
/// complex rows, q_i = (c_i, d_i)^t complex columns.
struct HyperpolygonPoint {
  std::vector<std::array<Cx, 2>> p;  // p[i] = (a, b)
  std::vector<std::array<Cx, 2>> q;  // q[i] = (c, d)

  int n() const { return static_cast<int>(q.size()); }
};

/// Trace-free 2x2 residue matrix of the Higgs field at a marked point.
struct ResidueMatrix {
  Cx r11{0}, r12{0}, r21{0}, r22{0};

  Cx trace() const { return r11 + r22; }
  Cx det() const { return r11 * r22 - r12 * r21; }
  double norm() const {
    return std::max(std::max(std::abs(r11), std::abs(r12)),
                    std::max(std::abs(r21), std::abs(r22)));
  }
  /// max-norm of N q for the column q = (c, d)^t.
  double apply_norm(const std::array<Cx, 2>& q) const {
    return std::max(std::abs(r11 * q[0] + r12 * q[1]),
                    std::abs(r21 * q[0] + r22 * q[1]));
  }
  friend ResidueMatrix operator+(const ResidueMatrix& x, const ResidueMatrix& y) {
    return {x.r11 + y.r11, x.r12 + y.r12, x.r21 + y.r21, x.r22 + y.r22};
  }
};

/// Rank-2 parabolic Higgs data at the marked points: one flag line and one
/// nilpotent residue per point.
struct PHBPoint {
  std::vector<std::array<Cx, 2>> flags;  // generators, first nonzero coord = 1
  std::vector<ResidueMatrix> residues;
  std::vector<Rat> beta1, beta2;  // parabolic weights (optional context)

  int n() const { return static_cast<int>(flags.size()); }
};

/// Outcome of a stability check; witnesses list the violated index sets with
/// the (double) value of eps_S that should have been negative.
struct StabilityReport {
  bool stable = true;
  std::vector<std::pair<IndexSet, double>> witnesses;
  double tol = 1e-9;
};

/// Max-norm violations of the real and complex moment map equations at the
/// level alpha: per-point  a_i c_i + b_i d_i = 0  and
/// |c_i|^2 + |d_i|^2 - |a_i|^2 - |b_i|^2 = 2 alpha_i, plus the global SU(2)
/// and SL(2,C) trace-free sums.
inline std::pair<double, double> moment_residuals(const HyperpolygonPoint& pt,
                                                  const WeightVector& alpha) {
  if (pt.n() != alpha.n() || static_cast<int>(pt.p.size()) != pt.n())
    throw BadShape("point and weight lengths differ");
  double re_res = 0.0, cx_res = 0.0;
  Cx sum_acbd{0}, sum_ad{0}, sum_bc{0}, sum_offdiag{0};
  double sum_diag = 0.0;
  for (int i = 0; i < pt.n(); ++i) {
    const Cx a = pt.p[i][0], b = pt.p[i][1];
    const Cx c = pt.q[i][0], d = pt.q[i][1];
    cx_res = std::max(cx_res, std::abs(a * c + b * d));
    sum_acbd += a * c - b * d;
    sum_ad += a * d;
    sum_bc += b * c;
    double level = std::norm(c) + std::norm(d) - std::norm(a) - std::norm(b) -
                   2.0 * to_double(alpha[i]);
    re_res = std::max(re_res, std::abs(level));
    sum_diag += std::norm(c) - std::norm(a) + std::norm(b) - std::norm(d);
    sum_offdiag += a * std::conj(b) - std::conj(c) * d;
  }
  cx_res = std::max({cx_res, std::abs(sum_acbd), std::abs(sum_ad), std::abs(sum_bc)});
  re_res = std::max({re_res, std::abs(sum_diag), std::abs(sum_offdiag)});
  return {re_res, cx_res};
}

/// Partition of {1..n} into maximal classes of mutually proportional lines
/// [q_i]; proportionality tested by |c_i d_j - d_i c_j| < tol on normalized
/// generators.
inline std::vector<IndexSet> straight_sets(const HyperpolygonPoint& pt,
                                           double tol = 1e-9) {
  const int n = pt.n();
  std::vector<std::array<Cx, 2>> unit(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double nm = std::sqrt(std::norm(pt.q[i][0]) + std::norm(pt.q[i][1]));
    if (nm < tol) throw ZeroQ(std::to_string(i + 1));
    unit[i] = {pt.q[i][0] / nm, pt.q[i][1] / nm};
  }
  auto parallel = [&](int i, int j) {
    return std::abs(unit[i][0] * unit[j][1] - unit[i][1] * unit[j][0]) < tol;
  };
  std::vector<int> cls(static_cast<std::size_t>(n), -1);
  std::vector<IndexSet> out;
  for (int i = 0; i < n; ++i) {
    if (cls[i] >= 0) continue;
    std::vector<int> members{i + 1};
    cls[i] = static_cast<int>(out.size());
    for (int j = i + 1; j < n; ++j)
      if (cls[j] < 0 && parallel(i, j)) {
        cls[j] = cls[i];
        members.push_back(j + 1);
      }
    out.push_back(IndexSet::from_indices(members, n));
  }
  return out;
}

/// alpha-stability: every q_i != 0, and every maximal straight set S with
/// p_j = 0 for all j outside S is short. Shortness is decided exactly on the
/// rational weights.
inline StabilityReport alpha_stable(const HyperpolygonPoint& pt,
                                    const WeightVector& alpha,
                                    double tol = 1e-9) {
  StabilityReport rep;
  rep.tol = tol;
  const int n = pt.n();
  for (int i = 0; i < n; ++i) {
    double nm = std::sqrt(std::norm(pt.q[i][0]) + std::norm(pt.q[i][1]));
    if (nm < tol) {
      rep.stable = false;
      rep.witnesses.emplace_back(IndexSet::from_indices({i + 1}, n), 0.0);
    }
  }
  if (!rep.stable) return rep;
  for (const auto& S : straight_sets(pt, tol)) {
    bool p_vanishes_off_S = true;
    for (int j = 1; j <= n; ++j) {
      if (S.contains(j)) continue;
      const auto& pj = pt.p[static_cast<std::size_t>(j - 1)];
      if (std::max(std::abs(pj[0]), std::abs(pj[1])) >= tol)
        p_vanishes_off_S = false;
    }
    if (!p_vanishes_off_S) continue;
    Eps eps = epsilon_S(alpha, S);
    if (eps.sign() >= 0) {
      rep.stable = false;
      rep.witnesses.emplace_back(S, to_double(eps));
    }
  }
  return rep;
}

/// Normalizes a nonzero column so its first coordinate of magnitude >= tol
/// becomes 1.
inline std::array<Cx, 2> normalize_flag(const std::array<Cx, 2>& q,
                                        double tol = 1e-9) {
  if (std::abs(q[0]) >= tol) return {Cx{1}, q[1] / q[0]};
  if (std::abs(q[1]) >= tol) return {q[0] / q[1], Cx{1}};
  throw ZeroQ("flag generator is zero");
}

/// Residue of the Higgs field at one marked point: the trace-free part of
/// q_i p_i.
inline ResidueMatrix residue_of(const std::array<Cx, 2>& p,
                                const std::array<Cx, 2>& q) {
  const Cx a = p[0], b = p[1], c = q[0], d = q[1];
  Cx r11 = (a * c - b * d) / 2.0;
  return {r11, b * c, a * d, -r11};
}

/// The forward map: flags generated by the q_i, residues (q_i p_i)_0.
inline PHBPoint to_phb(const HyperpolygonPoint& pt,
                       const std::vector<Rat>& beta1,
                       const std::vector<Rat>& beta2,
                       double tol = 1e-9) {
  std::vector<Eps> a;
  for (std::size_t i = 0; i < beta1.size(); ++i)
    a.emplace_back(beta2[i] - beta1[i]);
  WeightVector alpha(std::move(a));
  auto [re, cx] = moment_residuals(pt, alpha);
  if (std::max(re, cx) > tol)
    throw MomentViolation("moment residuals " + std::to_string(std::max(re, cx)));
  if (!alpha_stable(pt, alpha, tol).stable) throw UnstablePoint("");
  PHBPoint out;
  out.beta1 = beta1;
  out.beta2 = beta2;
  for (int i = 0; i < pt.n(); ++i) {
    out.flags.push_back(normalize_flag(pt.q[static_cast<std::size_t>(i)], tol));
    out.residues.push_back(residue_of(pt.p[static_cast<std::size_t>(i)],
                                      pt.q[static_cast<std::size_t>(i)]));
  }
  return out;
}

/// The inverse map: q_i a flag generator, p_i read off the residue entries.
inline HyperpolygonPoint from_phb(const PHBPoint& phb, double tol = 1e-9) {
  HyperpolygonPoint pt;
  for (int i = 0; i < phb.n(); ++i) {
    const auto& N = phb.residues[static_cast<std::size_t>(i)];
    const auto& q = phb.flags[static_cast<std::size_t>(i)];
    if (std::abs(N.trace()) > tol || std::abs(N.det()) > tol ||
        N.apply_norm(q) > tol)
      throw MalformedResidue("point " + std::to_string(i + 1));
    const Cx c = q[0], d = q[1];
    Cx a{0}, b{0};
    if (std::abs(c) >= tol && std::abs(d) >= tol) {
      a = N.r21 / d;
      b = N.r12 / c;
    } else if (std::abs(d) >= tol) {
      a = N.r21 / d;
    } else if (std::abs(c) >= tol) {
      b = N.r12 / c;
    } else {
      throw MalformedResidue("zero flag generator at point " + std::to_string(i + 1));
    }
    pt.p.push_back({a, b});
    pt.q.push_back(q);
  }
  return pt;
}

/// Parabolic stability of a PHB point, decided through the Phi-invariant
/// trivial line subbundles: when some residue is nonzero the only candidate
/// line is its kernel (= the flag there); when Phi = 0 the candidates are the
/// flag lines plus one generic line. For each invariant candidate L the set
/// S_L = { i : L = [q_i] } must be short.
inline StabilityReport phb_stable(const PHBPoint& phb, double tol = 1e-9) {
  StabilityReport rep;
  rep.tol = tol;
  const int n = phb.n();
  std::vector<Eps> a;
  for (std::size_t i = 0; i < phb.beta1.size(); ++i)
    a.emplace_back(phb.beta2[i] - phb.beta1[i]);
  WeightVector alpha(std::move(a));

  std::vector<std::array<Cx, 2>> candidates;
  int pivot = -1;
  for (int i = 0; i < n; ++i)
    if (phb.residues[static_cast<std::size_t>(i)].norm() > tol) pivot = i;
  if (pivot >= 0) {
    candidates.push_back(phb.flags[static_cast<std::size_t>(pivot)]);
  } else {
    candidates = phb.flags;
    candidates.push_back({Cx{1.0}, Cx{0.6180339887498949, 0.3819660112501051}});
  }

  auto parallel = [&](const std::array<Cx, 2>& u, const std::array<Cx, 2>& v) {
    double nu = std::sqrt(std::norm(u[0]) + std::norm(u[1]));
    double nv = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
    return std::abs(u[0] * v[1] - u[1] * v[0]) < tol * nu * nv;
  };
  for (const auto& L : candidates) {
    bool invariant = true;
    for (const auto& N : phb.residues)
      if (N.apply_norm(L) > tol * std::sqrt(std::norm(L[0]) + std::norm(L[1])))
        invariant = false;
    if (!invariant) continue;
    std::vector<int> members;
    for (int i = 1; i <= n; ++i)
      if (parallel(L, phb.flags[static_cast<std::size_t>(i - 1)]))
        members.push_back(i);
    IndexSet S = IndexSet::from_indices(members, n);
    Eps eps = epsilon_S(alpha, S);
    if (eps.sign() >= 0) {
      rep.stable = false;
      rep.witnesses.emplace_back(S, to_double(eps));
    }
  }
  return rep;
}

using Vec3 = std::array<double, 3>;

inline Vec3 vadd(const Vec3& x, const Vec3& y) {
  return {x[0] + y[0], x[1] + y[1], x[2] + y[2]};
}
inline Vec3 vscale(double s, const Vec3& x) { return {s * x[0], s * x[1], s * x[2]}; }
inline double vnorm(const Vec3& x) {
  return std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
}

/// The spinor with (q q*)_0 equal to the given vector under the convention
/// v = (Re(c conj(d)), Im(c conj(d)), (|c|^2 - |d|^2)/2); |q|^2 = 2 |v|.
inline std::array<Cx, 2> hopf_lift(const Vec3& v) {
  double r = vnorm(v);
  double c = std::sqrt(r + v[2]);
  if (c < 1e-12) return {Cx{0}, Cx{std::sqrt(2.0 * r)}};
  return {Cx{c}, Cx{v[0] / c, -v[1] / c}};
}

/// The inverse: the vector (q q*)_0 represented in the same convention.
inline Vec3 hopf_vector(const std::array<Cx, 2>& q) {
  Cx cd = q[0] * std::conj(q[1]);
  return {cd.real(), cd.imag(), (std::norm(q[0]) - std::norm(q[1])) / 2.0};
}

/// Lift of a closed polygon in R^3 with side lengths alpha_i to a point with
/// p = 0; the moment equations then hold identically.
inline HyperpolygonPoint lift_polygon(const std::vector<Vec3>& vectors,
                                      double tol = 1e-9) {
  Vec3 sum{0, 0, 0};
  for (const auto& v : vectors) sum = vadd(sum, v);
  if (vnorm(sum) > tol) throw NotClosed(std::to_string(vnorm(sum)));
  HyperpolygonPoint pt;
  for (const auto& v : vectors) {
    pt.q.push_back(hopf_lift(v));
    pt.p.push_back({Cx{0}, Cx{0}});
  }
  return pt;
}

/// Random closed polygon in R^3 with the given side lengths, by iterative
/// re-centering and re-normalization of the directions.
inline std::vector<Vec3> random_closed_polygon(const std::vector<double>& lengths,
                                               std::mt19937_64& rng,
                                               double tol = 1e-12) {
  const std::size_t m = lengths.size();
  double total = 0.0, longest = 0.0;
  for (double l : lengths) {
    if (l <= 0) throw BadShape("side lengths must be positive");
    total += l;
    longest = std::max(longest, l);
  }
  if (2.0 * longest >= total) throw NotClosed("side lengths violate the polygon inequality");
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Vec3> v(m);
    for (auto& x : v) {
      do {
        x = {gauss(rng), gauss(rng), gauss(rng)};
      } while (vnorm(x) < 1e-6);
    }
    bool ok = false;
    for (int it = 0; it < 20000; ++it) {
      for (std::size_t i = 0; i < m; ++i)
        v[i] = vscale(lengths[i] / vnorm(v[i]), v[i]);
      Vec3 s{0, 0, 0};
      for (const auto& x : v) s = vadd(s, x);
      if (vnorm(s) < tol) {
        ok = true;
        break;
      }
      bool degenerate = false;
      for (auto& x : v) {
        x = vadd(x, vscale(-1.0 / static_cast<double>(m), s));
        if (vnorm(x) < 1e-9) degenerate = true;
      }
      if (degenerate) break;
    }
    if (ok) return v;
  }
  throw NotClosed("closed polygon search did not converge");
}

/// Rotation matrix taking the unit vector of a to the unit vector of b
/// (Rodrigues), applied to x.
inline Vec3 rotate_onto(const Vec3& a, const Vec3& b, const Vec3& x) {
  Vec3 u = vscale(1.0 / vnorm(a), a), w = vscale(1.0 / vnorm(b), b);
  Vec3 k = {u[1] * w[2] - u[2] * w[1], u[2] * w[0] - u[0] * w[2],
            u[0] * w[1] - u[1] * w[0]};
  double s = vnorm(k), c = u[0] * w[0] + u[1] * w[1] + u[2] * w[2];
  if (s < 1e-12) {
    if (c > 0) return x;
    // antipodal: rotate by pi around any axis perpendicular to u
    Vec3 perp = std::abs(u[0]) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    double dp = perp[0] * u[0] + perp[1] * u[1] + perp[2] * u[2];
    Vec3 axis = vadd(perp, vscale(-dp, u));
    axis = vscale(1.0 / vnorm(axis), axis);
    double dx = axis[0] * x[0] + axis[1] * x[1] + axis[2] * x[2];
    return vadd(vscale(2.0 * dx, axis), vscale(-1.0, x));
  }
  Vec3 kh = vscale(1.0 / s, k);
  Vec3 kxx = {kh[1] * x[2] - kh[2] * x[1], kh[2] * x[0] - kh[0] * x[2],
              kh[0] * x[1] - kh[1] * x[0]};
  double kdx = kh[0] * x[0] + kh[1] * x[1] + kh[2] * x[2];
  return vadd(vadd(vscale(c, x), vscale(s, kxx)), vscale(kdx * (1.0 - c), kh));
}

/// Random point on the core component U_S: the q_i for i in S are straight
/// along the third axis with p_i carrying planar u-vectors that sum to zero,
/// the q_j off S close the configuration with p_j = 0.
inline HyperpolygonPoint sample_core_point(const WeightVector& alpha,
                                           const IndexSet& S,
                                           std::mt19937_64& rng) {
  const int n = alpha.n();
  if (!is_short(alpha, S) || S.card() < 2) throw SetNotShort(S.str());
  auto sidx = S.indices();
  auto cidx = S.complement().indices();

  // the straight legs (0,0,R_i), R_i = sqrt(alpha_i^2 + |u_i|^2), must sum to
  // a length the off-S chain can reach: pick the midpoint of the feasible
  // window and realize it with an opposite pair of planar u-vectors
  double s_sum = 0.0, c_sum = 0.0, c_max = 0.0;
  for (int i : sidx) s_sum += to_double(alpha.at1(i));
  for (int j : cidx) {
    double aj = to_double(alpha.at1(j));
    c_sum += aj;
    c_max = std::max(c_max, aj);
  }
  // reachable straight-leg totals: (lo, c_sum) with lo accounting for a
  // dominant off-S edge; |S^c| = 1 forces the total to that single length
  double lo = std::max(2.0 * c_max - c_sum, s_sum);
  double target = (cidx.size() == 1) ? c_sum : (lo + c_sum) / 2.0;

  std::vector<double> R(sidx.size());
  for (std::size_t k = 0; k < sidx.size(); ++k)
    R[k] = to_double(alpha.at1(sidx[k]));
  double a1 = R[0], a2 = R[1];
  // solve sqrt(a1^2+s^2) + sqrt(a2^2+s^2) = target - sum_{k>=3} alpha by
  // bisection; the left side grows from a1+a2 to infinity
  double tail_sum = 0.0;
  for (std::size_t k = 2; k < sidx.size(); ++k) tail_sum += R[k];
  double want = target - tail_sum;
  double hi_s = 1.0;
  auto pair_len = [&](double s) {
    return std::sqrt(a1 * a1 + s * s) + std::sqrt(a2 * a2 + s * s);
  };
  while (pair_len(hi_s) < want) hi_s *= 2.0;
  double lo_s = 0.0;
  for (int it = 0; it < 200; ++it) {
    double mid = (lo_s + hi_s) / 2.0;
    (pair_len(mid) < want ? lo_s : hi_s) = mid;
  }
  double s_val = (lo_s + hi_s) / 2.0;
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  double theta = angle(rng);
  std::vector<std::array<double, 2>> u(sidx.size(), {0.0, 0.0});
  u[0] = {s_val * std::cos(theta), s_val * std::sin(theta)};
  u[1] = {-u[0][0], -u[0][1]};
  for (std::size_t k = 0; k < sidx.size(); ++k) {
    double ai = to_double(alpha.at1(sidx[k]));
    R[k] = std::sqrt(ai * ai + u[k][0] * u[k][0] + u[k][1] * u[k][1]);
  }
  // close with the off-S legs plus one virtual leg of length `target`
  std::vector<Vec3> legs;
  if (cidx.size() == 1) {
    legs.push_back({0.0, 0.0, -target});
  } else {
    std::vector<double> lengths;
    for (int j : cidx) lengths.push_back(to_double(alpha.at1(j)));
    lengths.push_back(target);
    auto closed = random_closed_polygon(lengths, rng);
    Vec3 virt = closed.back();
    Vec3 up{0, 0, target};
    for (std::size_t k = 0; k + 1 < closed.size(); ++k)
      legs.push_back(rotate_onto(virt, up, closed[k]));
  }

  HyperpolygonPoint pt;
  pt.p.resize(static_cast<std::size_t>(n));
  pt.q.resize(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < sidx.size(); ++k) {
    double ai = to_double(alpha.at1(sidx[k]));
    double c = std::sqrt(ai + R[k]);
    std::size_t at = static_cast<std::size_t>(sidx[k] - 1);
    pt.q[at] = {Cx{c}, Cx{0}};
    pt.p[at] = {Cx{0}, Cx{u[k][0], u[k][1]} / c};
  }
  for (std::size_t k = 0; k < cidx.size(); ++k) {
    std::size_t at = static_cast<std::size_t>(cidx[k] - 1);
    pt.q[at] = hopf_lift(legs[k]);
    pt.p[at] = {Cx{0}, Cx{0}};
  }
  return pt;
}

}  // namespace hypoly
