#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace hypoly;
using hypoly::testing::random_generic_alpha;

namespace {

std::vector<double> lengths_of(const WeightVector& a) {
  std::vector<double> out;
  for (int i = 0; i < a.n(); ++i) out.push_back(to_double(a[i]));
  return out;
}

std::vector<Rat> beta2_of(const WeightVector& a) {
  std::vector<Rat> out;
  for (int i = 0; i < a.n(); ++i) out.push_back(a[i].base());
  return out;
}

double residue_invariants(const PHBPoint& phb) {
  double inv = 0.0;
  ResidueMatrix sum;
  for (int i = 0; i < phb.n(); ++i) {
    const auto& N = phb.residues[static_cast<std::size_t>(i)];
    sum = sum + N;
    inv = std::max({inv, std::abs(N.trace()), std::abs(N.det()),
                    N.apply_norm(phb.flags[static_cast<std::size_t>(i)])});
  }
  return std::max(inv, sum.norm());
}

double roundtrip_error(const PHBPoint& phb) {
  HyperpolygonPoint back = from_phb(phb);
  double rt = 0.0;
  for (int i = 0; i < back.n(); ++i) {
    auto nf = normalize_flag(back.q[static_cast<std::size_t>(i)]);
    auto nr = residue_of(back.p[static_cast<std::size_t>(i)],
                         back.q[static_cast<std::size_t>(i)]);
    const auto& N = phb.residues[static_cast<std::size_t>(i)];
    rt = std::max({rt, std::abs(nf[0] - phb.flags[static_cast<std::size_t>(i)][0]),
                   std::abs(nf[1] - phb.flags[static_cast<std::size_t>(i)][1]),
                   (nr + ResidueMatrix{-N.r11, -N.r12, -N.r21, -N.r22}).norm()});
  }
  return rt;
}

}  // namespace

TEST_CASE("Hopf lift poles") {
  auto north = hopf_lift({0, 0, 2.0});
  REQUIRE(std::abs(north[0] - Cx{2.0}) < 1e-12);
  REQUIRE(std::abs(north[1]) < 1e-12);
  auto south = hopf_lift({0, 0, -2.0});
  REQUIRE(std::abs(south[0]) < 1e-12);
  REQUIRE(std::abs(south[1] - Cx{2.0}) < 1e-12);
}

TEST_CASE("Hopf lift inverts the vector map with |q|^2 = 2|v|") {
  std::mt19937_64 rng(50);
  std::uniform_real_distribution<double> unif(-2.0, 2.0);
  for (int trial = 0; trial < 100; ++trial) {
    Vec3 v{unif(rng), unif(rng), unif(rng)};
    if (vnorm(v) < 0.1) continue;
    auto q = hopf_lift(v);
    Vec3 w = hopf_vector(q);
    REQUIRE(vnorm({w[0] - v[0], w[1] - v[1], w[2] - v[2]}) < 1e-12);
    REQUIRE(std::abs(std::norm(q[0]) + std::norm(q[1]) - 2.0 * vnorm(v)) < 1e-12);
  }
}

TEST_CASE("polygon lifts satisfy the moment equations and are stable") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 4 + trial % 3;
    WeightVector a = random_generic_alpha(n, rng);
    if (!polygon_nonempty(a)) continue;
    auto vecs = random_closed_polygon(lengths_of(a), rng);
    auto pt = lift_polygon(vecs);
    auto [re, cx] = moment_residuals(pt, a);
    REQUIRE(re < 1e-9);
    REQUIRE(cx < 1e-9);
    REQUIRE(alpha_stable(pt, a).stable);
  }
}

TEST_CASE("scaling q by a phase leaves the moment residuals unchanged") {
  std::mt19937_64 rng(52);
  WeightVector a = WeightVector::parse("1,1,3,3,3");
  auto pt = lift_polygon(random_closed_polygon(lengths_of(a), rng));
  auto [re0, cx0] = moment_residuals(pt, a);
  Cx phase = std::polar(1.0, 0.7345);
  for (auto& q : pt.q) {
    q[0] *= phase;
    q[1] *= phase;
  }
  auto [re1, cx1] = moment_residuals(pt, a);
  REQUIRE(std::abs(re1 - re0) < 1e-12);
  // the complex equations pick up the phase but keep magnitude zero
  REQUIRE(cx1 < 1e-12);
}

TEST_CASE("random points violate the moment equations") {
  HyperpolygonPoint pt;
  pt.p = {{Cx{1}, Cx{2}}, {Cx{0.5}, Cx{-1}}, {Cx{0.3}, Cx{0.4}}, {Cx{1}, Cx{1}}};
  pt.q = {{Cx{1}, Cx{0}}, {Cx{0}, Cx{1}}, {Cx{1}, Cx{1}}, {Cx{1}, Cx{-1}}};
  auto [re, cx] = moment_residuals(pt, WeightVector::parse("1,1,1,2"));
  REQUIRE(re > 1e-3);
  REQUIRE(cx > 1e-3);
}

TEST_CASE("straight-set partition") {
  HyperpolygonPoint pt;
  pt.q = {{Cx{1}, Cx{0}}, {Cx{2}, Cx{0}}, {Cx{0}, Cx{1}}, {Cx{1}, Cx{1}}};
  pt.p.assign(4, {Cx{0}, Cx{0}});
  auto classes = straight_sets(pt);
  REQUIRE(classes.size() == 3);
  REQUIRE(classes[0] == IndexSet::from_indices({1, 2}, 4));
  // all equal
  pt.q.assign(4, {Cx{1}, Cx{2}});
  REQUIRE(straight_sets(pt).size() == 1);
  // zero generator rejected
  pt.q[0] = {Cx{0}, Cx{0}};
  REQUIRE_THROWS_AS(straight_sets(pt), ZeroQ);
}

TEST_CASE("all q proportional with p = 0 is unstable") {
  WeightVector a = WeightVector::parse("1,1,1,2");
  HyperpolygonPoint pt;
  pt.q.assign(4, {Cx{1}, Cx{0}});
  pt.p.assign(4, {Cx{0}, Cx{0}});
  auto rep = alpha_stable(pt, a);
  REQUIRE_FALSE(rep.stable);
  REQUIRE_FALSE(rep.witnesses.empty());
  REQUIRE(rep.witnesses.front().first == IndexSet::full(4));
}

TEST_CASE("to_phb produces well-formed residues; p = 0 gives zero residues") {
  std::mt19937_64 rng(53);
  WeightVector a = WeightVector::parse("1/8,1/8,3/8,3/8,3/8");
  auto pt = lift_polygon(random_closed_polygon(lengths_of(a), rng));
  std::vector<Rat> b1(5, Rat(0));
  auto phb = to_phb(pt, b1, beta2_of(a));
  REQUIRE(residue_invariants(phb) < 1e-9);
  for (const auto& N : phb.residues) REQUIRE(N.norm() < 1e-12);
}

TEST_CASE("to_phb rejects unstable or non-solution points") {
  WeightVector a = WeightVector::parse("1/8,1/8,1/8,2/8");
  std::vector<Rat> b1(4, Rat(0));
  HyperpolygonPoint bad;
  bad.q.assign(4, {Cx{1}, Cx{0}});
  bad.p.assign(4, {Cx{0}, Cx{0}});
  REQUIRE_THROWS_AS(to_phb(bad, b1, beta2_of(a)), MomentViolation);
}

TEST_CASE("from_phb round trip is exact at fixed normalization") {
  std::mt19937_64 rng(54);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 4 + trial % 3;
    WeightVector raw = random_generic_alpha(n, rng);
    // scale into (0,1) so the entries are valid parabolic weights
    std::vector<Eps> scaled;
    for (int i = 0; i < n; ++i) scaled.push_back(raw[i] * Rat(1, 13 * n));
    WeightVector a(std::move(scaled));
    if (!polygon_nonempty(a)) continue;
    auto pt = lift_polygon(random_closed_polygon(lengths_of(a), rng));
    std::vector<Rat> b1(static_cast<std::size_t>(n), Rat(0));
    auto phb = to_phb(pt, b1, beta2_of(a));
    REQUIRE(roundtrip_error(phb) == 0.0);
    REQUIRE(phb_stable(phb).stable == alpha_stable(pt, a).stable);
  }
}

TEST_CASE("rescaling a flag generator rescales p inversely") {
  PHBPoint phb;
  phb.beta1 = {Rat(0), Rat(0), Rat(0)};
  phb.beta2 = {Rat(1, 4), Rat(1, 4), Rat(1, 4)};
  phb.flags = {{Cx{1}, Cx{2}}, {Cx{1}, Cx{-1}}, {Cx{0}, Cx{1}}};
  phb.residues.assign(3, ResidueMatrix{});
  // nonzero nilpotent residue preserving the first flag: N = x (q p)_0 with
  // p chosen so p.q = 0: q = (1,2), p = (2,-1)
  phb.residues[0] = residue_of({Cx{2}, Cx{-1}}, {Cx{1}, Cx{2}});
  auto pt = from_phb(phb);
  PHBPoint scaled = phb;
  Cx lambda{3.0, 1.0};
  scaled.flags[0] = {lambda * phb.flags[0][0], lambda * phb.flags[0][1]};
  auto pt2 = from_phb(scaled);
  REQUIRE(std::abs(pt2.p[0][0] - pt.p[0][0] / lambda) < 1e-12);
  REQUIRE(std::abs(pt2.p[0][1] - pt.p[0][1] / lambda) < 1e-12);
}

TEST_CASE("from_phb rejects malformed residues") {
  PHBPoint phb;
  phb.beta1 = {Rat(0), Rat(0), Rat(0)};
  phb.beta2 = {Rat(1, 4), Rat(1, 4), Rat(1, 4)};
  phb.flags = {{Cx{1}, Cx{0}}, {Cx{1}, Cx{1}}, {Cx{0}, Cx{1}}};
  phb.residues.assign(3, ResidueMatrix{});
  phb.residues[1] = {Cx{1}, Cx{0}, Cx{0}, Cx{-1}};  // trace-free but not nilpotent
  REQUIRE_THROWS_AS(from_phb(phb), MalformedResidue);
}

TEST_CASE("gauge conjugation acts on the residues") {
  std::mt19937_64 rng(55);
  WeightVector a = WeightVector::parse("1/8,1/8,3/8,3/8,3/8");
  IndexSet S = IndexSet::from_indices({1, 2}, 5);
  auto pt = sample_core_point(a, S, rng);
  double theta = 0.4217;
  Cx u = std::polar(1.0, theta);
  HyperpolygonPoint gpt = pt;
  for (int i = 0; i < pt.n(); ++i) {
    // diag(u, conj u) on q; p transforms by the inverse on the right
    gpt.q[static_cast<std::size_t>(i)] = {u * pt.q[static_cast<std::size_t>(i)][0],
                                          std::conj(u) * pt.q[static_cast<std::size_t>(i)][1]};
    gpt.p[static_cast<std::size_t>(i)] = {std::conj(u) * pt.p[static_cast<std::size_t>(i)][0],
                                          u * pt.p[static_cast<std::size_t>(i)][1]};
  }
  auto [re, cx] = moment_residuals(gpt, a);
  REQUIRE(re < 1e-9);
  REQUIRE(cx < 1e-9);
  for (int i = 0; i < pt.n(); ++i) {
    ResidueMatrix N = residue_of(pt.p[static_cast<std::size_t>(i)],
                                 pt.q[static_cast<std::size_t>(i)]);
    ResidueMatrix G = residue_of(gpt.p[static_cast<std::size_t>(i)],
                                 gpt.q[static_cast<std::size_t>(i)]);
    // conjugation by diag(u, conj u): off-diagonal entries rotate by u^{+-2}
    REQUIRE(std::abs(G.r11 - N.r11) < 1e-12);
    REQUIRE(std::abs(G.r12 - u * u * N.r12) < 1e-12);
    REQUIRE(std::abs(G.r21 - std::conj(u) * std::conj(u) * N.r21) < 1e-12);
  }
}

TEST_CASE("core-component samples are moment solutions, stable, straight on S") {
  std::mt19937_64 rng(56);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 4 + trial % 3;
    WeightVector a = random_generic_alpha(n, rng);
    auto shorts = short_sets(a, 2);
    if (shorts.empty()) continue;
    const IndexSet& S = shorts[trial % shorts.size()];
    auto pt = sample_core_point(a, S, rng);
    auto [re, cx] = moment_residuals(pt, a);
    INFO("alpha=" << a.str() << " S=" << S.str());
    REQUIRE(re < 1e-8);
    REQUIRE(cx < 1e-8);
    REQUIRE(alpha_stable(pt, a).stable);
    // S is contained in a straight set of the sample
    bool found = false;
    for (const auto& T : straight_sets(pt, 1e-7))
      if (S.subset_of(T)) found = true;
    REQUIRE(found);
  }
}

TEST_CASE("lift rejects non-closed polygons") {
  REQUIRE_THROWS_AS(lift_polygon({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), NotClosed);
  std::mt19937_64 rng(1);
  REQUIRE_THROWS_AS(random_closed_polygon({10.0, 1.0, 1.0}, rng), NotClosed);
}
