#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace hypoly;
using hypoly::testing::random_generic_alpha;

namespace {
ParabolicWeights make_beta(const std::vector<Rat>& alpha) {
  // beta1 = 0, beta2 = alpha (callers keep alpha_i < 1)
  ParabolicWeights beta;
  beta.beta1.assign(alpha.size(), Rat(0));
  beta.beta2 = alpha;
  return beta;
}

ParabolicWeights random_beta_small_sum(int n, std::mt19937_64& rng) {
  // beta2 - beta1 < 1/2 per point, hence total alpha < 2 for n <= 4 and the
  // scaled version below for larger n
  std::uniform_int_distribution<int> num(1, 8);
  for (;;) {
    ParabolicWeights beta;
    for (int i = 0; i < n; ++i) {
      beta.beta1.push_back(Rat(0));
      beta.beta2.push_back(Rat(num(rng), 8 * std::max(1, n / 2)));
    }
    if (is_generic(beta.alpha())) return beta;
  }
}
}  // namespace

TEST_CASE("critical submanifolds for the n=4 example weights") {
  ParabolicWeights beta =
      make_beta({Rat(9, 10), Rat(1, 10), Rat(1, 10), Rat(1, 5)});
  auto comps = critical_submanifolds(0, 0, beta);
  REQUIRE(comps.size() == 5);
  int index0 = 0, index2 = 0;
  for (const auto& c : comps) {
    if (c.morse_index == 0) {
      ++index0;
      REQUIRE(c.S == IndexSet::from_indices({2, 3, 4}, 4));
      REQUIRE(c.description == "CP^1");
    } else {
      REQUIRE(c.morse_index == 2);
      ++index2;
    }
  }
  REQUIRE(index0 == 1);
  REQUIRE(index2 == 4);
}

TEST_CASE("g=0, d=0 enumeration matches the short-set structure of alpha") {
  std::mt19937_64 rng(40);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 4 + trial % 3;
    ParabolicWeights beta = random_beta_small_sum(n, rng);
    WeightVector alpha = beta.alpha();
    std::vector<IndexSet> d0_sets;
    for (const auto& c : critical_submanifolds(0, 0, beta))
      if (c.d0 == 0) d0_sets.push_back(c.S);
    auto shorts = short_sets(alpha, 2);
    REQUIRE(d0_sets.size() == shorts.size());
    for (const auto& S : shorts)
      REQUIRE(std::find(d0_sets.begin(), d0_sets.end(), S) != d0_sets.end());
  }
}

TEST_CASE("restricted enumeration keeps only the d0 = 0 components") {
  ParabolicWeights beta =
      make_beta({Rat(9, 10), Rat(1, 10), Rat(1, 10), Rat(1, 5)});
  auto restricted = critical_submanifolds_restricted(beta);
  REQUIRE(restricted.size() == 4);
  for (const auto& c : restricted) REQUIRE(c.d0 == 0);
}

TEST_CASE("morse index formula") {
  // index = 2(g-1+n) + 4 d0 - 2 d - 2|S|
  IndexSet S = IndexSet::from_indices({2, 3, 4}, 4);
  REQUIRE(morse_index_phb(0, 0, 0, S, 4) == 0);
  REQUIRE(morse_index_phb(0, 0, 1, IndexSet::full(4), 4) == 2);
  REQUIRE(morse_index_phb(1, 0, 0, S, 4) == 2);
}

TEST_CASE("index-0 components: at most one, present iff the polygon space is empty") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 4 + trial % 3;
    ParabolicWeights beta = random_beta_small_sum(n, rng);
    WeightVector alpha = beta.alpha();
    auto zero = zero_index_components(0, 0, beta);
    REQUIRE(zero.size() <= 1);
    INFO("alpha=" << alpha.str());
    REQUIRE((zero.size() == 1) == !polygon_nonempty(alpha));
  }
}

TEST_CASE("critical components for g = 1 have positive index") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 10; ++trial) {
    ParabolicWeights beta = random_beta_small_sum(4, rng);
    for (const auto& c : critical_submanifolds(1, 0, beta)) {
      REQUIRE(c.morse_index > 0);
      REQUIRE(c.description.find("Sym^") != std::string::npos);
    }
    REQUIRE(zero_index_components(1, 0, beta).empty());
  }
}

TEST_CASE("weights on a wall are rejected") {
  ParabolicWeights beta = make_beta({Rat(1, 4), Rat(1, 4), Rat(1, 4), Rat(1, 4)});
  REQUIRE_THROWS_AS(critical_submanifolds(0, 0, beta), NonGenericWeights);
}

TEST_CASE("vanishing walls exist only for matching parity") {
  auto walls = vanishing_walls(0, 0, 4);
  for (const auto& [d0, S] : walls) {
    // 2 d0 = d + 1 - n + |S| with d = 0, n = 4
    REQUIRE(2 * d0 == 1 - 4 + S.card());
  }
  REQUIRE_THROWS_AS(vanishing_walls(1, 0, 4), UnsupportedGenus);
}

TEST_CASE("parabolic weight validation") {
  ParabolicWeights bad;
  bad.beta1 = {Rat(1, 2), Rat(0), Rat(0)};
  bad.beta2 = {Rat(1, 4), Rat(1, 2), Rat(1, 2)};
  REQUIRE_THROWS_AS(bad.validate(), ParseError);
  ParabolicWeights bad2;
  bad2.beta1 = {Rat(0), Rat(0), Rat(0)};
  bad2.beta2 = {Rat(1, 2), Rat(1, 2), Rat(3, 2)};
  REQUIRE_THROWS_AS(bad2.validate(), ParseError);
}
