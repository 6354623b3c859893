#include "rpsforge/construct.hpp"
#include "rpsforge/equilibrium.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace rps {
namespace {

struct TableRow {
  unsigned m;
  double r, p, s;
};

// Symmetric equilibria of the imbalanced (m,3) game, three decimals.
constexpr TableRow kReference[] = {
    {3, 0.324, 0.473, 0.202}, {5, 0.288, 0.622, 0.090}, {10, 0.212, 0.760, 0.027},
    {15, 0.169, 0.818, 0.013}, {20, 0.142, 0.850, 0.008},
};

TEST(SymmetricSolver, ReproducesReferenceValues) {
  for (const auto& row : kReference) {
    const auto eq = solve_symmetric_rps3(row.m);
    EXPECT_NEAR(eq.r, row.r, 1e-3) << "m=" << row.m;
    EXPECT_NEAR(eq.p, row.p, 1e-3) << "m=" << row.m;
    EXPECT_NEAR(eq.s, row.s, 1e-3) << "m=" << row.m;
    EXPECT_LE(std::abs(eq.residual_rp), 1e-12);
    EXPECT_LE(std::abs(eq.residual_ps), 1e-12);
  }
}

TEST(SymmetricSolver, TwoPlayersIsUniform) {
  const auto eq = solve_symmetric_rps3(2);
  EXPECT_NEAR(eq.r, 1.0 / 3, 1e-12);
  EXPECT_NEAR(eq.p, 1.0 / 3, 1e-12);
  EXPECT_NEAR(eq.s, 1.0 / 3, 1e-12);
}

TEST(SymmetricSolver, SolutionsAreEquilibria) {
  for (unsigned m = 2; m <= 25; ++m) {
    const auto eq = solve_symmetric_rps3(m);
    const auto gap = nash_gap(imbalanced_rps3(m), MixedProfile::symmetric(m, {eq.r, eq.p, eq.s}));
    EXPECT_LE(gap.gap, 1e-9) << "m=" << m;
  }
  EXPECT_THROW(solve_symmetric_rps3(1), DomainError);
}

TEST(PayoffTable, UniformProfileGivesUniformPayoffs) {
  for (unsigned m = 2; m <= 5; ++m) {
    for (const auto& [name, g] : test::families(m, 5)) {
      const std::size_t n = g.object_count();
      const auto profile = MixedProfile::symmetric(m, std::vector<double>(n, 1.0 / static_cast<double>(n)));
      const auto exact = uniform_expected_payoffs(g);
      const auto approx = PayoffTable(g).expected_payoffs(profile, 0);
      for (std::size_t o = 0; o < n; ++o) EXPECT_NEAR(approx[o], to_double(exact[o]), 1e-12) << name;
    }
  }
}

TEST(PayoffTable, AsymmetricProfileMatchesOrderedEnumeration) {
  const auto g = imbalanced_rps(3, 2);
  const auto profile = MixedProfile::from_strategies({{0.1, 0.2, 0.3, 0.2, 0.2},
                                                      {0.5, 0.1, 0.1, 0.1, 0.2},
                                                      {0.2, 0.2, 0.2, 0.2, 0.2}});
  std::vector<double> oracle(5, 0.0);
  test::for_each_ordered(5, 3, [&](const std::vector<ObjectId>& c) {
    const double p = profile.strategy(1)[c[1].index] * profile.strategy(2)[c[2].index];
    oracle[c[0].index] += p * to_double(payoff_vector(g, c)[0]);
  });
  const auto got = PayoffTable(g).expected_payoffs(profile, 0);
  for (std::size_t o = 0; o < 5; ++o) EXPECT_NEAR(got[o], oracle[o], 1e-14);
}

TEST(NashGap, PureProfileIsNotAnEquilibrium) {
  const auto g = imbalanced_rps3(3);
  const auto report = nash_gap(g, MixedProfile::symmetric(3, {0, 1, 0}));
  EXPECT_NEAR(report.gap, 2.0, 1e-12);  // deviating to S wins alone: payoff 2 instead of 0
  EXPECT_FALSE(report.is_epsilon_nash(1e-8));
}

TEST(MixedProfile, Validation) {
  EXPECT_THROW(MixedProfile::symmetric(3, {0.5, 0.6, -0.1}), DomainError);
  EXPECT_THROW(MixedProfile::symmetric(3, {0.5, 0.6}), DomainError);
  EXPECT_THROW(MixedProfile::from_strategies({{1.0}, {0.5, 0.5}}), DomainError);
  EXPECT_THROW(MixedProfile::symmetric(2, {1.0, 0.0}).check_against(imbalanced_rps3(2)), DomainError);
  EXPECT_TRUE(MixedProfile::from_strategies({{1, 0}, {1, 0}}).is_symmetric());
}

// Oracle: sum over ordered choices for small m, multiset weights for larger.
double winners_oracle(const GameRule& g, const std::vector<double>& x) {
  double total = 0;
  for_each_multiset(g.object_count(), g.players(), [&](const std::vector<unsigned>& c) {
    double p = to_double(Rational(multinomial(c)));
    for (std::size_t a = 0; a < c.size(); ++a) p *= std::pow(x[a], c[a]);
    const auto o = eval_outcome(g, ChoiceMultiset(c));
    total += p * (o.is_tie() ? g.players() : c[o.winner->index]);
  });
  return total;
}

TEST(ExpectedWinners, TwentyPlayersTieOften) {
  const auto eq = solve_symmetric_rps3(20);
  const auto g = imbalanced_rps3(20);
  const std::vector<double> x{eq.r, eq.p, eq.s};
  const double w = expected_winner_count(g, x);
  // Just under 15 at the exact equilibrium; the three-decimal profile lands just over.
  EXPECT_NEAR(w, 14.98357, 1e-5);
  EXPECT_NEAR(w, winners_oracle(g, x), 1e-12);
  const std::vector<double> rounded{0.142, 0.850, 0.008};
  EXPECT_GT(expected_winner_count(g, rounded), 15.0);
  EXPECT_NEAR(expected_winner_count(g, rounded), winners_oracle(g, rounded), 1e-12);
  EXPECT_EQ(enumerate_multisets(3, 20).size(), 231u);
}

TEST(ExpectedWinners, SmallGamesMatchOrderedEnumeration) {
  const auto g = imbalanced_rps3(4);
  const std::vector<double> x{0.2, 0.5, 0.3};
  double oracle = 0;
  test::for_each_ordered(3, 4, [&](const std::vector<ObjectId>& c) {
    double p = 1;
    for (const auto& o : c) p *= x[o.index];
    const auto out = eval_outcome(g, ChoiceMultiset::from_choices(3, c));
    oracle += p * out.winner_count;
  });
  EXPECT_NEAR(expected_winner_count(g, x), oracle, 1e-14);
}

TEST(Search, IsDeterministicPerSeed) {
  const auto g = imbalanced_rps3(3);
  SearchConfig config;
  config.seed = 7;
  config.starts = 40;
  const auto a = search_equilibria(g, config);
  const auto b = search_equilibria(g, config);
  ASSERT_EQ(a.equilibria.size(), b.equilibria.size());
  for (std::size_t i = 0; i < a.equilibria.size(); ++i) {
    EXPECT_EQ(a.equilibria[i].profile.strategies(), b.equilibria[i].profile.strategies());
  }
}

TEST(Search, FindsTheSymmetricEquilibrium) {
  const auto g = imbalanced_rps3(3);
  SearchConfig config;
  config.seed = 1;
  const auto found = search_equilibria(g, config);
  ASSERT_FALSE(found.inconclusive());
  const auto eq = solve_symmetric_rps3(3);
  bool matched = false;
  for (const auto& f : found.equilibria) {
    EXPECT_LE(f.report.gap, config.eps);
    if (f.profile.is_symmetric() && std::abs(f.profile.strategy(0)[0] - eq.r) < 1e-6) matched = true;
  }
  EXPECT_TRUE(matched);
}

TEST(Search, ThreePlayerGamesArePlayable) {
  for (unsigned k : {1u, 2u}) {
    const auto g = imbalanced_rps(3, k);
    SearchConfig config;
    config.seed = 2024;
    const auto found = search_equilibria(g, config);
    ASSERT_FALSE(found.inconclusive());
    const auto report = classify_playability(g, found.equilibria, 1);
    EXPECT_TRUE(report.strongly_no_counterexample) << "k=" << k;
    EXPECT_FALSE(report.exhaustive);
    if (k == 1) {
      for (const auto& f : found.equilibria) EXPECT_GE(players_supporting(f.profile, ObjectId{2}), 2u);
    }
  }
}

TEST(Search, RejectsLargeGames) {
  EXPECT_THROW(search_equilibria(imbalanced_rps3(5), SearchConfig{}), DomainError);
  EXPECT_THROW(search_equilibria(imbalanced_rps(3, 3), SearchConfig{}), DomainError);
}

TEST(Playability, CountsSupports) {
  const auto g = imbalanced_rps3(3);
  const auto profile = MixedProfile::from_strategies({{1, 0, 0}, {0, 1, 0}, {0.5, 0, 0.5}});
  const FoundEquilibrium fake{profile, nash_gap(g, profile), "test"};
  const std::vector<FoundEquilibrium> list{fake};
  const auto report = classify_playability(g, list, 2);
  EXPECT_TRUE(report.playable);
  EXPECT_FALSE(report.k_playable);
  EXPECT_EQ(players_supporting(profile, ObjectId{0}), 2u);

  const auto empty = classify_playability(g, {}, 1);
  EXPECT_FALSE(empty.playable);
  EXPECT_FALSE(empty.weakly_playable);
  EXPECT_FALSE(empty.strongly_no_counterexample);
}

}  // namespace
}  // namespace rps
