#include "rpsforge/construct.hpp"
#include "rpsforge/game.hpp"
#include "rpsforge/game_io.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <set>

namespace rps {
namespace {

TEST(TiePayoff, SplitsThePot) {
  EXPECT_EQ(tie_payoff(5, 1), Rational(4));
  EXPECT_EQ(tie_payoff(5, 2), Rational(3, 2));
  EXPECT_EQ(tie_payoff(5, 5), Rational(0));
  EXPECT_THROW(tie_payoff(5, 0), DomainError);
  EXPECT_THROW(tie_payoff(5, 6), DomainError);
}

TEST(Multisets, CountsAndOrder) {
  std::vector<std::vector<unsigned>> seen;
  for_each_multiset(3, 2, [&](const std::vector<unsigned>& c) { seen.push_back(c); });
  ASSERT_EQ(seen.size(), 6u);
  EXPECT_EQ(seen.front(), (std::vector<unsigned>{2, 0, 0}));
  EXPECT_EQ(seen.back(), (std::vector<unsigned>{0, 0, 2}));
  EXPECT_EQ(std::set(seen.begin(), seen.end()).size(), seen.size());

  EXPECT_EQ(enumerate_multisets(3, 19).size(), 210u);
  EXPECT_EQ(enumerate_multisets(4, 0).size(), 1u);
  EXPECT_THROW(enumerate_multisets(0, 2), DomainError);
}

TEST(Multisets, WeightsSumToOrderedCount) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (unsigned size = 0; size <= 7; ++size) {
      BigInt total = 0;
      for (const auto& w : enumerate_multisets(n, size)) total += w.weight;
      EXPECT_EQ(total, power(BigInt(static_cast<unsigned long>(n)), size)) << "n=" << n << " size=" << size;
    }
  }
}

TEST(Outcome, MonosetsTie) {
  const auto g = imbalanced_rps3(4);
  const auto o = eval_outcome(g, ChoiceMultiset({0, 4, 0}));
  EXPECT_TRUE(o.is_tie());
  EXPECT_EQ(o.winner_count, 4u);
  EXPECT_THROW(eval_outcome(g, ChoiceMultiset({1, 1})), DomainError);
  EXPECT_THROW(eval_outcome(g, ChoiceMultiset({3, 1, 1})), DomainError);
}

TEST(Outcome, WinnerIsAlwaysChosen) {
  for (unsigned m = 2; m <= 6; ++m) {
    for (const auto& [name, g] : test::families(m, 7)) {
      for (unsigned size = 1; size <= m; ++size) {
        for_each_multiset(g.object_count(), size, [&](const std::vector<unsigned>& c) {
          const auto o = eval_outcome(g, ChoiceMultiset(c));
          if (!o.is_tie()) {
            ASSERT_GT(c[o.winner->index], 0u) << name << " m=" << m;
            ASSERT_EQ(o.winner_count, c[o.winner->index]);
          }
        });
      }
    }
  }
}

TEST(Outcome, ImbalancedRules) {
  const auto g = imbalanced_rps3(5);
  const auto R = ObjectId{0}, P = ObjectId{1}, S = ObjectId{2};
  EXPECT_EQ(eval_outcome(g, ChoiceMultiset({1, 3, 1})).winner, R);
  EXPECT_EQ(eval_outcome(g, ChoiceMultiset({4, 1, 0})).winner, P);
  EXPECT_EQ(eval_outcome(g, ChoiceMultiset({0, 4, 1})).winner, S);

  const auto mx = maximal_rps3(5);
  for_each_multiset(3, 5, [&](const std::vector<unsigned>& c) {
    if (c[0] > 0 && c[0] < 5) EXPECT_EQ(eval_outcome(mx, ChoiceMultiset(c)).winner, R);
  });

  const auto odd = odd_one_out(4);
  EXPECT_EQ(eval_outcome(odd, ChoiceMultiset({1, 3})).winner, ObjectId{0});
  EXPECT_TRUE(eval_outcome(odd, ChoiceMultiset({2, 2})).is_tie());
}

TEST(Payoffs, ZeroSum) {
  for (unsigned m = 2; m <= 5; ++m) {
    for (const auto& [name, g] : test::families(m, 5)) {
      test::for_each_ordered(g.object_count(), m, [&](const std::vector<ObjectId>& choice) {
        const auto v = payoff_vector(g, choice);
        ASSERT_EQ(std::accumulate(v.begin(), v.end(), Rational(0)), 0) << name;
      });
    }
  }
}

TEST(Payoffs, PayoffAgainstMatchesVector) {
  const auto g = imbalanced_rps(4, 2);
  test::for_each_ordered(g.object_count(), 4, [&](const std::vector<ObjectId>& choice) {
    const auto v = payoff_vector(g, choice);
    std::vector<ObjectId> others(choice.begin() + 1, choice.end());
    EXPECT_EQ(payoff_against(g, choice[0], ChoiceMultiset::from_choices(g.object_count(), others)), v[0]);
  });
}

// Oracle: average payoff of a fixed first player over all ordered opponent
// choices.
std::vector<Rational> ordered_uniform_payoffs(const GameRule& g) {
  const std::size_t n = g.object_count();
  std::vector<Rational> total(n, Rational(0));
  test::for_each_ordered(n, g.players(), [&](const std::vector<ObjectId>& choice) {
    total[choice[0].index] += payoff_vector(g, choice)[0];
  });
  const Rational opponents(power(BigInt(static_cast<unsigned long>(n)), g.players() - 1));
  for (auto& t : total) t /= opponents;
  return total;
}

TEST(UniformPayoffs, MatchOrderedEnumeration) {
  for (unsigned m = 2; m <= 5; ++m) {
    for (const auto& [name, g] : test::families(m, 5)) {
      EXPECT_EQ(uniform_expected_payoffs(g), ordered_uniform_payoffs(g)) << name << " m=" << m;
    }
  }
}

TEST(UniformPayoffs, SumToZero) {
  for (unsigned m = 2; m <= 9; ++m) {
    for (const auto& [name, g] : test::families(m, 7)) {
      const auto f = uniform_expected_payoffs(g);
      EXPECT_EQ(std::accumulate(f.begin(), f.end(), Rational(0)), 0) << name << " m=" << m;
    }
  }
}

TEST(UniformPayoffs, ImbalancedThreePlayers) {
  EXPECT_EQ(uniform_expected_payoffs(imbalanced_rps3(3)),
            (std::vector<Rational>{Rational(4, 9), Rational(-2, 9), Rational(-2, 9)}));
}

TEST(GameRule, Validation) {
  EXPECT_THROW(GameRule(2, {"a", "a"}, [](const ChoiceMultiset&) { return std::optional<ObjectId>{}; }), DomainError);
  EXPECT_THROW(GameRule(2, {}, [](const ChoiceMultiset&) { return std::optional<ObjectId>{}; }), DomainError);
  EXPECT_THROW(GameRule(0, {"a"}, [](const ChoiceMultiset&) { return std::optional<ObjectId>{}; }), DomainError);
  EXPECT_THROW(GameRule(2, {"a"}, WinnerFn{}), DomainError);
}

TEST(GameRule, FromTable) {
  WinnerTable t;
  t[{1, 1}] = ObjectId{0};
  const auto g = GameRule::from_table(2, {"a", "b"}, t);
  EXPECT_TRUE(g.fully_extended());
  EXPECT_TRUE(g.table_backed());
  EXPECT_TRUE(eval_outcome(g, ChoiceMultiset({2, 0})).is_tie());

  WinnerTable bad;
  bad[{0, 2}] = ObjectId{0};
  EXPECT_THROW(GameRule::from_table(2, {"a", "b"}, bad), DomainError);

  const auto partial = GameRule::from_table(3, {"a", "b"}, tabulate(odd_one_out(3)));
  EXPECT_FALSE(partial.fully_extended());
  EXPECT_THROW(eval_outcome(partial, ChoiceMultiset({1, 1})), DomainError);
}

TEST(GameRule, FindAndRelabel) {
  const auto g = imbalanced_rps3(3);
  EXPECT_EQ(g.find("P"), ObjectId{1});
  EXPECT_FALSE(g.find("Q"));
  const auto h = g.relabeled({"x", "y", "z"});
  EXPECT_EQ(h.label(ObjectId{2}), "z");
  EXPECT_THROW(g.relabeled({"x", "y"}), DomainError);
}

TEST(GameFile, RoundTrip) {
  for (unsigned m = 2; m <= 5; ++m) {
    for (const auto& [name, g] : test::families(m, 5)) {
      const auto text = format_game(g);
      const auto back = parse_game(text);
      EXPECT_EQ(tabulate(back), tabulate(g)) << name;
      EXPECT_EQ(back.labels(), g.labels());
      EXPECT_EQ(back.metadata().construction, g.metadata().construction);
      EXPECT_EQ(format_game(back), text);
      EXPECT_EQ(uniform_expected_payoffs(back), uniform_expected_payoffs(g));
    }
  }
}

TEST(GameFile, AllSizesIsFullyExtended) {
  const auto g = imbalanced_rps(3, 2);
  const auto back = parse_game(format_game(g, true));
  EXPECT_TRUE(back.fully_extended());
  EXPECT_EQ(tabulate(back, 2), tabulate(g, 2));
}

TEST(GameFile, ParseErrorsCarryLineNumbers) {
  const auto line_of = [](const std::string& text) {
    try {
      parse_game(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  EXPECT_EQ(line_of("bogus\n"), 1u);
  EXPECT_EQ(line_of("rps m=2 objects=a,b\ncounts=1,1 winner=c\n"), 2u);
  EXPECT_EQ(line_of("rps m=2 objects=a,b\n\ncounts=1 winner=a\n"), 3u);
  EXPECT_EQ(line_of("rps m=2 objects=a,b\ncounts=1,1 winner=a\ncounts=1,1 winner=b\n"), 3u);
  EXPECT_EQ(line_of("rps m=2 objects=a,b\ncounts=x,1 winner=a\n"), 2u);
  EXPECT_NE(line_of("rps m=3 objects=a,b\ncounts=2,1 winner=a\n"), 0u);  // missing {1,2}
  EXPECT_EQ(line_of("# only a comment\n"), 1u);
}

TEST(GameFile, IoErrors) {
  EXPECT_THROW(load_game("/nonexistent/dir/game.rps"), IoError);
  EXPECT_THROW(save_game(imbalanced_rps3(3), "/nonexistent/dir/game.rps"), IoError);
}

}  // namespace
}  // namespace rps
