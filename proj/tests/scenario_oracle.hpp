#pragma once

#include "rpsforge/construct.hpp"
#include "rpsforge/verifier.hpp"

#include <vector>

namespace rps::test {

/// Expected payoff of the focal role, by enumerating every joint choice of
/// the randomizing players and scoring it with the imbalanced (m,3) rules.
inline Rational brute_force_role(Role role, unsigned k, unsigned t, const std::vector<Rational>& r_vec,
                                 const Rational& s) {
  const unsigned m = k + t + 1;
  const auto game = imbalanced_rps3(m);
  constexpr std::size_t R = 0, P = 1, S = 2;
  const std::string name = to_string(role);
  const char cls = name[0];
  const std::size_t focal_choice = name[2] == 'R' ? R : (name[2] == 'P' ? P : S);

  // Randomizing opponents: (probability of the first option, first, second).
  struct Coin {
    Rational p;
    std::size_t first, second;
  };
  std::vector<Coin> coins;
  std::vector<unsigned> fixed(3, 0);
  for (unsigned i = 0; i < k; ++i) {
    if (cls == 'i' && i == 0) continue;
    coins.push_back({r_vec[i], R, P});
  }
  if (cls != 's') coins.push_back({s, S, P});
  fixed[P] = cls == 'p' ? t - 1 : t;

  Rational total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << coins.size()); ++mask) {
    auto counts = fixed;
    Rational prob = 1;
    for (std::size_t j = 0; j < coins.size(); ++j) {
      const bool first = mask >> j & 1u;
      prob *= first ? coins[j].p : 1 - coins[j].p;
      ++counts[first ? coins[j].first : coins[j].second];
    }
    if (prob == 0) continue;
    total += prob * payoff_against(game, ObjectId{focal_choice}, ChoiceMultiset(counts));
  }
  return total;
}

}  // namespace rps::test
