#pragma once

#include "rpsforge/construct.hpp"
#include "rpsforge/game.hpp"

#include <functional>
#include <string>
#include <vector>

namespace rps::test {

struct NamedGame {
  std::string name;
  GameRule rule;
};

/// Every constructed family with m players and at most max_objects objects.
inline std::vector<NamedGame> families(unsigned m, std::size_t max_objects) {
  std::vector<NamedGame> out;
  out.push_back({"imbalanced3", imbalanced_rps3(m)});
  out.push_back({"maximal3", maximal_rps3(m)});
  out.push_back({"odd-one-out", odd_one_out(m)});
  for (unsigned k = 1; 2 * k + 1 <= max_objects; ++k) {
    out.push_back({"imbalanced k=" + std::to_string(k), imbalanced_rps(m, k)});
    out.push_back({"blowup k=" + std::to_string(k), iterated_blowup(m, k)});
  }
  return out;
}

/// Calls visit on every ordered choice vector of length players over n objects.
inline void for_each_ordered(std::size_t n, unsigned players, const std::function<void(const std::vector<ObjectId>&)>& visit) {
  std::vector<ObjectId> choice(players, ObjectId{0});
  while (true) {
    visit(choice);
    std::size_t i = 0;
    while (i < players && ++choice[i].index == n) choice[i++].index = 0;
    if (i == players) return;
  }
}

}  // namespace rps::test
