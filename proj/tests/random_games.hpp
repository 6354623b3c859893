#pragma once

#include "rpsforge/game.hpp"

#include <random>

namespace rps::test {

/// Table-backed game whose winner on every non-monoset is drawn uniformly
/// from the objects present.
inline GameRule random_game(unsigned m, std::size_t n, std::mt19937_64& rng) {
  WinnerTable table;
  for_each_multiset(n, m, [&](const std::vector<unsigned>& c) {
    std::vector<std::size_t> present;
    for (std::size_t i = 0; i < n; ++i) {
      if (c[i] > 0) present.push_back(i);
    }
    if (present.size() < 2) return;
    table[c] = ObjectId{present[rng() % present.size()]};
  });
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("o" + std::to_string(i));
  return GameRule::from_table(m, labels, table);
}

}  // namespace rps::test
