#include "rpsforge/game.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace rps {

namespace {

std::string describe(const std::vector<unsigned>& counts) {
  std::ostringstream os;
  for (std::size_t i = 0; i < counts.size(); ++i) os << (i ? "," : "") << counts[i];
  return os.str();
}

}  // namespace

ChoiceMultiset::ChoiceMultiset(std::vector<unsigned> counts)
    : counts_(std::move(counts)), total_(std::accumulate(counts_.begin(), counts_.end(), 0u)) {}

ChoiceMultiset ChoiceMultiset::from_choices(std::size_t n, std::span<const ObjectId> choices) {
  std::vector<unsigned> counts(n, 0);
  for (const auto& c : choices) {
    if (c.index >= n) throw DomainError("object index " + std::to_string(c.index) + " out of range");
    ++counts[c.index];
  }
  return ChoiceMultiset(std::move(counts));
}

std::size_t ChoiceMultiset::support_size() const {
  return static_cast<std::size_t>(std::count_if(counts_.begin(), counts_.end(), [](unsigned c) { return c > 0; }));
}

void LevelMap::validate() const {
  if (depth == 0) throw DomainError("level map depth must be positive");
  if (level.size() != kind.size()) throw DomainError("level map arrays disagree in length");
  if (level.size() != 2 * std::size_t{depth} + 1) throw DomainError("level map must cover 2k+1 objects");
  std::vector<unsigned> r_count(depth + 1, 0), p_count(depth + 1, 0);
  unsigned leaves = 0;
  for (std::size_t i = 0; i < level.size(); ++i) {
    if (level[i] < 1 || level[i] > depth) throw DomainError("object level out of range");
    switch (kind[i]) {
      case ObjectKind::RType: ++r_count[level[i]]; break;
      case ObjectKind::PType: ++p_count[level[i]]; break;
      case ObjectKind::Leaf:
        if (level[i] != depth) throw DomainError("leaf object must sit at the deepest level");
        ++leaves;
        break;
    }
  }
  if (leaves != 1) throw DomainError("level map needs exactly one leaf object");
  for (unsigned l = 1; l <= depth; ++l) {
    if (r_count[l] != 1 || p_count[l] != 1) throw DomainError("each level needs one R and one P object");
  }
}

GameRule::GameRule(unsigned players, std::vector<std::string> labels, WinnerFn winner, RuleMetadata metadata)
    : players_(players), labels_(std::move(labels)), winner_(std::move(winner)), metadata_(std::move(metadata)) {
  if (players_ < 1) throw DomainError("a game needs at least one player");
  if (!winner_) throw DomainError("winner function is empty");
  validate_labels();
  if (metadata_.levels) {
    metadata_.levels->validate();
    if (metadata_.levels->level.size() != labels_.size()) throw DomainError("level map does not match objects");
  }
}

GameRule GameRule::from_table(unsigned players, std::vector<std::string> labels, WinnerTable table,
                              RuleMetadata metadata) {
  const std::size_t n = labels.size();
  for (const auto& [counts, winner] : table) {
    if (counts.size() != n) throw DomainError("table entry {" + describe(counts) + "} has the wrong arity");
    const unsigned total = std::accumulate(counts.begin(), counts.end(), 0u);
    if (total < 1 || total > players) throw DomainError("table entry {" + describe(counts) + "} has invalid size");
    if (winner && (winner->index >= n || counts[winner->index] == 0)) {
      throw DomainError("table entry {" + describe(counts) + "} names a winner that was not chosen");
    }
  }
  auto shared = std::make_shared<const WinnerTable>(std::move(table));
  WinnerFn fn = [shared](const ChoiceMultiset& c) -> std::optional<ObjectId> {
    if (auto it = shared->find(c.counts()); it != shared->end()) return it->second;
    if (c.support_size() <= 1) return std::nullopt;
    throw DomainError("no table entry for multiset {" + describe(c.counts()) + "}");
  };

  GameRule rule(players, std::move(labels), std::move(fn), std::move(metadata));
  rule.table_ = shared;

  // Fully extended iff every non-monoset of every size 1..players is present.
  bool full = true;
  for (unsigned size = 2; size <= players && full; ++size) {
    for_each_multiset(n, size, [&](const std::vector<unsigned>& counts) {
      if (!full) return;
      const auto support = std::count_if(counts.begin(), counts.end(), [](unsigned c) { return c > 0; });
      if (support > 1 && !shared->contains(counts)) full = false;
    });
  }
  rule.fully_extended_ = full;
  return rule;
}

std::optional<ObjectId> GameRule::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return ObjectId{i};
  }
  return std::nullopt;
}

GameRule GameRule::relabeled(std::vector<std::string> labels) const {
  if (labels.size() != labels_.size()) throw DomainError("relabel must keep the object count");
  GameRule copy = *this;
  copy.labels_ = std::move(labels);
  copy.validate_labels();
  return copy;
}

GameRule GameRule::with_metadata(RuleMetadata metadata) const {
  GameRule copy = *this;
  copy.metadata_ = std::move(metadata);
  if (copy.metadata_.levels) copy.metadata_.levels->validate();
  return copy;
}

void GameRule::validate_labels() const {
  if (labels_.empty()) throw DomainError("a game needs at least one object");
  std::set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw DomainError("object labels must be nonempty");
    if (!seen.insert(l).second) throw DomainError("duplicate object label '" + l + "'");
  }
}

Rational tie_payoff(unsigned players, unsigned winners) {
  if (winners == 0 || winners > players) {
    throw DomainError("winner count " + std::to_string(winners) + " outside 1.." + std::to_string(players));
  }
  Rational q(static_cast<long>(players - winners), static_cast<long>(winners));
  q.canonicalize();
  return q;
}

Outcome eval_outcome(const GameRule& rule, const ChoiceMultiset& choices) {
  if (choices.object_count() != rule.object_count()) {
    throw DomainError("multiset has " + std::to_string(choices.object_count()) + " objects, game has " +
                      std::to_string(rule.object_count()));
  }
  if (choices.total() < 1 || choices.total() > rule.players()) {
    throw DomainError("multiset size " + std::to_string(choices.total()) + " outside 1.." +
                      std::to_string(rule.players()));
  }
  if (choices.support_size() == 1) return Outcome{Outcome::Kind::AllTie, std::nullopt, choices.total()};

  const auto winner = rule.raw_winner(choices);
  if (!winner) return Outcome{Outcome::Kind::AllTie, std::nullopt, choices.total()};
  if (winner->index >= rule.object_count() || choices.count(*winner) == 0) {
    throw std::logic_error("winner map returned an object absent from {" + describe(choices.counts()) + "}");
  }
  return Outcome{Outcome::Kind::WinningObject, winner, choices.count(*winner)};
}

PayoffVector payoff_vector(const GameRule& rule, std::span<const ObjectId> ordered_choices) {
  if (ordered_choices.size() != rule.players()) {
    throw DomainError("expected " + std::to_string(rule.players()) + " choices, got " +
                      std::to_string(ordered_choices.size()));
  }
  const auto multiset = ChoiceMultiset::from_choices(rule.object_count(), ordered_choices);
  const Outcome outcome = eval_outcome(rule, multiset);
  const Rational win = tie_payoff(rule.players(), outcome.winner_count);
  PayoffVector out;
  out.reserve(ordered_choices.size());
  for (const auto& c : ordered_choices) {
    const bool won = outcome.is_tie() || c == *outcome.winner;
    out.push_back(won ? win : Rational(-1));
  }
  return out;
}

Rational payoff_against(const GameRule& rule, ObjectId choice, const ChoiceMultiset& opponents) {
  if (choice.index >= rule.object_count()) throw DomainError("unknown object index");
  auto counts = opponents.counts();
  ++counts.at(choice.index);
  const ChoiceMultiset full(std::move(counts));
  const Outcome outcome = eval_outcome(rule, full);
  if (outcome.is_tie() || *outcome.winner == choice) return tie_payoff(full.total(), outcome.winner_count);
  return Rational(-1);
}

void for_each_multiset(std::size_t n, unsigned size, const std::function<void(const std::vector<unsigned>&)>& visit) {
  if (n == 0) throw DomainError("object count must be positive");
  std::vector<unsigned> counts(n, 0);
  // Recursive composition generator: fill slot i with every value that
  // leaves a feasible remainder, last slot takes what is left.
  std::function<void(std::size_t, unsigned)> fill = [&](std::size_t i, unsigned remaining) {
    if (i + 1 == n) {
      counts[i] = remaining;
      visit(counts);
      return;
    }
    for (unsigned c = remaining + 1; c-- > 0;) {
      counts[i] = c;
      fill(i + 1, remaining - c);
    }
    counts[i] = 0;
  };
  fill(0, size);
}

BigInt multinomial(const std::vector<unsigned>& counts) {
  BigInt out = 1;
  unsigned running = 0;
  for (unsigned c : counts) {
    running += c;
    out *= binomial(running, c);
  }
  return out;
}

std::vector<WeightedMultiset> enumerate_multisets(std::size_t n, unsigned size) {
  std::vector<WeightedMultiset> out;
  for_each_multiset(n, size, [&](const std::vector<unsigned>& counts) {
    out.push_back(WeightedMultiset{ChoiceMultiset(counts), multinomial(counts)});
  });
  return out;
}

std::vector<Rational> uniform_expected_payoffs(const GameRule& rule) {
  const std::size_t n = rule.object_count();
  const unsigned opponents = rule.players() - 1;
  std::vector<Rational> totals(n, Rational(0));
  for_each_multiset(n, opponents, [&](const std::vector<unsigned>& counts) {
    const ChoiceMultiset others(counts);
    const BigInt weight = multinomial(counts);
    for (std::size_t o = 0; o < n; ++o) totals[o] += weight * payoff_against(rule, ObjectId{o}, others);
  });
  const Rational denom(power(BigInt(static_cast<unsigned long>(n)), opponents));
  for (auto& t : totals) t /= denom;
  return totals;
}

WinnerTable tabulate(const GameRule& rule, std::optional<unsigned> size) {
  const unsigned s = size.value_or(rule.players());
  WinnerTable table;
  for_each_multiset(rule.object_count(), s, [&](const std::vector<unsigned>& counts) {
    const Outcome o = eval_outcome(rule, ChoiceMultiset(counts));
    table.emplace(counts, o.winner);
  });
  return table;
}

}  // namespace rps
