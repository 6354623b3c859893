#pragma once

// Symmetric win/lose multiplayer games: every multiset of choices names a
// single winning object (or an all-way tie), winners split the pot.

#include "rpsforge/rational.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rps {

struct ObjectId {
  std::size_t index = 0;

  friend auto operator<=>(const ObjectId&, const ObjectId&) = default;
};

/// Counts of each object chosen in one play of the game.
class ChoiceMultiset {
 public:
  explicit ChoiceMultiset(std::vector<unsigned> counts);

  /// One player per entry of `choices`, over `n` objects.
  static ChoiceMultiset from_choices(std::size_t n, std::span<const ObjectId> choices);

  const std::vector<unsigned>& counts() const { return counts_; }
  unsigned count(ObjectId o) const { return counts_.at(o.index); }
  unsigned total() const { return total_; }
  std::size_t object_count() const { return counts_.size(); }
  std::size_t support_size() const;

  friend bool operator==(const ChoiceMultiset&, const ChoiceMultiset&) = default;

 private:
  std::vector<unsigned> counts_;
  unsigned total_ = 0;
};

struct Outcome {
  enum class Kind { WinningObject, AllTie };

  Kind kind = Kind::AllTie;
  std::optional<ObjectId> winner;  // set iff kind == WinningObject
  unsigned winner_count = 0;

  bool is_tie() const { return kind == Kind::AllTie; }
  friend bool operator==(const Outcome&, const Outcome&) = default;
};

enum class ObjectKind { RType, PType, Leaf };

/// Level structure of the iterated blow-up family. Level 1 is the top.
struct LevelMap {
  unsigned depth = 0;
  std::vector<unsigned> level;     // per object
  std::vector<ObjectKind> kind;    // per object

  /// Throws DomainError unless levels 1..depth hold one R and one P each and
  /// a single leaf sits at level `depth`.
  void validate() const;
};

struct RuleMetadata {
  std::string construction;  // e.g. "imbalanced m=4 k=2"
  std::optional<LevelMap> levels;
};

/// Raw winner map. Returning nullopt means an all-way tie. Monosets are
/// always treated as ties by eval_outcome regardless of what this returns.
using WinnerFn = std::function<std::optional<ObjectId>(const ChoiceMultiset&)>;

/// Counts-vector keyed winner table; nullopt entries are explicit ties.
using WinnerTable = std::map<std::vector<unsigned>, std::optional<ObjectId>>;

class GameRule {
 public:
  /// Procedural rule, defined for every multiset of size 1..players.
  GameRule(unsigned players, std::vector<std::string> labels, WinnerFn winner, RuleMetadata metadata = {});

  /// Table-backed rule. Multisets missing from the table are ties when they
  /// are monosets and a DomainError otherwise.
  static GameRule from_table(unsigned players, std::vector<std::string> labels, WinnerTable table,
                             RuleMetadata metadata = {});

  unsigned players() const { return players_; }
  std::size_t object_count() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(ObjectId o) const { return labels_.at(o.index); }
  std::optional<ObjectId> find(std::string_view label) const;
  const RuleMetadata& metadata() const { return metadata_; }

  /// True when the winner map covers every multiset of size 1..players.
  bool fully_extended() const { return fully_extended_; }
  bool table_backed() const { return table_ != nullptr; }

  /// Unchecked winner map; prefer eval_outcome.
  std::optional<ObjectId> raw_winner(const ChoiceMultiset& choices) const { return winner_(choices); }

  /// Same rule, new object labels.
  GameRule relabeled(std::vector<std::string> labels) const;
  GameRule with_metadata(RuleMetadata metadata) const;

 private:
  GameRule() = default;
  void validate_labels() const;

  unsigned players_ = 0;
  std::vector<std::string> labels_;
  WinnerFn winner_;
  RuleMetadata metadata_;
  std::shared_ptr<const WinnerTable> table_;
  bool fully_extended_ = true;
};

/// Winner payoff in an m'-way tie among m players: (m - m') / m'.
Rational tie_payoff(unsigned players, unsigned winners);

Outcome eval_outcome(const GameRule& rule, const ChoiceMultiset& choices);

using PayoffVector = std::vector<Rational>;

PayoffVector payoff_vector(const GameRule& rule, std::span<const ObjectId> ordered_choices);

/// Payoff to a player choosing `choice` when the others form `opponents`.
/// The full game has opponents.total() + 1 players.
Rational payoff_against(const GameRule& rule, ObjectId choice, const ChoiceMultiset& opponents);

struct WeightedMultiset {
  ChoiceMultiset choices;
  BigInt weight;  // size! / prod(counts!)
};

/// Visits every counts vector of length n summing to `size` exactly once,
/// in reverse-lexicographic order starting from (size, 0, ..., 0).
void for_each_multiset(std::size_t n, unsigned size,
                       const std::function<void(const std::vector<unsigned>&)>& visit);

std::vector<WeightedMultiset> enumerate_multisets(std::size_t n, unsigned size);

BigInt multinomial(const std::vector<unsigned>& counts);

/// F(o): expected payoff of o against uniformly random opponents.
std::vector<Rational> uniform_expected_payoffs(const GameRule& rule);

/// Winner table over all multisets of `size` (defaults to the player count).
WinnerTable tabulate(const GameRule& rule, std::optional<unsigned> size = std::nullopt);

}  // namespace rps
