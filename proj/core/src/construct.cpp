#include "rpsforge/construct.hpp"

#include <numeric>

namespace rps {

namespace {

constexpr std::size_t kR = 0, kP = 1, kS = 2;

void require_players(unsigned players) {
  if (players < 2) throw DomainError("game needs at least 2 players, got " + std::to_string(players));
}

std::string level_label(char type, unsigned level) { return std::string(1, type) + "_" + std::to_string(level); }

}  // namespace

GameRule imbalanced_rps3(unsigned players) { return imbalanced_rps3(players, {"R", "P", "S"}); }

GameRule imbalanced_rps3(unsigned players, const std::array<std::string, 3>& labels) {
  require_players(players);
  WinnerFn fn = [](const ChoiceMultiset& c) -> std::optional<ObjectId> {
    const auto& n = c.counts();
    if (n[kR] > 0 && n[kS] > 0) return ObjectId{kR};
    if (n[kR] > 0 && n[kP] > 0) return ObjectId{kP};
    if (n[kP] > 0 && n[kS] > 0) return ObjectId{kS};
    return std::nullopt;  // monoset
  };
  return GameRule(players, {labels[0], labels[1], labels[2]}, std::move(fn),
                  RuleMetadata{"imbalanced3 m=" + std::to_string(players), std::nullopt});
}

GameRule maximal_rps3(unsigned players) {
  require_players(players);
  WinnerFn fn = [](const ChoiceMultiset& c) -> std::optional<ObjectId> {
    const auto& n = c.counts();
    if (n[kR] > 0) return ObjectId{kR};
    if (n[kP] > 0 && n[kS] > 0) return ObjectId{kS};
    return std::nullopt;
  };
  return GameRule(players, {"R'", "P'", "S'"}, std::move(fn),
                  RuleMetadata{"maximal3 m=" + std::to_string(players), std::nullopt});
}

GameRule odd_one_out(unsigned players) {
  require_players(players);
  WinnerFn fn = [](const ChoiceMultiset& c) -> std::optional<ObjectId> {
    const auto a = c.counts()[0], b = c.counts()[1];
    if (a == b) return std::nullopt;
    return ObjectId{a < b ? std::size_t{0} : std::size_t{1}};
  };
  return GameRule(players, {"a", "b"}, std::move(fn),
                  RuleMetadata{"odd-one-out m=" + std::to_string(players), std::nullopt});
}

GameRule symmetric_blowup(const GameRule& outer, ObjectId at, const GameRule& inner) {
  if (at.index >= outer.object_count()) throw DomainError("blow-up point is not an object of the outer game");
  if (!inner.fully_extended()) throw DomainError("inner game is not fully extended");
  if (inner.players() < outer.players()) {
    throw DomainError("inner game is only extended to " + std::to_string(inner.players()) + " players, need " +
                      std::to_string(outer.players()));
  }

  const std::size_t outer_n = outer.object_count();
  const std::size_t inner_n = inner.object_count();
  const std::size_t kept = outer_n - 1;

  std::vector<std::string> labels;
  std::vector<std::size_t> outer_index;  // composite index -> outer index, for kept objects
  for (std::size_t i = 0; i < outer_n; ++i) {
    if (i == at.index) continue;
    labels.push_back(outer.labels()[i]);
    outer_index.push_back(i);
  }
  for (const auto& l : inner.labels()) labels.push_back(l);

  WinnerFn fn = [outer, inner, at, outer_index, kept, outer_n, inner_n](
                    const ChoiceMultiset& c) -> std::optional<ObjectId> {
    const auto& n = c.counts();
    std::vector<unsigned> inner_counts(n.begin() + static_cast<std::ptrdiff_t>(kept), n.end());
    const unsigned in_inner = std::accumulate(inner_counts.begin(), inner_counts.end(), 0u);

    std::vector<unsigned> outer_counts(outer_n, 0);
    for (std::size_t j = 0; j < kept; ++j) outer_counts[outer_index[j]] = n[j];
    outer_counts[at.index] = in_inner;

    const Outcome outer_outcome = eval_outcome(outer, ChoiceMultiset(outer_counts));
    const bool delegated =
        in_inner > 0 && (outer_outcome.is_tie() ? in_inner == c.total() : *outer_outcome.winner == at);
    if (!delegated) {
      if (outer_outcome.is_tie()) return std::nullopt;
      for (std::size_t j = 0; j < kept; ++j) {
        if (outer_index[j] == outer_outcome.winner->index) return ObjectId{j};
      }
      throw std::logic_error("outer winner not found among kept objects");
    }

    const ChoiceMultiset sub(inner_counts);
    const Outcome inner_outcome = eval_outcome(inner, sub);
    if (!inner_outcome.is_tie()) return ObjectId{kept + inner_outcome.winner->index};
    if (in_inner == c.total()) return std::nullopt;  // everyone sits in H and ties
    if (sub.support_size() == 1) {
      for (std::size_t h = 0; h < inner_n; ++h) {
        if (inner_counts[h] > 0) return ObjectId{kept + h};
      }
    }
    throw DomainError("blow-up outcome needs a multi-object winner set");
  };

  const std::string tag = "blowup(" + outer.metadata().construction + " @" + outer.label(at) + ", " +
                          inner.metadata().construction + ")";
  return GameRule(outer.players(), std::move(labels), std::move(fn), RuleMetadata{tag, std::nullopt});
}

GameRule imbalanced_rps(unsigned players, unsigned depth) {
  require_players(players);
  if (depth < 1) throw DomainError("depth must be at least 1");

  LevelMap levels;
  levels.depth = depth;
  std::vector<std::string> labels;
  for (unsigned l = 1; l <= depth; ++l) {
    labels.push_back(level_label('R', l));
    labels.push_back(level_label('P', l));
    levels.level.insert(levels.level.end(), {l, l});
    levels.kind.insert(levels.kind.end(), {ObjectKind::RType, ObjectKind::PType});
  }
  labels.push_back("S");
  levels.level.push_back(depth);
  levels.kind.push_back(ObjectKind::Leaf);

  const std::size_t leaf = 2 * std::size_t{depth};
  WinnerFn fn = [depth, leaf](const ChoiceMultiset& c) -> std::optional<ObjectId> {
    const auto& n = c.counts();
    // deeper[i]: number of choices at indices >= i.
    std::vector<unsigned> deeper(n.size() + 1, 0);
    for (std::size_t i = n.size(); i-- > 0;) deeper[i] = deeper[i + 1] + n[i];

    for (unsigned l = 0; l < depth; ++l) {
      const std::size_t r = 2 * std::size_t{l}, p = r + 1;
      const unsigned a = n[r], b = n[p], d = deeper[p + 1];
      if (a + b == 0) continue;
      if (a > 0) return ObjectId{d > 0 || b == 0 ? r : p};
      if (d == 0) return ObjectId{p};
      // Only P and deeper objects: the deeper group wins this level and is
      // resolved one level down.
    }
    return ObjectId{leaf};
  };

  RuleMetadata meta{"imbalanced m=" + std::to_string(players) + " k=" + std::to_string(depth), std::move(levels)};
  return GameRule(players, std::move(labels), std::move(fn), std::move(meta));
}

GameRule iterated_blowup(unsigned players, unsigned depth) {
  require_players(players);
  if (depth < 1) throw DomainError("depth must be at least 1");
  GameRule acc = imbalanced_rps3(players, {level_label('R', depth), level_label('P', depth), "S"});
  for (unsigned l = depth - 1; l >= 1; --l) {
    const GameRule top = imbalanced_rps3(players, {level_label('R', l), level_label('P', l), "S~"});
    acc = symmetric_blowup(top, ObjectId{kS}, acc);
  }
  return acc.with_metadata(RuleMetadata{
      "iterated-blowup m=" + std::to_string(players) + " k=" + std::to_string(depth), std::nullopt});
}

}  // namespace rps
