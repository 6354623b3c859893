#pragma once

#include "rpsforge/game.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rps {

/// One probability vector per player over the game's objects.
class MixedProfile {
 public:
  static constexpr double kSumTolerance = 1e-12;

  /// Every player uses `probabilities`.
  static MixedProfile symmetric(unsigned players, std::vector<double> probabilities);
  static MixedProfile from_strategies(std::vector<std::vector<double>> strategies);

  unsigned players() const { return static_cast<unsigned>(strategies_.size()); }
  std::size_t objects() const { return strategies_.front().size(); }
  const std::vector<double>& strategy(std::size_t player) const { return strategies_.at(player); }
  const std::vector<std::vector<double>>& strategies() const { return strategies_; }
  bool is_symmetric() const { return symmetric_; }

  /// Throws DomainError unless the profile has `rule`'s shape.
  void check_against(const GameRule& rule) const;

 private:
  MixedProfile(std::vector<std::vector<double>> strategies, bool symmetric);

  std::vector<std::vector<double>> strategies_;
  bool symmetric_ = false;
};

/// Payoff of each pure strategy against each opponent multiset, plus the
/// layered transition structure used to aggregate opponents' product
/// distributions into multiset probabilities.
class PayoffTable {
 public:
  explicit PayoffTable(const GameRule& rule);

  unsigned players() const { return players_; }
  std::size_t objects() const { return objects_; }
  const std::vector<std::vector<unsigned>>& opponent_multisets() const { return layers_.back(); }
  double payoff(std::size_t pure, std::size_t opponent_index) const { return payoff_[pure][opponent_index]; }

  /// Probability of each opponent multiset when everyone but `player` plays
  /// according to `profile`.
  std::vector<double> opponent_distribution(const MixedProfile& profile, std::size_t player) const;
  std::vector<double> opponent_distribution(std::span<const std::vector<double>> strategies, std::size_t player) const;

  /// Expected payoff of every pure strategy for `player`.
  std::vector<double> expected_payoffs(const MixedProfile& profile, std::size_t player) const;
  std::vector<double> expected_payoffs(std::span<const std::vector<double>> strategies, std::size_t player) const;

  /// Expected payoffs of every pure strategy when all opponents play `x`.
  std::vector<double> symmetric_payoffs(std::span<const double> x) const;

 private:
  unsigned players_;
  std::size_t objects_;
  std::vector<std::vector<std::vector<unsigned>>> layers_;      // multisets of size 0..players-1
  std::vector<std::vector<std::vector<std::size_t>>> next_;     // [size][index][object] -> index at size+1
  std::vector<std::vector<double>> payoff_;                     // [pure][opponent index]
  std::vector<double> multinomial_;                             // per opponent multiset
};

double expected_payoff(const GameRule& rule, const MixedProfile& profile, std::size_t player, ObjectId pure);

struct NashGapReport {
  std::vector<std::vector<double>> payoffs;  // [player][pure]
  std::vector<double> current;               // [player] payoff of the profile itself
  std::vector<double> player_gap;            // [player] best deviation gain, >= 0
  double gap = 0.0;

  bool is_epsilon_nash(double eps) const { return gap <= eps; }
};

NashGapReport nash_gap(const GameRule& rule, const MixedProfile& profile);
NashGapReport nash_gap(const PayoffTable& table, const MixedProfile& profile);

struct SymmetricRps3Equilibrium {
  unsigned players = 0;
  double r = 0, p = 0, s = 0;
  double residual_rp = 0;  // (p + r)^m - p - r^m
  double residual_ps = 0;  // (s + p)^m - s - p^m
};

class SolverFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Interior symmetric equilibrium of imbalanced_rps3(players), by nested
/// bisection. Throws SolverFailure if no interior root is bracketed or the
/// residuals exceed `tol`.
SymmetricRps3Equilibrium solve_symmetric_rps3(unsigned players, double tol = 1e-12);

/// Expected number of winners when every player uses `probabilities`;
/// an all-way tie counts every player.
double expected_winner_count(const GameRule& rule, std::span<const double> probabilities);

struct SearchConfig {
  std::uint64_t seed = 0;
  double eps = 1e-8;           // acceptance threshold on nash_gap
  double dedup = 1e-6;         // L-infinity merge distance
  unsigned starts = 200;
  unsigned max_iterations = 10000;
  double damping = 0.5;
  unsigned jobs = 1;
};

struct FoundEquilibrium {
  MixedProfile profile;
  NashGapReport report;
  std::string origin;  // "symmetric-support" or "multistart"
};

struct SearchTrace {
  unsigned supports_tried = 0;
  unsigned symmetric_found = 0;
  unsigned starts_run = 0;
  unsigned starts_converged = 0;
  unsigned candidates_rejected = 0;
};

struct SearchResult {
  std::vector<FoundEquilibrium> equilibria;  // sorted, deduplicated
  SearchTrace trace;

  bool inconclusive() const { return equilibria.empty(); }
};

/// Desk-scale equilibrium search (players <= 4, objects <= 5). Never
/// exhaustive; every returned profile satisfies nash_gap <= config.eps.
SearchResult search_equilibria(const GameRule& rule, const SearchConfig& config);

struct PlayabilityReport {
  unsigned k = 1;
  bool playable = false;                     // some equilibrium plays every object (>= 1 player)
  bool k_playable = false;                   // some equilibrium plays every object with >= k players
  bool weakly_playable = false;              // each object is played in some equilibrium
  bool strongly_no_counterexample = false;   // every listed equilibrium plays every object
  bool k_strongly_no_counterexample = false; // ... with >= k players each
  bool exhaustive = false;                   // never set by the search; strong claims are list-relative
  std::size_t equilibria_considered = 0;
};

/// Number of players whose strategy gives `object` probability > support_tol.
unsigned players_supporting(const MixedProfile& profile, ObjectId object, double support_tol = 1e-7);

PlayabilityReport classify_playability(const GameRule& rule, std::span<const FoundEquilibrium> equilibria,
                                       unsigned k, double support_tol = 1e-7);

}  // namespace rps
