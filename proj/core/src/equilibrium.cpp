#include "rpsforge/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace rps {

namespace {

void check_distribution(const std::vector<double>& v) {
  double sum = 0.0;
  for (double x : v) {
    if (!std::isfinite(x) || x < 0.0) throw DomainError("probabilities must be finite and nonnegative");
    sum += x;
  }
  if (std::abs(sum - 1.0) > MixedProfile::kSumTolerance) {
    throw DomainError("probabilities sum to " + std::to_string(sum) + ", not 1");
  }
}

}  // namespace

MixedProfile::MixedProfile(std::vector<std::vector<double>> strategies, bool symmetric)
    : strategies_(std::move(strategies)), symmetric_(symmetric) {
  if (strategies_.empty()) throw DomainError("profile needs at least one player");
  const std::size_t n = strategies_.front().size();
  if (n == 0) throw DomainError("profile needs at least one object");
  for (const auto& s : strategies_) {
    if (s.size() != n) throw DomainError("players disagree on the number of objects");
    check_distribution(s);
  }
}

MixedProfile MixedProfile::symmetric(unsigned players, std::vector<double> probabilities) {
  if (players < 1) throw DomainError("profile needs at least one player");
  return MixedProfile(std::vector<std::vector<double>>(players, std::move(probabilities)), true);
}

MixedProfile MixedProfile::from_strategies(std::vector<std::vector<double>> strategies) {
  const bool same = std::all_of(strategies.begin(), strategies.end(),
                                [&](const auto& s) { return s == strategies.front(); });
  return MixedProfile(std::move(strategies), same);
}

void MixedProfile::check_against(const GameRule& rule) const {
  if (players() != rule.players() || objects() != rule.object_count()) {
    throw DomainError("profile shape " + std::to_string(players()) + "x" + std::to_string(objects()) +
                      " does not match game " + std::to_string(rule.players()) + "x" +
                      std::to_string(rule.object_count()));
  }
}

PayoffTable::PayoffTable(const GameRule& rule) : players_(rule.players()), objects_(rule.object_count()) {
  const unsigned opponents = players_ - 1;
  std::vector<std::map<std::vector<unsigned>, std::size_t>> index(opponents + 1);
  layers_.resize(opponents + 1);
  for (unsigned size = 0; size <= opponents; ++size) {
    for_each_multiset(objects_, size, [&](const std::vector<unsigned>& counts) {
      index[size].emplace(counts, layers_[size].size());
      layers_[size].push_back(counts);
    });
  }
  next_.resize(opponents);
  for (unsigned size = 0; size < opponents; ++size) {
    next_[size].resize(layers_[size].size(), std::vector<std::size_t>(objects_));
    for (std::size_t i = 0; i < layers_[size].size(); ++i) {
      auto counts = layers_[size][i];
      for (std::size_t a = 0; a < objects_; ++a) {
        ++counts[a];
        next_[size][i][a] = index[size + 1].at(counts);
        --counts[a];
      }
    }
  }
  const auto& top = layers_.back();
  payoff_.assign(objects_, std::vector<double>(top.size()));
  multinomial_.resize(top.size());
  for (std::size_t i = 0; i < top.size(); ++i) {
    const ChoiceMultiset others(top[i]);
    multinomial_[i] = to_double(Rational(multinomial(top[i])));
    for (std::size_t a = 0; a < objects_; ++a) payoff_[a][i] = to_double(payoff_against(rule, ObjectId{a}, others));
  }
}

std::vector<double> PayoffTable::opponent_distribution(std::span<const std::vector<double>> strategies,
                                                       std::size_t player) const {
  std::vector<double> dist{1.0};
  unsigned size = 0;
  for (std::size_t q = 0; q < strategies.size(); ++q) {
    if (q == player) continue;
    std::vector<double> grown(layers_[size + 1].size(), 0.0);
    for (std::size_t i = 0; i < dist.size(); ++i) {
      if (dist[i] == 0.0) continue;
      for (std::size_t a = 0; a < objects_; ++a) grown[next_[size][i][a]] += dist[i] * strategies[q][a];
    }
    dist = std::move(grown);
    ++size;
  }
  return dist;
}

std::vector<double> PayoffTable::opponent_distribution(const MixedProfile& profile, std::size_t player) const {
  return opponent_distribution(profile.strategies(), player);
}

std::vector<double> PayoffTable::expected_payoffs(std::span<const std::vector<double>> strategies,
                                                  std::size_t player) const {
  const auto dist = opponent_distribution(strategies, player);
  std::vector<double> out(objects_, 0.0);
  for (std::size_t a = 0; a < objects_; ++a) {
    for (std::size_t i = 0; i < dist.size(); ++i) out[a] += dist[i] * payoff_[a][i];
  }
  return out;
}

std::vector<double> PayoffTable::expected_payoffs(const MixedProfile& profile, std::size_t player) const {
  return expected_payoffs(profile.strategies(), player);
}

std::vector<double> PayoffTable::symmetric_payoffs(std::span<const double> x) const {
  const auto& top = layers_.back();
  std::vector<double> out(objects_, 0.0);
  for (std::size_t i = 0; i < top.size(); ++i) {
    double prob = multinomial_[i];
    for (std::size_t a = 0; a < objects_; ++a) {
      if (top[i][a] > 0) prob *= std::pow(x[a], static_cast<double>(top[i][a]));
    }
    if (prob == 0.0) continue;
    for (std::size_t a = 0; a < objects_; ++a) out[a] += prob * payoff_[a][i];
  }
  return out;
}

double expected_payoff(const GameRule& rule, const MixedProfile& profile, std::size_t player, ObjectId pure) {
  profile.check_against(rule);
  if (player >= profile.players()) throw DomainError("player index out of range");
  if (pure.index >= rule.object_count()) throw DomainError("unknown object index");
  return PayoffTable(rule).expected_payoffs(profile, player)[pure.index];
}

NashGapReport nash_gap(const PayoffTable& table, const MixedProfile& profile) {
  if (profile.players() != table.players() || profile.objects() != table.objects()) {
    throw DomainError("profile does not match the payoff table");
  }
  NashGapReport report;
  for (std::size_t q = 0; q < profile.players(); ++q) {
    auto payoffs = table.expected_payoffs(profile, q);
    const auto& x = profile.strategy(q);
    const double current = std::inner_product(x.begin(), x.end(), payoffs.begin(), 0.0);
    const double best = *std::max_element(payoffs.begin(), payoffs.end());
    const double gap = std::max(0.0, best - current);
    report.payoffs.push_back(std::move(payoffs));
    report.current.push_back(current);
    report.player_gap.push_back(gap);
    report.gap = std::max(report.gap, gap);
  }
  return report;
}

NashGapReport nash_gap(const GameRule& rule, const MixedProfile& profile) {
  profile.check_against(rule);
  return nash_gap(PayoffTable(rule), profile);
}

namespace {

double ipow(double x, unsigned e) { return std::pow(x, static_cast<double>(e)); }

// Bisect on [lo, hi] where f(lo) and f(hi) have opposite signs, until the
// bracket stops shrinking.
template <typename F>
double bisect(F&& f, double lo, double hi) {
  const bool lo_negative = f(lo) < 0.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if ((f(mid) < 0.0) == lo_negative) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

SymmetricRps3Equilibrium solve_symmetric_rps3(unsigned players, double tol) {
  if (players < 2) throw DomainError("symmetric solver needs at least 2 players");
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  const unsigned m = players;

  // For fixed r, g(p) = (p + r)^m - p - r^m is convex with g(0) = 0, so past
  // its minimum it has a single root in (0, 1 - r).
  const double p_plus_r_at_min = std::pow(static_cast<double>(m), -1.0 / (m - 1));
  auto p_of_r = [&](double r) {
    auto g = [&](double p) { return ipow(p + r, m) - p - ipow(r, m); };
    return bisect(g, p_plus_r_at_min - r, 1.0 - r);
  };
  auto h = [&](double r) {
    const double p = p_of_r(r);
    const double s = 1.0 - r - p;
    return ipow(s + p, m) - s - ipow(p, m);
  };

  const double r_max = p_plus_r_at_min;
  constexpr int kGrid = 2000;
  double prev_r = r_max * 1e-4;
  double prev_h = h(prev_r);
  std::optional<std::pair<double, double>> bracket;
  for (int i = 1; i <= kGrid && !bracket; ++i) {
    const double r = r_max * (1e-4 + (1.0 - 1e-4 - 1e-9) * i / kGrid);
    const double hr = h(r);
    if ((prev_h > 0.0) != (hr > 0.0)) bracket.emplace(prev_r, r);
    prev_r = r;
    prev_h = hr;
  }
  if (!bracket) throw SolverFailure("no interior root bracketed for m=" + std::to_string(m));

  SymmetricRps3Equilibrium eq;
  eq.players = m;
  eq.r = bisect(h, bracket->first, bracket->second);
  eq.p = p_of_r(eq.r);
  eq.s = 1.0 - eq.r - eq.p;
  eq.residual_rp = ipow(eq.p + eq.r, m) - eq.p - ipow(eq.r, m);
  eq.residual_ps = ipow(eq.s + eq.p, m) - eq.s - ipow(eq.p, m);

  if (std::min({eq.r, eq.p, eq.s}) < 1e-9) {
    throw SolverFailure("root for m=" + std::to_string(m) + " lies on the boundary");
  }
  if (std::abs(eq.residual_rp) > tol || std::abs(eq.residual_ps) > tol) {
    throw SolverFailure("residuals " + std::to_string(eq.residual_rp) + ", " + std::to_string(eq.residual_ps) +
                        " exceed tolerance for m=" + std::to_string(m));
  }
  return eq;
}

double expected_winner_count(const GameRule& rule, std::span<const double> probabilities) {
  if (probabilities.size() != rule.object_count()) throw DomainError("probability vector has the wrong length");
  check_distribution(std::vector<double>(probabilities.begin(), probabilities.end()));
  double total = 0.0;
  for_each_multiset(rule.object_count(), rule.players(), [&](const std::vector<unsigned>& counts) {
    double prob = to_double(Rational(multinomial(counts)));
    for (std::size_t a = 0; a < counts.size(); ++a) {
      if (counts[a] > 0) prob *= ipow(probabilities[a], counts[a]);
    }
    if (prob == 0.0) return;
    total += prob * eval_outcome(rule, ChoiceMultiset(counts)).winner_count;
  });
  return total;
}

unsigned players_supporting(const MixedProfile& profile, ObjectId object, double support_tol) {
  unsigned count = 0;
  for (const auto& s : profile.strategies()) {
    if (s.at(object.index) > support_tol) ++count;
  }
  return count;
}

PlayabilityReport classify_playability(const GameRule& rule, std::span<const FoundEquilibrium> equilibria,
                                       unsigned k, double support_tol) {
  if (k < 1) throw DomainError("k must be positive");
  PlayabilityReport report;
  report.k = k;
  report.equilibria_considered = equilibria.size();
  const std::size_t n = rule.object_count();
  std::vector<bool> seen(n, false);
  report.strongly_no_counterexample = true;
  report.k_strongly_no_counterexample = true;
  for (const auto& eq : equilibria) {
    eq.profile.check_against(rule);
    bool all_one = true, all_k = true;
    for (std::size_t o = 0; o < n; ++o) {
      const unsigned c = players_supporting(eq.profile, ObjectId{o}, support_tol);
      if (c >= 1) seen[o] = true;
      all_one = all_one && c >= 1;
      all_k = all_k && c >= k;
    }
    report.playable = report.playable || all_one;
    report.k_playable = report.k_playable || all_k;
    report.strongly_no_counterexample = report.strongly_no_counterexample && all_one;
    report.k_strongly_no_counterexample = report.k_strongly_no_counterexample && all_k;
  }
  report.weakly_playable = !equilibria.empty() && std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  if (equilibria.empty()) {
    report.strongly_no_counterexample = false;
    report.k_strongly_no_counterexample = false;
  }
  return report;
}

}  // namespace rps
