// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "rpsforge/construct.hpp"
#include "rpsforge/equilibrium.hpp"
#include "rpsforge/imbalance.hpp"
#include "rpsforge/verifier.hpp"
#include "random_games.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

namespace {

using namespace rps;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void run(int id, const std::string& title, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (!out.pass) ++failures;
  std::printf("%s %2d %s (%.3fs)%s%s\n", out.pass ? "PASS" : "FAIL", id, title.c_str(), secs,
              out.detail.empty() ? "" : ": ", out.detail.c_str());
  std::fflush(stdout);
}

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

Outcome symmetric_table() {
  struct Row {
    unsigned m;
    double r, p, s;
  };
  constexpr Row rows[] = {{3, 0.324, 0.473, 0.202}, {5, 0.288, 0.622, 0.090}, {10, 0.212, 0.760, 0.027},
                          {15, 0.169, 0.818, 0.013}, {20, 0.142, 0.850, 0.008}};
  const auto start = Clock::now();
  Outcome out;
  std::ostringstream d;
  for (const auto& row : rows) {
    const auto eq = solve_symmetric_rps3(row.m);
    const double err = std::max({std::abs(eq.r - row.r), std::abs(eq.p - row.p), std::abs(eq.s - row.s)});
    d << "m=" << row.m << " err=" << err << " ";
    if (err > 1e-3) out.pass = false;
  }
  const double secs = seconds_since(start);
  if (secs >= 1.0) out.pass = false;
  d << "total " << secs << "s";
  out.detail = d.str();
  return out;
}

Outcome tie_count() {
  const auto start = Clock::now();
  const auto eq = solve_symmetric_rps3(20);
  const auto rule = imbalanced_rps3(20);
  const std::vector<double> x{eq.r, eq.p, eq.s};
  const double w = expected_winner_count(rule, x);
  const std::size_t outcomes = enumerate_multisets(3, 20).size();
  const double secs = seconds_since(start);
  std::ostringstream d;
  d << "E[winners]=" << w << " over " << outcomes << " multisets";
  return {w > 15.0 && outcomes == 231 && secs < 1.0, d.str()};
}

Outcome formula_oracle() {
  std::mt19937_64 rng(20260101);
  std::size_t checks = 0, failed = 0;
  for (Role role : kAllRoles) {
    for (int trial = 0; trial < 200; ++trial) {
      const unsigned k = 1 + rng() % 8;
      const unsigned t = needs_pure_p_players(role) ? 1 + rng() % 8 : rng() % 9;
      const unsigned long dr = 2 + rng() % 500, ds = 2 + rng() % 500;
      const ScenarioParams p{k, t, ratio(rng() % (dr + 1), dr), ratio(rng() % (ds + 1), ds)};
      const std::vector<Rational> r_vec(k, p.r);
      ++checks;
      if (ev_simplified(role, p) != ev_raw_oracle(role, k, t, r_vec, p.s)) ++failed;
    }
  }
  return {failed == 0, std::to_string(checks) + " scenarios, " + std::to_string(failed) + " mismatches"};
}

Outcome identities() {
  const auto start = Clock::now();
  std::size_t checks = 0, failed = 0;
  for (unsigned k = 1; k <= 30; ++k) {
    for (unsigned t = 0; t <= 30; ++t) {
      for (unsigned b = 0; b < k; ++b) {
        const auto c = identity_check(k, t, b);
        ++checks;
        if (!c.first_holds() || !c.second_holds()) ++failed;
      }
    }
  }
  const double secs = seconds_since(start);
  return {failed == 0 && secs < 30.0, std::to_string(checks) + " (k,t,b) triples, " + std::to_string(failed) + " failures"};
}

Outcome corners() {
  std::size_t checks = 0, failed = 0;
  for (unsigned k = 2; k <= 30; ++k) {
    for (unsigned t = 0; t <= 30; ++t) {
      for (unsigned l = 0; l + 2 <= k; ++l) {
        for (unsigned s = 0; s <= 1; ++s) {
          const auto c = corner_value(k, t, l, s);
          ++checks;
          if (!c.agrees() || !(c.sum < 0)) ++failed;
        }
      }
    }
  }
  return {failed == 0, std::to_string(checks) + " corners, " + std::to_string(failed) + " failures"};
}

Outcome infeasibility_sweep() {
  SweepOptions options;
  options.k_max = 12;
  options.t_max = 12;
  options.delta = 1e-6;
  options.budget_seconds = 600;
  const auto report = sweep(options);
  std::size_t proved = 0, boxes = 0;
  for (const auto& c : report.certificates) {
    proved += c.verdict == Verdict::ProvedEmpty;
    boxes += c.boxes;
  }
  std::ostringstream d;
  d << proved << "/" << report.expected << " ProvedEmpty, " << boxes << " boxes";
  if (!report.complete) d << ", budget exhausted";
  return {report.all_proved() && report.complete && proved == 156, d.str()};
}

Outcome majorization_limit() {
  std::ostringstream d;
  bool pass = true;
  for (unsigned m = 2; m <= 12; ++m) {
    const auto a = uniform_expected_payoffs(maximal_rps3(m));
    const auto b = uniform_expected_payoffs(imbalanced_rps3(m));
    if (majorizes(std::span<const Rational>(a), std::span<const Rational>(b)) != Majorization::Majorizes) {
      pass = false;
      d << "m=" << m << " not majorized ";
    }
    const Rational bound = ratio(BigInt(m) * (power(BigInt(2), m - 1) - 1), power(BigInt(3), m - 1));
    if (!(a[0] - b[0] < bound)) {
      pass = false;
      d << "m=" << m << ": F(R')-F(R) = " << to_string(Rational(a[0] - b[0])) << " is not below "
        << to_string(bound) << "; ";
    }
  }
  if (pass) d << "m = 2..12";
  return {pass, d.str()};
}

GameRule fold_blowups(unsigned m, unsigned k) {
  GameRule acc = imbalanced_rps3(m, {"R_" + std::to_string(k), "P_" + std::to_string(k), "S"});
  for (unsigned l = k - 1; l >= 1; --l) {
    acc = symmetric_blowup(imbalanced_rps3(m, {"R_" + std::to_string(l), "P_" + std::to_string(l), "S~"}), ObjectId{2},
                           acc);
  }
  return acc;
}

Outcome blowup_equivalence() {
  std::size_t multisets = 0, mismatched = 0;
  for (unsigned m = 2; m <= 5; ++m) {
    for (unsigned k = 1; k <= 3; ++k) {
      const auto direct = imbalanced_rps(m, k);
      const auto folded = fold_blowups(m, k);
      if (direct.labels() != folded.labels()) ++mismatched;
      for (unsigned size = 1; size <= m; ++size) {
        for_each_multiset(direct.object_count(), size, [&](const std::vector<unsigned>& c) {
          ++multisets;
          if (eval_outcome(direct, ChoiceMultiset(c)) != eval_outcome(folded, ChoiceMultiset(c))) ++mismatched;
        });
      }
    }
  }
  return {mismatched == 0, std::to_string(multisets) + " multisets, " + std::to_string(mismatched) + " mismatches"};
}

Outcome playability() {
  std::ostringstream d;
  bool pass = true;
  for (unsigned k : {1u, 2u}) {
    const auto g = imbalanced_rps(3, k);
    SearchConfig config;
    config.seed = 2024;
    config.starts = 200;
    const auto found = search_equilibria(g, config);
    const auto report = classify_playability(g, found.equilibria, 1);
    bool s_twice = true;
    if (k == 1) {
      for (const auto& f : found.equilibria) s_twice = s_twice && players_supporting(f.profile, ObjectId{2}) >= 2;
    }
    const bool ok = !found.inconclusive() && report.strongly_no_counterexample && s_twice;
    pass = pass && ok;
    d << "(3," << 2 * k + 1 << "): " << found.equilibria.size() << " equilibria, "
      << (ok ? "no counterexample" : "counterexample") << "; ";
  }
  d << "evidence only, search is not exhaustive";
  return {pass, d.str()};
}

Outcome invariants() {
  std::mt19937_64 rng(77);
  std::size_t games = 0, zero_sum_bad = 0, phi_bad = 0, f_bad = 0, comparable = 0, variance_bad = 0, theil_bad = 0;
  std::string theil_example;
  const auto check_pair = [&](const GameRule& a, const GameRule& b, const std::string& name) {
    const auto cmp = schur_compare(a, b, StatisticSet{});
    if (cmp.relation == Majorization::Incomparable) return;
    ++comparable;
    for (const auto& s : cmp.statistics) {
      if (!s.agrees_with_majorization || *s.agrees_with_majorization) continue;
      if (s.statistic == Statistic::Variance) ++variance_bad;
      if (s.statistic == Statistic::Theil) {
        if (theil_bad++ == 0) {
          std::ostringstream d;
          d << name << " theil_" << s.alpha << " " << s.first << " vs " << s.second << " under "
            << to_string(cmp.relation);
          theil_example = d.str();
        }
      }
    }
  };
  for (int trial = 0; trial < 300; ++trial) {
    const unsigned m = 2 + rng() % 3;
    const std::size_t n = 2 + rng() % 3;
    const auto g = test::random_game(m, n, rng);
    const auto h = test::random_game(m, n, rng);
    ++games;
    for_each_multiset(n, m, [&](const std::vector<unsigned>& c) {
      const auto o = eval_outcome(g, ChoiceMultiset(c));
      if (o.winner && c[o.winner->index] == 0) ++phi_bad;
    });
    std::vector<ObjectId> ordered(m);
    for (unsigned i = 0; i < m; ++i) ordered[i] = ObjectId{rng() % n};
    Rational total = 0;
    for (const auto& v : payoff_vector(g, ordered)) total += v;
    if (total != 0) ++zero_sum_bad;
    Rational f = 0;
    for (const auto& v : uniform_expected_payoffs(g)) f += v;
    if (f != 0) ++f_bad;
    check_pair(g, h, "random");
  }
  for (unsigned m = 3; m <= 6; ++m) check_pair(maximal_rps3(m), imbalanced_rps3(m), "maximal/imbalanced m=" + std::to_string(m));

  std::ostringstream d;
  d << games << " random games: zero-sum " << zero_sum_bad << ", phi(c) in c " << phi_bad << ", sum F " << f_bad
    << " failures; " << comparable << " comparable pairs: variance " << variance_bad << ", per-game Theil " << theil_bad
    << " disagreements";
  if (theil_bad) d << " (e.g. " << theil_example << ")";
  return {zero_sum_bad + phi_bad + f_bad + variance_bad + theil_bad == 0, d.str()};
}

}  // namespace

int main() {
  run(1, "symmetric equilibria for m = 3, 5, 10, 15, 20", symmetric_table);
  run(2, "over 15 expected winners at m=20", tie_count);
  run(3, "simplified formulas equal raw oracle", formula_oracle);
  run(4, "binomial identities, k,t <= 30", identities);
  run(5, "corner values negative and closed form", corners);
  run(6, "infeasibility sweep k,t <= 12", infeasibility_sweep);
  run(7, "maximal majorizes imbalanced, bound on F(R')-F(R)", majorization_limit);
  run(8, "blow-up equivalence m <= 5, k <= 3", blowup_equivalence);
  run(9, "playability evidence for (3,3) and (3,5)", playability);
  run(10, "invariant suites on randomized games", invariants);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
