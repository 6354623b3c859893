#include "rpsforge/equilibrium.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <random>
#include <thread>

namespace rps {

namespace {

constexpr unsigned kMaxPlayers = 4;
constexpr std::size_t kMaxObjects = 5;
constexpr unsigned kSymmetricStarts = 24;
constexpr int kNewtonIterations = 80;

// Bit-reproducible uniform doubles from a 64-bit Mersenne twister.
class Uniform {
 public:
  explicit Uniform(std::uint64_t seed) : gen_(seed) {}
  double operator()() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 gen_;
};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::vector<double> random_simplex(Uniform& u, std::size_t n) {
  std::vector<double> x(n);
  double sum = 0.0;
  for (auto& v : x) {
    v = -std::log(1.0 - u());
    sum += v;
  }
  for (auto& v : x) v /= sum;
  return x;
}

using Residual = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

// Newton's method with a forward-difference Jacobian and step halving.
std::optional<Eigen::VectorXd> newton(const Residual& f, Eigen::VectorXd x, double tol) {
  const Eigen::Index d = x.size();
  Eigen::VectorXd fx = f(x);
  for (int it = 0; it < kNewtonIterations; ++it) {
    if (!fx.allFinite()) return std::nullopt;
    if (fx.lpNorm<Eigen::Infinity>() <= tol) return x;
    Eigen::MatrixXd jac(d, d);
    for (Eigen::Index j = 0; j < d; ++j) {
      const double h = 1e-7 * std::max(1.0, std::abs(x[j]));
      Eigen::VectorXd xh = x;
      xh[j] += h;
      jac.col(j) = (f(xh) - fx) / h;
    }
    const Eigen::FullPivLU<Eigen::MatrixXd> lu(jac);
    if (!lu.isInvertible()) return std::nullopt;
    const Eigen::VectorXd step = lu.solve(-fx);
    double scale = 1.0;
    bool improved = false;
    for (int half = 0; half < 30; ++half, scale *= 0.5) {
      Eigen::VectorXd trial = x + scale * step;
      Eigen::VectorXd ft = f(trial);
      if (ft.allFinite() && ft.norm() < fx.norm()) {
        x = std::move(trial);
        fx = std::move(ft);
        improved = true;
        break;
      }
    }
    if (!improved) return fx.lpNorm<Eigen::Infinity>() <= tol ? std::optional(x) : std::nullopt;
  }
  return fx.lpNorm<Eigen::Infinity>() <= tol ? std::optional(x) : std::nullopt;
}

// Clamps tiny negatives and renormalizes; rejects anything clearly outside
// the simplex.
std::optional<std::vector<double>> to_distribution(std::vector<double> x) {
  double sum = 0.0;
  for (auto& v : x) {
    if (!std::isfinite(v) || v < -1e-9) return std::nullopt;
    v = std::max(v, 0.0);
    sum += v;
  }
  if (sum <= 0.0) return std::nullopt;
  for (auto& v : x) v /= sum;
  return x;
}

double linf(const MixedProfile& a, const MixedProfile& b) {
  double d = 0.0;
  for (std::size_t q = 0; q < a.players(); ++q) {
    for (std::size_t o = 0; o < a.objects(); ++o) d = std::max(d, std::abs(a.strategy(q)[o] - b.strategy(q)[o]));
  }
  return d;
}

class Searcher {
 public:
  Searcher(const GameRule& rule, const SearchConfig& config) : table_(rule), config_(config) {}

  std::optional<FoundEquilibrium> accept(std::vector<std::vector<double>> strategies, const char* origin) const {
    for (auto& s : strategies) {
      auto d = to_distribution(std::move(s));
      if (!d) return std::nullopt;
      s = std::move(*d);
    }
    auto profile = MixedProfile::from_strategies(std::move(strategies));
    auto report = nash_gap(table_, profile);
    if (!report.is_epsilon_nash(config_.eps)) return std::nullopt;
    return FoundEquilibrium{std::move(profile), std::move(report), origin};
  }

  // Symmetric equilibria whose support is exactly `support`.
  std::vector<FoundEquilibrium> symmetric_on(const std::vector<std::size_t>& support, std::uint64_t stream) const {
    const std::size_t n = table_.objects();
    const std::size_t d = support.size();
    auto embed = [&](const Eigen::VectorXd& y) {
      std::vector<double> x(n, 0.0);
      double rest = 1.0;
      for (std::size_t i = 1; i < d; ++i) {
        x[support[i]] = y[static_cast<Eigen::Index>(i - 1)];
        rest -= y[static_cast<Eigen::Index>(i - 1)];
      }
      x[support[0]] = rest;
      return x;
    };
    Residual f = [&](const Eigen::VectorXd& y) {
      const auto x = embed(y);
      const auto u = table_.symmetric_payoffs(x);
      Eigen::VectorXd out(static_cast<Eigen::Index>(d - 1));
      for (std::size_t i = 1; i < d; ++i) out[static_cast<Eigen::Index>(i - 1)] = u[support[i]] - u[support[0]];
      return out;
    };
    auto as_profile = [&](const std::vector<double>& x) {
      return std::vector<std::vector<double>>(table_.players(), x);
    };

    std::vector<FoundEquilibrium> out;
    auto keep = [&](std::optional<FoundEquilibrium> eq) {
      if (!eq) return;
      for (const auto& prior : out) {
        if (linf(prior.profile, eq->profile) <= config_.dedup) return;
      }
      out.push_back(std::move(*eq));
    };

    if (d == 1) {
      keep(accept(as_profile(embed(Eigen::VectorXd(0))), "symmetric-support"));
      return out;
    }
    if (d == 2) {
      constexpr int kScan = 400;
      auto g = [&](double t) { return f(Eigen::VectorXd::Constant(1, t))[0]; };
      double prev_t = 0.5 / kScan, prev_g = g(prev_t);
      for (int i = 1; i < kScan; ++i) {
        const double t = (i + 0.5) / kScan;
        const double gt = g(t);
        if ((prev_g < 0.0) != (gt < 0.0)) {
          double lo = prev_t, hi = t;
          const bool lo_neg = prev_g < 0.0;
          for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            ((g(mid) < 0.0) == lo_neg ? lo : hi) = mid;
          }
          keep(accept(as_profile(embed(Eigen::VectorXd::Constant(1, 0.5 * (lo + hi)))), "symmetric-support"));
        }
        prev_t = t;
        prev_g = gt;
      }
      return out;
    }
    Uniform u(mix_seed(config_.seed, stream));
    for (unsigned s = 0; s < kSymmetricStarts; ++s) {
      std::vector<double> start = s == 0 ? std::vector<double>(d, 1.0 / static_cast<double>(d)) : random_simplex(u, d);
      Eigen::VectorXd y(static_cast<Eigen::Index>(d - 1));
      for (std::size_t i = 1; i < d; ++i) y[static_cast<Eigen::Index>(i - 1)] = start[i];
      if (auto root = newton(f, y, 1e-13)) keep(accept(as_profile(embed(*root)), "symmetric-support"));
    }
    return out;
  }

  // Solves the indifference conditions on each player's support.
  std::optional<FoundEquilibrium> polish(const std::vector<std::vector<double>>& x, double threshold) const {
    const std::size_t players = x.size();
    std::vector<std::vector<std::size_t>> supports(players);
    for (std::size_t q = 0; q < players; ++q) {
      for (std::size_t a = 0; a < x[q].size(); ++a) {
        if (x[q][a] > threshold) supports[q].push_back(a);
      }
      if (supports[q].empty()) return std::nullopt;
    }
    auto embed = [&](const Eigen::VectorXd& y) {
      std::vector<std::vector<double>> s(players, std::vector<double>(table_.objects(), 0.0));
      Eigen::Index k = 0;
      for (std::size_t q = 0; q < players; ++q) {
        double rest = 1.0;
        for (std::size_t i = 1; i < supports[q].size(); ++i, ++k) {
          s[q][supports[q][i]] = y[k];
          rest -= y[k];
        }
        s[q][supports[q][0]] = rest;
      }
      return s;
    };
    Eigen::Index dims = 0;
    for (const auto& s : supports) dims += static_cast<Eigen::Index>(s.size() - 1);
    Eigen::VectorXd y(dims);
    {
      Eigen::Index k = 0;
      for (std::size_t q = 0; q < players; ++q) {
        double mass = 0.0;
        for (auto a : supports[q]) mass += x[q][a];
        for (std::size_t i = 1; i < supports[q].size(); ++i) y[k++] = x[q][supports[q][i]] / mass;
      }
    }
    if (dims == 0) return accept(embed(y), "multistart");
    Residual f = [&](const Eigen::VectorXd& v) {
      const auto s = embed(v);
      Eigen::VectorXd out(dims);
      Eigen::Index k = 0;
      for (std::size_t q = 0; q < players; ++q) {
        if (supports[q].size() < 2) continue;
        const auto u = table_.expected_payoffs(s, q);
        for (std::size_t i = 1; i < supports[q].size(); ++i) out[k++] = u[supports[q][i]] - u[supports[q][0]];
      }
      return out;
    };
    auto root = newton(f, y, 1e-13);
    if (!root) return std::nullopt;
    return accept(embed(*root), "multistart");
  }

  // Damped Nash-map iteration from one random start, then polishing.
  std::vector<FoundEquilibrium> multistart(unsigned start) const {
    Uniform u(mix_seed(config_.seed, 1000003ULL + start));
    const std::size_t players = table_.players();
    std::vector<std::vector<double>> x(players);
    for (auto& s : x) s = random_simplex(u, table_.objects());
    std::vector<std::vector<double>> average = x;
    const double d = config_.damping;

    unsigned it = 0;
    for (; it < config_.max_iterations; ++it) {
      std::vector<std::vector<double>> next(players);
      double change = 0.0;
      for (std::size_t q = 0; q < players; ++q) {
        const auto payoff = table_.expected_payoffs(x, q);
        double current = 0.0;
        for (std::size_t a = 0; a < payoff.size(); ++a) current += x[q][a] * payoff[a];
        double gain_sum = 0.0;
        std::vector<double> gain(payoff.size());
        for (std::size_t a = 0; a < payoff.size(); ++a) {
          gain[a] = std::max(0.0, payoff[a] - current);
          gain_sum += gain[a];
        }
        next[q].resize(payoff.size());
        for (std::size_t a = 0; a < payoff.size(); ++a) {
          const double mapped = (x[q][a] + gain[a]) / (1.0 + gain_sum);
          next[q][a] = (1.0 - d) * x[q][a] + d * mapped;
          change = std::max(change, std::abs(next[q][a] - x[q][a]));
        }
      }
      x = std::move(next);
      const double w = 1.0 / (it + 2.0);
      for (std::size_t q = 0; q < players; ++q) {
        for (std::size_t a = 0; a < x[q].size(); ++a) average[q][a] += w * (x[q][a] - average[q][a]);
      }
      if (change < 1e-14) break;
    }

    std::vector<FoundEquilibrium> out;
    for (const auto* candidate : {&x, &average}) {
      if (auto eq = accept(*candidate, "multistart")) {
        out.push_back(std::move(*eq));
        continue;
      }
      for (double threshold : {1e-2, 1e-4}) {
        if (auto eq = polish(*candidate, threshold)) {
          out.push_back(std::move(*eq));
          break;
        }
      }
    }
    return out;
  }

  const PayoffTable& table() const { return table_; }

 private:
  PayoffTable table_;
  SearchConfig config_;
};

}  // namespace

SearchResult search_equilibria(const GameRule& rule, const SearchConfig& config) {
  if (rule.players() > kMaxPlayers || rule.object_count() > kMaxObjects) {
    throw DomainError("equilibrium search is limited to <= 4 players and <= 5 objects");
  }
  if (!(config.eps > 0.0) || !(config.dedup >= 0.0) || !(config.damping > 0.0 && config.damping <= 1.0)) {
    throw DomainError("invalid search configuration");
  }
  const Searcher searcher(rule, config);
  SearchResult result;
  std::vector<FoundEquilibrium> candidates;

  const std::size_t n = rule.object_count();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::size_t> support;
    for (std::size_t a = 0; a < n; ++a) {
      if (mask >> a & 1U) support.push_back(a);
    }
    ++result.trace.supports_tried;
    for (auto& eq : searcher.symmetric_on(support, mask)) {
      ++result.trace.symmetric_found;
      candidates.push_back(std::move(eq));
    }
  }

  std::vector<std::vector<FoundEquilibrium>> per_start(config.starts);
  const unsigned jobs = std::max(1u, std::min(config.jobs, config.starts));
  auto work = [&](unsigned worker) {
    for (unsigned s = worker; s < config.starts; s += jobs) per_start[s] = searcher.multistart(s);
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w);
  }
  result.trace.starts_run = config.starts;
  for (auto& found : per_start) {
    if (!found.empty()) ++result.trace.starts_converged;
    for (auto& eq : found) candidates.push_back(std::move(eq));
  }

  for (auto& c : candidates) {
    const bool duplicate = std::any_of(result.equilibria.begin(), result.equilibria.end(), [&](const auto& kept) {
      return linf(kept.profile, c.profile) <= config.dedup;
    });
    if (duplicate) {
      ++result.trace.candidates_rejected;
    } else {
      result.equilibria.push_back(std::move(c));
    }
  }
  std::sort(result.equilibria.begin(), result.equilibria.end(), [](const auto& a, const auto& b) {
    return a.profile.strategies() < b.profile.strategies();
  });
  return result;
}

}  // namespace rps
