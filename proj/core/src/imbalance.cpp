#include "rpsforge/imbalance.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

namespace rps {

PayoffDistribution::PayoffDistribution(std::vector<Rational> values) : values_(std::move(values)) {
  if (values_.empty()) throw DomainError("payoff distribution needs at least one value");
}

PayoffDistribution PayoffDistribution::from_doubles(std::span<const double> values) {
  std::vector<Rational> exact;
  exact.reserve(values.size());
  for (double v : values) exact.push_back(from_double(v));
  return PayoffDistribution(std::move(exact));
}

PayoffDistribution PayoffDistribution::uniform_payoffs(const GameRule& rule) {
  return PayoffDistribution(uniform_expected_payoffs(rule));
}

std::vector<double> PayoffDistribution::as_doubles() const {
  std::vector<double> out;
  out.reserve(values_.size());
  for (const auto& v : values_) out.push_back(to_double(v));
  return out;
}

Rational PayoffDistribution::mean() const {
  Rational sum = std::accumulate(values_.begin(), values_.end(), Rational(0));
  return sum / Rational(static_cast<long>(values_.size()));
}

Rational ui_variance(const PayoffDistribution& d) {
  const Rational mu = d.mean();
  Rational acc = 0;
  for (const auto& v : d.values()) acc += (v - mu) * (v - mu);
  return acc / Rational(static_cast<long>(d.size()));
}

double ui_entropy(const PayoffDistribution& d, double merge_tol) {
  if (merge_tol < 0.0) throw DomainError("merge tolerance must be nonnegative");
  auto values = d.as_doubles();
  std::sort(values.begin(), values.end());
  // Single-linkage merge of sorted values.
  std::vector<std::size_t> atoms;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i == 0 || values[i] - values[i - 1] > merge_tol) {
      atoms.push_back(1);
    } else {
      ++atoms.back();
    }
  }
  const double n = static_cast<double>(values.size());
  double h = 0.0;
  for (auto count : atoms) {
    const double w = static_cast<double>(count) / n;
    h -= w * std::log(w);
  }
  return h;
}

double theil_alpha(const PayoffDistribution& d, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("alpha must lie in (0, 1)");
  const Rational mean = d.mean();
  const Rational min = *std::min_element(d.values().begin(), d.values().end());
  if (mean == min) return 0.0;
  // Scale in exact arithmetic so equal inputs stay equal after the map.
  const Rational a = from_double(alpha);
  const Rational c1 = (Rational(1) - a) / (mean - min);
  const Rational c2 = Rational(1) - c1 * mean;
  double t = 0.0;
  for (const auto& v : d.values()) {
    const double x = to_double(c1 * v + c2);
    t += x * std::log(x);
  }
  return t / static_cast<double>(d.size());
}

double nash_entropy_imbalance(std::span<const MixedProfile> equilibria, EntropySelection selection) {
  if (equilibria.empty()) throw Inconclusive("no equilibria supplied");
  std::optional<double> best;
  for (const auto& eq : equilibria) {
    double h = 0.0;
    for (const auto& s : eq.strategies()) {
      for (double p : s) {
        if (p > 0.0) h -= p * std::log(p);
      }
    }
    if (!best || (selection == EntropySelection::Max ? h > *best : h < *best)) best = h;
  }
  return *best;
}

double nash_ties_imbalance(std::span<const std::vector<double>> symmetric_equilibria, unsigned players) {
  if (symmetric_equilibria.empty()) throw Inconclusive("no symmetric equilibria supplied");
  double best = std::numeric_limits<double>::infinity();
  for (const auto& v : symmetric_equilibria) {
    double t = 0.0;
    for (double p : v) t += std::pow(p, static_cast<double>(players));
    best = std::min(best, t);
  }
  return best;
}

std::string to_string(Majorization m) {
  switch (m) {
    case Majorization::Majorizes: return "Majorizes";
    case Majorization::MajorizedBy: return "MajorizedBy";
    case Majorization::Equal: return "Equal";
    case Majorization::Incomparable: return "Incomparable";
  }
  return "?";
}

namespace {

// Shared prefix-sum comparison; `cmp(x, y)` returns -1, 0 or +1 with
// tolerance already applied.
template <typename T, typename Cmp>
Majorization compare_sorted(std::vector<T> a, std::vector<T> b, Cmp cmp) {
  if (a.size() != b.size()) {
    throw DomainError("majorization needs equal lengths, got " + std::to_string(a.size()) + " and " +
                      std::to_string(b.size()));
  }
  std::sort(a.begin(), a.end(), std::greater<>());
  std::sort(b.begin(), b.end(), std::greater<>());
  T sa = T(0), sb = T(0);
  bool a_above = false, b_above = false;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    sa += a[i];
    sb += b[i];
    const int c = cmp(sa, sb);
    a_above = a_above || c > 0;
    b_above = b_above || c < 0;
  }
  sa += a.back();
  sb += b.back();
  if (cmp(sa, sb) != 0) return Majorization::Incomparable;
  if (a_above && b_above) return Majorization::Incomparable;
  if (a_above) return Majorization::Majorizes;
  if (b_above) return Majorization::MajorizedBy;
  return Majorization::Equal;
}

}  // namespace

Majorization majorizes(std::span<const double> a, std::span<const double> b, double tol) {
  return compare_sorted(std::vector<double>(a.begin(), a.end()), std::vector<double>(b.begin(), b.end()),
                        [tol](double x, double y) { return x > y + tol ? 1 : (y > x + tol ? -1 : 0); });
}

Majorization majorizes(std::span<const Rational> a, std::span<const Rational> b) {
  return compare_sorted(std::vector<Rational>(a.begin(), a.end()), std::vector<Rational>(b.begin(), b.end()),
                        [](const Rational& x, const Rational& y) { return cmp(x, y) > 0 ? 1 : (cmp(x, y) < 0 ? -1 : 0); });
}

SchurComparison schur_compare(const GameRule& first, const GameRule& second, const StatisticSet& set) {
  if (first.object_count() != second.object_count()) {
    throw DomainError("games have " + std::to_string(first.object_count()) + " and " +
                      std::to_string(second.object_count()) + " objects; majorization needs equal lengths");
  }
  SchurComparison out;
  out.first_payoffs = uniform_expected_payoffs(first);
  out.second_payoffs = uniform_expected_payoffs(second);
  out.relation = majorizes(std::span<const Rational>(out.first_payoffs), std::span<const Rational>(out.second_payoffs));

  const PayoffDistribution a(out.first_payoffs), b(out.second_payoffs);
  auto agreement = [&](double x, double y) -> std::optional<bool> {
    switch (out.relation) {
      case Majorization::Majorizes: return x >= y - 1e-12;
      case Majorization::MajorizedBy: return y >= x - 1e-12;
      case Majorization::Equal: return std::abs(x - y) <= 1e-12;
      case Majorization::Incomparable: return std::nullopt;
    }
    return std::nullopt;
  };
  if (set.variance) {
    const double x = to_double(ui_variance(a)), y = to_double(ui_variance(b));
    out.statistics.push_back({Statistic::Variance, 0.0, x, y, agreement(x, y)});
  }
  if (set.entropy) {
    out.statistics.push_back({Statistic::Entropy, 0.0, ui_entropy(a, set.merge_tol), ui_entropy(b, set.merge_tol),
                              std::nullopt});
  }
  for (double alpha : set.theil_alphas) {
    const double x = theil_alpha(a, alpha), y = theil_alpha(b, alpha);
    out.statistics.push_back({Statistic::Theil, alpha, x, y, agreement(x, y)});
  }
  return out;
}

}  // namespace rps
