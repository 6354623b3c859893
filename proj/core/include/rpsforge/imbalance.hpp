#pragma once

// Imbalance statistics over uniform expected payoffs and equilibria, and
// majorization comparisons between games.

#include "rpsforge/equilibrium.hpp"
#include "rpsforge/game.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rps {

/// Equal-weight distribution over one value per object.
class PayoffDistribution {
 public:
  explicit PayoffDistribution(std::vector<Rational> values);
  static PayoffDistribution from_doubles(std::span<const double> values);
  static PayoffDistribution uniform_payoffs(const GameRule& rule);

  const std::vector<Rational>& values() const { return values_; }
  std::vector<double> as_doubles() const;
  std::size_t size() const { return values_.size(); }
  Rational mean() const;

 private:
  std::vector<Rational> values_;
};

/// Population variance, exact.
Rational ui_variance(const PayoffDistribution& d);

/// Shannon entropy of the atoms obtained by merging values within merge_tol.
double ui_entropy(const PayoffDistribution& d, double merge_tol = 1e-9);

/// Theil-T index after the positive affine map sending mean to 1 and min to
/// alpha. Constant inputs give 0.
double theil_alpha(const PayoffDistribution& d, double alpha);

enum class EntropySelection { Max, Min };

/// Sum over players of Shannon entropy, maximized (or minimized) over the
/// supplied equilibria. Relative to the list, not to all equilibria.
double nash_entropy_imbalance(std::span<const MixedProfile> equilibria,
                              EntropySelection selection = EntropySelection::Max);

/// min over the supplied symmetric profiles of sum_o v_o^m.
double nash_ties_imbalance(std::span<const std::vector<double>> symmetric_equilibria, unsigned players);

/// Thrown when an equilibrium-based statistic receives no equilibria.
class Inconclusive : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Majorization { Majorizes, MajorizedBy, Equal, Incomparable };

std::string to_string(Majorization m);

/// Compares descending prefix sums; totals must agree within `tol`.
Majorization majorizes(std::span<const double> a, std::span<const double> b, double tol = 1e-12);

/// Exact variant.
Majorization majorizes(std::span<const Rational> a, std::span<const Rational> b);

enum class Statistic { Variance, Entropy, Theil };

struct StatisticValue {
  Statistic statistic = Statistic::Variance;
  double alpha = 0.0;  // Theil only
  double first = 0.0;
  double second = 0.0;
  /// Whether first >= second matches the majorization direction; unset for
  /// Incomparable pairs and for entropy, which is not Schur-monotone.
  std::optional<bool> agrees_with_majorization;
};

struct SchurComparison {
  std::vector<Rational> first_payoffs;
  std::vector<Rational> second_payoffs;
  Majorization relation = Majorization::Incomparable;
  std::vector<StatisticValue> statistics;
};

struct StatisticSet {
  bool variance = true;
  bool entropy = true;
  std::vector<double> theil_alphas{0.25, 0.5, 0.75};
  double merge_tol = 1e-9;
};

/// Throws DomainError when the games have different object counts.
SchurComparison schur_compare(const GameRule& first, const GameRule& second, const StatisticSet& set = {});

}  // namespace rps
