#pragma once

// Expected values for the k/t/S-player scenario, their raw oracles, binomial
// identities, corner values, the polynomial constraint system and
// infeasibility certificates, and the sad-player ratio check.

#include "rpsforge/equilibrium.hpp"
#include "rpsforge/game.hpp"
#include "rpsforge/interval.hpp"
#include "rpsforge/polynomial.hpp"
#include "rpsforge/rational.hpp"

#include <array>
#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rps {

/// Player class (i: mixed R/P player, s: the S-player, p: pure-P player)
/// crossed with the pure strategy evaluated.
enum class Role { IR, IP, IS, SP, SS, PR, PP, PS };

inline constexpr std::array<Role, 8> kAllRoles = {Role::IR, Role::IP, Role::IS, Role::SP,
                                                  Role::SS, Role::PR, Role::PP, Role::PS};

std::string to_string(Role role);  // "i_R", "s_P", ...
std::optional<Role> parse_role(std::string_view text);
bool needs_pure_p_players(Role role);

/// k mixed players play R with probability r (P otherwise), t players play P,
/// one player plays S with probability s (P otherwise). m = k + t + 1.
struct ScenarioParams {
  unsigned k = 1;
  unsigned t = 0;
  Rational r = 0;
  Rational s = 0;

  unsigned players() const { return k + t + 1; }
  void validate() const;
};

/// Thrown when a brute-force oracle is asked for more than it can enumerate.
class ScaleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Closed-form expected payoff. i_R and p_R at r = 0 use their limits.
Rational ev_simplified(Role role, const ScenarioParams& params);

/// Expected payoff from the raw winner-count sums with per-player R
/// probabilities; the focal mixed player (i roles) is r_vec[0].
Rational ev_raw_oracle(Role role, unsigned k, unsigned t, std::span<const Rational> r_vec, const Rational& s);

inline constexpr unsigned kMaxOracleMixedPlayers = 20;

struct IdentityCheck {
  Rational first_sum, first_closed;    // sum_j (-1)^j C(b,j) m/(j+1)  vs  m/(b+1)
  Rational second_sum, second_closed;  // sum_j (-1)^(b-j) C(b,j) m/(m-j)  vs  1/C(m-1,b)
  Rational loss_term;                  // contribution of the -1 losing payoff: -[b == 0]

  bool first_holds() const { return first_sum == first_closed; }
  bool second_holds() const { return second_sum == second_closed; }
};

/// Requires b < k.
IdentityCheck identity_check(unsigned k, unsigned t, unsigned b);

struct CornerValue {
  Rational sum;
  Rational closed_form;

  bool agrees() const { return sum == closed_form; }
};

/// Coefficient sum of the i-player's R/P indifference at the corner s = 0
/// or s = 1, level l. Requires l <= k - 2 and s_corner in {0, 1}.
CornerValue corner_value(unsigned k, unsigned t, unsigned l, unsigned s_corner);

/// Exact polynomial of a role's expected payoff in (r, s). i_R is multiplied
/// by kr and p_R by (k+1)r; every other role is returned as is.
Polynomial2 ev_polynomial(Role role, unsigned k, unsigned t);
/// The factor ev_polynomial applied: kr, (k+1)r or 1.
Polynomial2 clearing_factor(Role role, unsigned k);

enum class ConstraintKind { Equality, Inequality };

struct Constraint {
  std::string name;
  ConstraintKind kind = ConstraintKind::Equality;
  Polynomial2 poly;  // Equality: poly = 0, Inequality: poly >= 0
};

/// Equilibrium conditions for the scenario, equalities first.
std::vector<Constraint> constraint_system(unsigned k, unsigned t);

enum class Verdict { ProvedEmpty, Undecided };
std::string to_string(Verdict v);

struct CertificateOptions {
  double delta = 1e-6;
  unsigned max_depth = 48;
  std::size_t max_boxes = 20'000'000;
  std::size_t max_reported = 32;  // surviving boxes kept in the certificate
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct InfeasibilityCertificate {
  unsigned k = 0, t = 0;
  Verdict verdict = Verdict::Undecided;
  double delta = 0;
  std::size_t boxes = 0;              // boxes examined
  std::size_t undecided_boxes = 0;    // boxes left unpruned
  unsigned max_depth = 0;             // deepest box examined
  bool budget_exhausted = false;
  double millis = 0;
  std::vector<Box> surviving;         // first max_reported undecided boxes
  std::vector<std::size_t> pruned_by; // per constraint
};

/// Branch-and-prune of `system` over [delta, 1-delta]^2.
InfeasibilityCertificate certify_empty(std::span<const Constraint> system, const CertificateOptions& options);

/// Certificate for constraint_system(k, t). Requires 0 < delta <= 0.01 and
/// max_depth <= 60.
InfeasibilityCertificate infeasibility_certificate(unsigned k, unsigned t, const CertificateOptions& options = {});

struct SweepOptions {
  unsigned k_max = 12;
  unsigned t_max = 12;
  double delta = 1e-6;
  unsigned max_depth = 48;
  double budget_seconds = 600;
  unsigned jobs = 1;
};

struct SweepReport {
  std::vector<InfeasibilityCertificate> certificates;  // ordered by (k, t)
  std::size_t expected = 0;
  bool complete = false;
  double millis = 0;

  bool all_proved() const;
};

/// Certificates for 1 <= k <= k_max, 0 <= t <= t_max. Pairs not finished
/// within the budget are missing and the report is flagged incomplete.
SweepReport sweep(const SweepOptions& options,
                  const std::function<void(const InfeasibilityCertificate&)>& progress = {});

struct SadRatioEntry {
  std::size_t player = 0;
  double p_type = 0;  // total probability on P-type objects
  double leaf = 0;    // probability on the leaf object
  std::optional<double> ratio;
  bool vacuous = false;  // leaf probability is zero
  bool holds = false;    // vacuous or ratio >= m - 1
  // Expected number of other players on the deepest P object, given the
  // player chose it and it won. Informational only.
  std::optional<double> tie_probe;
};

struct SadRatioReport {
  unsigned players = 0;
  double threshold = 0;  // m - 1
  double nash_gap = 0;
  std::vector<SadRatioEntry> entries;

  bool all_hold() const;
};

inline constexpr double kVacuousLeafProbability = 1e-15;

/// Requires a level map on `rule` and m == rule.players().
SadRatioReport sad_ratio_check(const GameRule& rule, const MixedProfile& profile, unsigned m);

}  // namespace rps
