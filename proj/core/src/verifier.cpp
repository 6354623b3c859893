#include "rpsforge/verifier.hpp"

#include <algorithm>

namespace rps {

namespace {

void require_role_shape(Role role, unsigned k, unsigned t) {
  if (k < 1) throw DomainError("scenario needs k >= 1 mixed players");
  if (needs_pure_p_players(role) && t == 0) throw DomainError(to_string(role) + " needs t >= 1 pure-P players");
}

void require_probability(const Rational& q, const char* name) {
  if (q < 0 || q > 1) throw DomainError(std::string(name) + " must lie in [0, 1], got " + to_string(q));
}

// A_K(r) = sum_{b=0}^{K} C(K,b) / C(k+t,b) r^b
Rational a_series(unsigned big_k, unsigned k, unsigned t, const Rational& r) {
  Rational acc = 0;
  for (unsigned b = 0; b <= big_k; ++b) acc += ratio(binomial(big_k, b), binomial(k + t, b)) * power(r, b);
  return acc;
}

Polynomial2 a_series_poly(unsigned big_k, unsigned k, unsigned t) {
  Polynomial2 acc;
  Polynomial2 rb = Polynomial2::constant(1);
  for (unsigned b = 0; b <= big_k; ++b) {
    acc += rb * ratio(binomial(big_k, b), binomial(k + t, b));
    rb = rb * Polynomial2::r();
  }
  return acc;
}

// (1 - (1-r)^e) / (e r), with its limit 1 at r = 0.
Rational win_share(unsigned e, const Rational& r) {
  if (r == 0) return 1;
  return (1 - power(Rational(1 - r), e)) / (Rational(e) * r);
}

// Distribution of how many of the given players choose R.
std::vector<Rational> count_distribution(std::span<const Rational> probs) {
  const std::size_t n = probs.size();
  std::vector<Rational> dist(n + 1, Rational(0));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Rational p = 1;
    unsigned chosen = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (mask >> j & 1u) {
        p *= probs[j];
        ++chosen;
      } else {
        p *= 1 - probs[j];
      }
    }
    dist[chosen] += p;
  }
  return dist;
}

}  // namespace

std::string to_string(Role role) {
  switch (role) {
    case Role::IR: return "i_R";
    case Role::IP: return "i_P";
    case Role::IS: return "i_S";
    case Role::SP: return "s_P";
    case Role::SS: return "s_S";
    case Role::PR: return "p_R";
    case Role::PP: return "p_P";
    case Role::PS: return "p_S";
  }
  return "?";
}

std::optional<Role> parse_role(std::string_view text) {
  for (Role r : kAllRoles) {
    if (to_string(r) == text) return r;
  }
  return std::nullopt;
}

bool needs_pure_p_players(Role role) { return role == Role::PR || role == Role::PP || role == Role::PS; }

void ScenarioParams::validate() const {
  if (k < 1) throw DomainError("scenario needs k >= 1 mixed players");
  require_probability(r, "r");
  require_probability(s, "s");
}

Rational ev_simplified(Role role, const ScenarioParams& params) {
  params.validate();
  require_role_shape(role, params.k, params.t);
  const unsigned k = params.k, t = params.t;
  const Rational m(params.players());
  const Rational& r = params.r;
  const Rational& s = params.s;
  const Rational half_split = (2 - s) * m / 2;
  switch (role) {
    case Role::IR: return s * m * win_share(k, r) - 1;
    case Role::IP: return (1 - s) * a_series(k - 1, k, t, r) - 1;
    case Role::IS: return half_split * power(Rational(1 - r), k - 1) - 1;
    case Role::SP: return a_series(k, k, t, r) - 1;
    case Role::SS: return m * power(Rational(1 - r), k) - 1;
    case Role::PR: return s * m * win_share(k + 1, r) - 1;
    case Role::PP: return (1 - s) * a_series(k, k, t, r) - 1;
    case Role::PS: return half_split * power(Rational(1 - r), k) - 1;
  }
  throw DomainError("unknown role");
}

Rational ev_raw_oracle(Role role, unsigned k, unsigned t, std::span<const Rational> r_vec, const Rational& s) {
  require_role_shape(role, k, t);
  if (r_vec.size() != k) throw DomainError("r_vec must have k entries");
  if (k > kMaxOracleMixedPlayers) {
    throw ScaleError("subset enumeration limited to " + std::to_string(kMaxOracleMixedPlayers) + " mixed players");
  }
  for (const auto& r : r_vec) require_probability(r, "r_i");
  require_probability(s, "s");

  const unsigned m = k + t + 1;
  const bool focal = role == Role::IR || role == Role::IP || role == Role::IS;
  // dist[j]: probability that exactly j of the relevant mixed players choose R
  // (the focal one excluded for i roles).
  const auto dist = count_distribution(focal ? r_vec.subspan(1) : r_vec);
  const unsigned n = static_cast<unsigned>(dist.size() - 1);
  const Rational none_r = dist[0];
  const auto split = [&](unsigned winners) { return tie_payoff(m, winners); };

  Rational acc = 0;
  switch (role) {
    case Role::IR:
    case Role::PR:
      // With the S-player on S, R wins and shares with the other R choosers.
      for (unsigned j = 0; j <= n; ++j) acc += s * split(j + 1) * dist[j];
      return acc - (1 - s);
    case Role::IP:
      // With the S-player on P, every P chooser wins; all-P is a full tie.
      for (unsigned j = 0; j <= n; ++j) acc += (1 - s) * split(n - j + t + 2) * dist[j];
      return acc - s;
    case Role::PP:
      for (unsigned j = 0; j <= n; ++j) acc += (1 - s) * split(n - j + t + 1) * dist[j];
      return acc - s;
    case Role::SP:
      for (unsigned j = 0; j <= n; ++j) acc += split(n - j + t + 1) * dist[j];
      return acc;
    case Role::SS:
      return none_r * split(1) - (1 - none_r);
    case Role::IS:
    case Role::PS:
      return none_r * ((1 - s) * split(1) + s * split(2)) - (1 - none_r);
  }
  throw DomainError("unknown role");
}

IdentityCheck identity_check(unsigned k, unsigned t, unsigned b) {
  if (b >= k) throw DomainError("identity_check needs b < k");
  const unsigned m = k + t + 1;
  IdentityCheck out;
  for (unsigned j = 0; j <= b; ++j) {
    const Rational c(binomial(b, j));
    const Rational sign = (j % 2 == 0) ? 1 : -1;
    const Rational sign_rev = ((b - j) % 2 == 0) ? 1 : -1;
    out.first_sum += sign * c * ratio(m, j + 1);
    out.second_sum += sign_rev * c * ratio(m, m - j);
    out.loss_term -= sign * c;
  }
  out.first_closed = ratio(m, b + 1);
  out.second_closed = ratio(1, binomial(m - 1, b));
  return out;
}

CornerValue corner_value(unsigned k, unsigned t, unsigned l, unsigned s_corner) {
  if (k < 2 || l > k - 2) throw DomainError("corner_value needs l <= k - 2");
  if (s_corner > 1) throw DomainError("s_corner must be 0 or 1");
  const unsigned m = k + t + 1;
  const Rational s(s_corner);
  CornerValue out;
  for (unsigned b = 1; b <= l + 1; ++b) {
    const Rational sign = (b % 2 == 0) ? 1 : -1;
    const Rational coeff = s * sign * ratio(m, b + 1) - (1 - s) * ratio(1, binomial(m - 1, b));
    out.sum += coeff * Rational(binomial(l, b - 1));
  }
  if (s_corner == 0) {
    out.closed_form = -ratio(m, BigInt(m - 1 - l) * (m - l));
  } else {
    out.closed_form = -ratio(m, BigInt(l + 1) * (l + 2));
  }
  return out;
}

Polynomial2 clearing_factor(Role role, unsigned k) {
  if (role == Role::IR) return Polynomial2::r() * Rational(k);
  if (role == Role::PR) return Polynomial2::r() * Rational(k + 1);
  return Polynomial2::constant(1);
}

Polynomial2 ev_polynomial(Role role, unsigned k, unsigned t) {
  require_role_shape(role, k, t);
  const Rational m(k + t + 1);
  const Polynomial2 one = Polynomial2::constant(1);
  const Polynomial2 s = Polynomial2::s();
  const Polynomial2 half_split = (Polynomial2::constant(2) - s) * (m / 2);
  switch (role) {
    case Role::IR:
      return s * (one - Polynomial2::linear_power_r(1, -1, k)) * m - Polynomial2::r() * Rational(k);
    case Role::IP: return (one - s) * a_series_poly(k - 1, k, t) - one;
    case Role::IS: return half_split * Polynomial2::linear_power_r(1, -1, k - 1) - one;
    case Role::SP: return a_series_poly(k, k, t) - one;
    case Role::SS: return Polynomial2::linear_power_r(1, -1, k) * m - one;
    case Role::PR:
      return s * (one - Polynomial2::linear_power_r(1, -1, k + 1)) * m - Polynomial2::r() * Rational(k + 1);
    case Role::PP: return (one - s) * a_series_poly(k, k, t) - one;
    case Role::PS: return half_split * Polynomial2::linear_power_r(1, -1, k) - one;
  }
  throw DomainError("unknown role");
}

std::vector<Constraint> constraint_system(unsigned k, unsigned t) {
  if (k < 1) throw DomainError("constraint_system needs k >= 1");
  std::vector<Constraint> out;
  out.push_back({"kr*(E_i(P) - E_i(R)) = 0", ConstraintKind::Equality,
                 clearing_factor(Role::IR, k) * ev_polynomial(Role::IP, k, t) - ev_polynomial(Role::IR, k, t)});
  out.push_back({"E_s(S) - E_s(P) = 0", ConstraintKind::Equality,
                 ev_polynomial(Role::SS, k, t) - ev_polynomial(Role::SP, k, t)});
  out.push_back({"E_i(P) - E_i(S) >= 0", ConstraintKind::Inequality,
                 ev_polynomial(Role::IP, k, t) - ev_polynomial(Role::IS, k, t)});
  if (t > 0) {
    out.push_back({"(k+1)r*(E_p(P) - E_p(R)) >= 0", ConstraintKind::Inequality,
                   clearing_factor(Role::PR, k) * ev_polynomial(Role::PP, k, t) - ev_polynomial(Role::PR, k, t)});
    out.push_back({"E_p(P) - E_p(S) >= 0", ConstraintKind::Inequality,
                   ev_polynomial(Role::PP, k, t) - ev_polynomial(Role::PS, k, t)});
  }
  return out;
}

bool SadRatioReport::all_hold() const {
  return std::all_of(entries.begin(), entries.end(), [](const SadRatioEntry& e) { return e.holds; });
}

SadRatioReport sad_ratio_check(const GameRule& rule, const MixedProfile& profile, unsigned m) {
  const auto& levels = rule.metadata().levels;
  if (!levels) throw DomainError("sad_ratio_check needs a rule with a level map");
  if (m != rule.players()) throw DomainError("m does not match the rule's player count");
  profile.check_against(rule);

  std::size_t deepest_p = 0;
  for (std::size_t o = 0; o < rule.object_count(); ++o) {
    if (levels->kind[o] == ObjectKind::PType && levels->level[o] == levels->depth) deepest_p = o;
  }

  const PayoffTable table(rule);
  SadRatioReport out;
  out.players = m;
  out.threshold = static_cast<double>(m) - 1.0;
  out.nash_gap = nash_gap(table, profile).gap;

  for (std::size_t i = 0; i < profile.players(); ++i) {
    const auto& x = profile.strategy(i);
    SadRatioEntry e;
    e.player = i;
    for (std::size_t o = 0; o < x.size(); ++o) {
      if (levels->kind[o] == ObjectKind::PType) e.p_type += x[o];
      if (levels->kind[o] == ObjectKind::Leaf) e.leaf += x[o];
    }
    e.vacuous = e.leaf <= kVacuousLeafProbability;
    if (!e.vacuous) e.ratio = e.p_type / e.leaf;
    e.holds = e.vacuous || *e.ratio >= out.threshold;

    const auto dist = table.opponent_distribution(profile, i);
    const auto& opponents = table.opponent_multisets();
    double win_mass = 0, tie_mass = 0;
    for (std::size_t c = 0; c < opponents.size(); ++c) {
      if (dist[c] == 0) continue;
      auto counts = opponents[c];
      const unsigned others = counts[deepest_p];
      ++counts[deepest_p];
      const Outcome outcome = eval_outcome(rule, ChoiceMultiset(std::move(counts)));
      if (outcome.is_tie() || outcome.winner->index == deepest_p) {
        win_mass += dist[c];
        tie_mass += dist[c] * others;
      }
    }
    if (win_mass > 0) e.tie_probe = tie_mass / win_mass;
    out.entries.push_back(e);
  }
  return out;
}

}  // namespace rps
