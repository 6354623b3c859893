#include "rpsforge_cli/commands.hpp"

#include "rpsforge/construct.hpp"
#include "rpsforge/equilibrium.hpp"
#include "rpsforge/game_io.hpp"
#include "rpsforge/imbalance.hpp"
#include "rpsforge/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>

namespace rps::cli {

namespace {

using Clock = std::chrono::steady_clock;

double since_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Json rationals(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string fixed_list(const std::vector<double>& xs) {
  std::vector<std::string> parts;
  for (double x : xs) parts.push_back(fixed6(x));
  return join(parts, " ");
}

GameRule load_source(const GameSource& source) {
  if (source.path) return load_game(*source.path);
  return build_family(source.family, source.m, source.k);
}

Json source_echo(const GameSource& source) {
  Json j;
  if (source.path) {
    j["game"] = *source.path;
  } else {
    j["family"] = source.family;
    j["m"] = source.m;
    j["k"] = source.k;
  }
  return j;
}

Json certificate_json(const InfeasibilityCertificate& c) {
  Json j;
  j["k"] = c.k;
  j["t"] = c.t;
  j["verdict"] = to_string(c.verdict);
  j["delta"] = c.delta;
  j["boxes"] = c.boxes;
  j["depth"] = c.max_depth;
  if (c.verdict == Verdict::Undecided) {
    j["undecided_boxes"] = c.undecided_boxes;
    j["budget_exhausted"] = c.budget_exhausted;
    Json boxes = Json::array();
    for (const auto& b : c.surviving) boxes.push_back({{"r", {b.r.lo, b.r.hi}}, {"s", {b.s.lo, b.s.hi}}});
    j["surviving"] = boxes;
  }
  return j;
}

std::vector<std::string> certificate_row(const InfeasibilityCertificate& c) {
  return {std::to_string(c.k), std::to_string(c.t), to_string(c.verdict), std::to_string(c.boxes),
          std::to_string(c.max_depth), fixed6(c.millis)};
}

const std::vector<std::string> kCertificateColumns = {"k", "t", "verdict", "boxes", "depth", "millis"};

}  // namespace

Json RunConfig::echo() const {
  Json j;
  j["seed"] = seed;
  j["tol"] = tol;
  j["alpha"] = alphas;
  j["delta"] = delta;
  return j;
}

std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

std::string scientific(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

std::string version() { return RPS_FORGE_VERSION; }

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

GameRule build_family(const std::string& family, unsigned m, unsigned k) {
  if (m < 2) throw UsageError("--m must be at least 2");
  if (family == "imbalanced3") return imbalanced_rps3(m);
  if (family == "maximal3") return maximal_rps3(m);
  if (family == "odd-one-out") return odd_one_out(m);
  if (k < 1) throw UsageError("--k must be at least 1");
  if (family == "imbalanced") return imbalanced_rps(m, k);
  if (family == "blowup") return iterated_blowup(m, k);
  throw UsageError("unknown family '" + family + "'");
}

CommandResult cmd_game_build(const GameSource& source, const std::string& out_path) {
  const GameRule rule = load_source(source);
  save_game(rule, out_path);

  CommandResult r;
  r.command = "game build";
  r.config = source_echo(source);
  r.config["out"] = out_path;
  const auto table = tabulate(rule);
  r.payload["construction"] = rule.metadata().construction;
  r.payload["players"] = rule.players();
  r.payload["objects"] = rule.labels();
  r.payload["multisets"] = table.size();
  r.payload["path"] = out_path;
  r.table.columns = {"construction", "players", "objects", "multisets", "path"};
  r.table.rows.push_back({rule.metadata().construction, std::to_string(rule.players()), join(rule.labels(), ","),
                          std::to_string(table.size()), out_path});
  return r;
}

CommandResult cmd_nash(const GameSource& source, const std::string& mode, const RunConfig& config) {
  if (mode != "symmetric" && mode != "search") throw UsageError("--mode must be symmetric or search");
  CommandResult r;
  r.command = "nash";
  r.config = source_echo(source);
  r.config["mode"] = mode;
  r.config.update(config.echo());
  const auto start = Clock::now();

  const GameRule rule = load_source(source);
  r.payload["mode"] = mode;
  r.payload["players"] = rule.players();
  r.payload["objects"] = rule.labels();

  if (mode == "symmetric" && !source.path && source.family == "imbalanced3") {
    const auto eq = solve_symmetric_rps3(source.m);
    const std::vector<double> x{eq.r, eq.p, eq.s};
    const auto gap = nash_gap(rule, MixedProfile::symmetric(rule.players(), x));
    r.payload["method"] = "nested-bisection";
    r.payload["strategy"] = x;
    r.payload["residuals"] = {{"rp", eq.residual_rp}, {"ps", eq.residual_ps}};
    r.payload["nash_gap"] = gap.gap;
    r.payload["expected_winners"] = expected_winner_count(rule, x);
    r.ok = gap.is_epsilon_nash(config.tol);
    r.table.columns = {"m", "r", "p", "s", "nash_gap", "expected_winners"};
    r.table.rows.push_back({std::to_string(eq.players), fixed6(eq.r), fixed6(eq.p), fixed6(eq.s),
                            scientific(gap.gap), fixed6(expected_winner_count(rule, x))});
    r.timing["millis"] = since_ms(start);
    return r;
  }

  SearchConfig sc;
  sc.seed = config.seed;
  sc.eps = config.tol;
  const auto found = search_equilibria(rule, sc);
  std::vector<FoundEquilibrium> kept;
  for (const auto& eq : found.equilibria) {
    if (mode == "search" || eq.profile.is_symmetric()) kept.push_back(eq);
  }

  r.payload["method"] = mode == "search" ? "multistart-search" : "multistart-search, symmetric profiles only";
  r.payload["exhaustive"] = false;
  Json list = Json::array();
  r.table.columns = {"index", "player", "strategy", "nash_gap", "origin"};
  for (std::size_t i = 0; i < kept.size(); ++i) {
    const auto& eq = kept[i];
    list.push_back({{"strategies", eq.profile.strategies()}, {"nash_gap", eq.report.gap}, {"origin", eq.origin}});
    for (std::size_t p = 0; p < eq.profile.players(); ++p) {
      r.table.rows.push_back({std::to_string(i), std::to_string(p), fixed_list(eq.profile.strategy(p)),
                              scientific(eq.report.gap), eq.origin});
    }
  }
  r.payload["equilibria"] = list;
  r.payload["trace"] = {{"supports_tried", found.trace.supports_tried},
                        {"symmetric_found", found.trace.symmetric_found},
                        {"starts_run", found.trace.starts_run},
                        {"starts_converged", found.trace.starts_converged},
                        {"candidates_rejected", found.trace.candidates_rejected}};
  if (!kept.empty()) {
    const auto play = classify_playability(rule, kept, 2);
    r.payload["playability"] = {{"k", play.k},
                                {"playable", play.playable},
                                {"k_playable", play.k_playable},
                                {"weakly_playable", play.weakly_playable},
                                {"strongly_no_counterexample", play.strongly_no_counterexample},
                                {"k_strongly_no_counterexample", play.k_strongly_no_counterexample},
                                {"exhaustive", play.exhaustive}};
  }
  r.ok = !kept.empty();
  if (kept.empty()) r.notes.push_back("inconclusive: no equilibrium passed the nash_gap threshold");
  r.notes.push_back("search results are evidence from a finite list, not an exhaustive enumeration");
  r.timing["millis"] = since_ms(start);
  return r;
}

CommandResult cmd_imbalance(const std::vector<std::string>& paths, const RunConfig& config) {
  if (paths.empty() || paths.size() > 2) throw UsageError("imbalance takes one or two game files");
  CommandResult r;
  r.command = "imbalance";
  r.config["games"] = paths;
  r.config.update(config.echo());

  std::vector<GameRule> rules;
  for (const auto& p : paths) rules.push_back(load_game(p));

  r.table.columns = {"game", "statistic", "value"};
  Json games = Json::array();
  for (std::size_t g = 0; g < rules.size(); ++g) {
    const auto d = PayoffDistribution::uniform_payoffs(rules[g]);
    Json j;
    j["path"] = paths[g];
    j["players"] = rules[g].players();
    j["objects"] = rules[g].labels();
    j["uniform_payoffs"] = rationals(d.values());
    j["ui_variance"] = to_string(ui_variance(d));
    j["ui_entropy"] = ui_entropy(d);
    Json theil = Json::array();
    for (double a : config.alphas) theil.push_back({{"alpha", a}, {"value", theil_alpha(d, a)}});
    j["theil"] = theil;
    games.push_back(j);

    const std::string name = paths[g];
    std::vector<std::string> f;
    for (const auto& v : d.values()) f.push_back(to_string(v));
    r.table.rows.push_back({name, "F", join(f, " ")});
    r.table.rows.push_back({name, "ui_variance", to_string(ui_variance(d))});
    r.table.rows.push_back({name, "ui_entropy", fixed6(ui_entropy(d))});
    for (double a : config.alphas) r.table.rows.push_back({name, "theil(" + fixed6(a) + ")", fixed6(theil_alpha(d, a))});
  }
  r.payload["games"] = games;

  if (rules.size() == 2) {
    StatisticSet set;
    set.theil_alphas = config.alphas;
    const auto cmp = schur_compare(rules[0], rules[1], set);
    Json stats = Json::array();
    for (const auto& s : cmp.statistics) {
      const char* name = s.statistic == Statistic::Variance ? "variance"
                         : s.statistic == Statistic::Entropy ? "entropy"
                                                              : "theil";
      Json js{{"statistic", name}, {"first", s.first}, {"second", s.second}};
      if (s.statistic == Statistic::Theil) js["alpha"] = s.alpha;
      if (s.agrees_with_majorization) {
        js["agrees_with_majorization"] = *s.agrees_with_majorization;
        if (!*s.agrees_with_majorization) {
          r.notes.push_back(std::string(name) + (s.statistic == Statistic::Theil ? "(" + fixed6(s.alpha) + ")" : "") +
                            " orders the games against the majorization relation");
        }
      } else {
        js["agrees_with_majorization"] = nullptr;
      }
      stats.push_back(js);
    }
    r.payload["comparison"] = {{"relation", to_string(cmp.relation)}, {"statistics", stats}};
    r.table.rows.push_back({"first vs second", "majorization", to_string(cmp.relation)});
  }
  return r;
}

CommandResult cmd_verify_identities(unsigned k_max, unsigned t_max) {
  CommandResult r;
  r.command = "verify identities";
  r.config = {{"kmax", k_max}, {"tmax", t_max}};
  const auto start = Clock::now();
  std::size_t checks = 0, first_fail = 0, second_fail = 0, loss_off_b0 = 0;
  Json failures = Json::array();
  for (unsigned k = 1; k <= k_max; ++k) {
    for (unsigned t = 0; t <= t_max; ++t) {
      for (unsigned b = 0; b < k; ++b) {
        const auto c = identity_check(k, t, b);
        ++checks;
        if (!c.first_holds()) ++first_fail;
        if (!c.second_holds()) ++second_fail;
        if (c.loss_term != (b == 0 ? Rational(-1) : Rational(0))) ++loss_off_b0;
        if ((!c.first_holds() || !c.second_holds()) && failures.size() < 20) {
          failures.push_back({{"k", k}, {"t", t}, {"b", b}});
        }
      }
    }
  }
  r.payload = {{"checks", checks},
               {"first_failures", first_fail},
               {"second_failures", second_fail},
               {"loss_term_outside_b0", loss_off_b0},
               {"failures", failures}};
  r.ok = first_fail == 0 && second_fail == 0 && loss_off_b0 == 0;
  r.table.columns = {"identity", "checks", "failures"};
  r.table.rows = {{"sum (-1)^j C(b,j) m/(j+1) = m/(b+1)", std::to_string(checks), std::to_string(first_fail)},
                  {"sum (-1)^(b-j) C(b,j) m/(m-j) = 1/C(m-1,b)", std::to_string(checks), std::to_string(second_fail)},
                  {"losing term = -[b=0]", std::to_string(checks), std::to_string(loss_off_b0)}};
  r.timing["millis"] = since_ms(start);
  return r;
}

CommandResult cmd_verify_corners(unsigned k_max, unsigned t_max) {
  CommandResult r;
  r.command = "verify corners";
  r.config = {{"kmax", k_max}, {"tmax", t_max}};
  std::size_t checks = 0, mismatched = 0, nonnegative = 0;
  Json failures = Json::array();
  for (unsigned k = 2; k <= k_max; ++k) {
    for (unsigned t = 0; t <= t_max; ++t) {
      for (unsigned l = 0; l + 2 <= k; ++l) {
        for (unsigned s = 0; s <= 1; ++s) {
          const auto c = corner_value(k, t, l, s);
          ++checks;
          const bool bad_match = !c.agrees();
          const bool bad_sign = c.sum >= 0;
          mismatched += bad_match;
          nonnegative += bad_sign;
          if ((bad_match || bad_sign) && failures.size() < 20) {
            failures.push_back({{"k", k}, {"t", t}, {"l", l}, {"s", s}, {"sum", to_string(c.sum)},
                                {"closed_form", to_string(c.closed_form)}});
          }
        }
      }
    }
  }
  r.payload = {{"checks", checks}, {"closed_form_mismatches", mismatched}, {"nonnegative", nonnegative},
               {"failures", failures}};
  r.ok = mismatched == 0 && nonnegative == 0;
  r.table.columns = {"checks", "closed_form_mismatches", "nonnegative"};
  r.table.rows = {{std::to_string(checks), std::to_string(mismatched), std::to_string(nonnegative)}};
  return r;
}

CommandResult cmd_verify_formulas(unsigned k_max, unsigned t_max, unsigned trials, const RunConfig& config) {
  if (k_max < 1) throw UsageError("--kmax must be at least 1");
  if (k_max > kMaxOracleMixedPlayers) throw UsageError("--kmax is limited by subset enumeration");
  CommandResult r;
  r.command = "verify formulas";
  r.config = {{"kmax", k_max}, {"tmax", t_max}, {"trials", trials}};
  r.config.update(config.echo());

  std::mt19937_64 rng(config.seed);
  const auto uniform = [&](std::uint64_t lo, std::uint64_t hi) { return lo + rng() % (hi - lo + 1); };
  // Rational in (0, 1) with denominator up to 1000.
  const auto open_unit = [&] {
    const auto den = uniform(2, 1000);
    return ratio(BigInt(static_cast<unsigned long>(uniform(1, den - 1))), BigInt(static_cast<unsigned long>(den)));
  };

  Json roles = Json::array();
  r.table.columns = {"role", "trials", "failures"};
  for (Role role : kAllRoles) {
    const bool needs_p = needs_pure_p_players(role);
    if (needs_p && t_max == 0) continue;
    unsigned failures = 0;
    Json first_failure;
    for (unsigned i = 0; i < trials; ++i) {
      ScenarioParams p;
      p.k = static_cast<unsigned>(uniform(1, k_max));
      p.t = static_cast<unsigned>(uniform(needs_p ? 1 : 0, t_max));
      p.r = open_unit();
      p.s = open_unit();
      const std::vector<Rational> r_vec(p.k, p.r);
      const Rational simplified = ev_simplified(role, p);
      const Rational raw = ev_raw_oracle(role, p.k, p.t, r_vec, p.s);
      if (simplified != raw) {
        if (failures == 0) {
          first_failure = {{"k", p.k}, {"t", p.t}, {"r", to_string(p.r)}, {"s", to_string(p.s)},
                           {"simplified", to_string(simplified)}, {"raw", to_string(raw)}};
        }
        ++failures;
      }
    }
    Json j{{"role", to_string(role)}, {"trials", trials}, {"failures", failures}};
    if (failures) j["first_failure"] = first_failure;
    roles.push_back(j);
    r.table.rows.push_back({to_string(role), std::to_string(trials), std::to_string(failures)});
    if (failures) r.ok = false;
  }
  r.payload["roles"] = roles;
  return r;
}

CommandResult cmd_verify_infeasibility(unsigned k, unsigned t, unsigned max_depth, const RunConfig& config) {
  CommandResult r;
  r.command = "verify infeasibility";
  r.config = {{"k", k}, {"t", t}, {"max_depth", max_depth}};
  r.config.update(config.echo());
  CertificateOptions options;
  options.delta = config.delta;
  options.max_depth = max_depth;
  const auto system = constraint_system(k, t);
  const auto cert = infeasibility_certificate(k, t, options);

  r.payload["certificate"] = certificate_json(cert);
  Json constraints = Json::array();
  for (std::size_t i = 0; i < system.size(); ++i) {
    constraints.push_back({{"name", system[i].name},
                           {"kind", system[i].kind == ConstraintKind::Equality ? "equality" : "inequality"},
                           {"pruned_boxes", cert.pruned_by[i]}});
  }
  r.payload["constraints"] = constraints;
  r.timing["millis"] = cert.millis;
  r.ok = cert.verdict == Verdict::ProvedEmpty;
  r.table.columns = kCertificateColumns;
  r.table.rows.push_back(certificate_row(cert));
  r.notes.push_back("region examined: [" + std::to_string(cert.delta) + ", 1 - " + std::to_string(cert.delta) +
                    "]^2 in (r, s)");
  return r;
}

CommandResult cmd_verify_sweep(unsigned k_max, unsigned t_max, unsigned max_depth, double budget_seconds,
                               const RunConfig& config) {
  CommandResult r;
  r.command = "verify sweep";
  r.config = {{"kmax", k_max}, {"tmax", t_max}, {"max_depth", max_depth}, {"budget_seconds", budget_seconds}};
  r.config.update(config.echo());
  SweepOptions options;
  options.k_max = k_max;
  options.t_max = t_max;
  options.delta = config.delta;
  options.max_depth = max_depth;
  options.budget_seconds = budget_seconds;
  options.jobs = config.jobs;
  const auto report = sweep(options);

  Json records = Json::array();
  Json millis = Json::array();
  std::size_t proved = 0;
  r.table.columns = kCertificateColumns;
  for (const auto& c : report.certificates) {
    records.push_back(certificate_json(c));
    millis.push_back({{"k", c.k}, {"t", c.t}, {"millis", c.millis}});
    proved += c.verdict == Verdict::ProvedEmpty;
    r.table.rows.push_back(certificate_row(c));
  }
  r.payload["summary"] = {{"pairs", report.expected},
                          {"certified", report.certificates.size()},
                          {"proved_empty", proved},
                          {"undecided", report.certificates.size() - proved},
                          {"complete", report.complete}};
  r.payload["certificates"] = records;
  r.timing["millis"] = report.millis;
  r.timing["per_pair"] = millis;
  r.ok = report.all_proved();
  r.notes.push_back(std::to_string(proved) + " of " + std::to_string(report.expected) + " pairs proved empty" +
                    (report.complete ? "" : " (budget exhausted, report incomplete)"));
  return r;
}

CommandResult cmd_verify_conjecture2(unsigned m, unsigned k, const RunConfig& config) {
  if (m < 2) throw UsageError("--m must be at least 2");
  if (k < 1) throw UsageError("--k must be at least 1");
  CommandResult r;
  r.command = "verify conjecture2";
  r.config = {{"m", m}, {"k", k}};
  r.config.update(config.echo());
  const auto start = Clock::now();
  const GameRule rule = imbalanced_rps(m, k);

  std::vector<MixedProfile> profiles;
  if (k == 1) {
    const auto eq = solve_symmetric_rps3(m);
    profiles.push_back(MixedProfile::symmetric(m, {eq.r, eq.p, eq.s}));
    r.payload["method"] = "symmetric solver";
  } else {
    if (m > 4 || 2 * k + 1 > 5) throw UsageError("k > 1 is supported for m <= 4 and k <= 2 only");
    SearchConfig sc;
    sc.seed = config.seed;
    sc.eps = config.tol;
    for (const auto& eq : search_equilibria(rule, sc).equilibria) profiles.push_back(eq.profile);
    r.payload["method"] = "multistart search";
    if (profiles.empty()) {
      r.ok = false;
      r.notes.push_back("inconclusive: no equilibrium found");
    }
  }

  Json checks = Json::array();
  r.table.columns = {"profile", "player", "p_type", "leaf", "ratio", "holds", "tie_probe"};
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    const auto rep = sad_ratio_check(rule, profiles[i], m);
    if (rep.nash_gap > config.tol) {
      r.ok = false;
      r.notes.push_back("profile " + std::to_string(i) + " is not an eps-equilibrium");
    }
    Json players = Json::array();
    for (const auto& e : rep.entries) {
      Json j{{"player", e.player}, {"p_type", e.p_type}, {"leaf", e.leaf}, {"vacuous", e.vacuous}, {"holds", e.holds}};
      j["ratio"] = e.ratio ? Json(*e.ratio) : Json(nullptr);
      j["tie_probe"] = e.tie_probe ? Json(*e.tie_probe) : Json(nullptr);
      players.push_back(j);
      r.table.rows.push_back({std::to_string(i), std::to_string(e.player), fixed6(e.p_type), fixed6(e.leaf),
                              e.ratio ? fixed6(*e.ratio) : "vacuous", yes_no(e.holds),
                              e.tie_probe ? fixed6(*e.tie_probe) : "-"});
    }
    checks.push_back({{"strategies", profiles[i].strategies()},
                      {"nash_gap", rep.nash_gap},
                      {"threshold", rep.threshold},
                      {"all_hold", rep.all_hold()},
                      {"players", players}});
    if (!rep.all_hold()) r.ok = false;
  }
  r.payload["profiles"] = checks;
  r.payload["tie_probe_reference"] = m >= 2 ? m - 2 : 0;
  r.notes.push_back("tie_probe is informational: expected other players on the deepest P object given it won");
  r.timing["millis"] = since_ms(start);
  return r;
}

Json envelope(const CommandResult& result, const std::string& timestamp) {
  Json j;
  j["command"] = result.command;
  j["version"] = version();
  j["config"] = result.config;
  j["timestamp"] = timestamp;
  j["ok"] = result.ok;
  j["payload"] = result.payload;
  j["timing"] = result.timing;
  return j;
}

std::string render_json(const CommandResult& result, const std::string& timestamp) {
  return envelope(result, timestamp).dump(2) + "\n";
}

std::string render_table(const CommandResult& result) {
  const auto& t = result.table;
  std::vector<std::size_t> width(t.columns.size(), 0);
  for (std::size_t c = 0; c < t.columns.size(); ++c) width[c] = t.columns[c].size();
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  const auto line = [&](const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      std::string cell = cells[c];
      if (c + 1 < cells.size()) cell.resize(width[c], ' ');
      out += (c ? "  " : "") + cell;
    }
    return out + "\n";
  };
  std::string out = result.command + "  [" + (result.ok ? "PASS" : "FAIL") + "]\n\n";
  out += line(t.columns);
  std::vector<std::string> rule;
  for (auto w : width) rule.emplace_back(w, '-');
  out += line(rule);
  for (const auto& row : t.rows) out += line(row);
  if (!result.notes.empty()) out += "\n";
  for (const auto& n : result.notes) out += "note: " + n + "\n";
  return out;
}

std::string render_csv(const CommandResult& result) {
  const auto quote = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
  };
  const auto line = [&](const std::vector<std::string>& cells) {
    std::vector<std::string> q;
    for (const auto& c : cells) q.push_back(quote(c));
    return join(q, ",") + "\n";
  };
  std::string out = line(result.table.columns);
  for (const auto& row : result.table.rows) out += line(row);
  return out;
}

}  // namespace rps::cli
