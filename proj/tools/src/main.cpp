#include "rpsforge_cli/commands.hpp"

#include "rpsforge/equilibrium.hpp"
#include "rpsforge/game_io.hpp"
#include "rpsforge/imbalance.hpp"

#include <CLI11.hpp>

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>

namespace {

using namespace rps::cli;

unsigned jobs_from_env() {
  const char* env = std::getenv("RPS_FORGE_JOBS");
  if (!env || !*env) return 1;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1) throw UsageError(std::string("RPS_FORGE_JOBS must be a positive integer, got '") + env + "'");
  return static_cast<unsigned>(v);
}

struct Bounds {
  unsigned k_max;
  unsigned t_max;
};

struct Options {
  RunConfig config;
  std::string format = "auto";
  std::string out;
  GameSource source;
  std::string mode = "symmetric";
  std::vector<std::string> games;
  unsigned k = 1, t = 0, m = 3;
  unsigned trials = 200;
  unsigned max_depth = 48;
  double budget = 600;
};

int emit(const CommandResult& result, const Options& o) {
  Format fmt = Format::Json;
  if (o.format == "table") fmt = Format::Table;
  else if (o.format == "csv") fmt = Format::Csv;
  else if (o.format == "auto") fmt = (o.out.empty() && isatty(STDOUT_FILENO)) ? Format::Table : Format::Json;

  std::string text;
  switch (fmt) {
    case Format::Table: text = render_table(result); break;
    case Format::Csv: text = render_csv(result); break;
    default: text = render_json(result, utc_timestamp()); break;
  }
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out);
    if (!f || !(f << text)) throw rps::IoError(o.out + ": cannot write report");
  }
  return result.ok ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  std::function<CommandResult()> run;
  bool report_to_out = true;

  CLI::App app{"Generalized rock-paper-scissors games: construction, equilibria, imbalance, certificates",
               "rps-forge"};
  app.require_subcommand(1);
  app.set_version_flag("--version", version());

  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"auto", "json", "table", "csv"}))
        ->capture_default_str();
  };
  const auto add_out = [&](CLI::App* cmd) { cmd->add_option("--out", o.out, "Write the report to this file"); };
  const auto add_seed = [&](CLI::App* cmd) {
    cmd->add_option("--seed", o.config.seed, "RNG seed")->capture_default_str();
  };
  const auto add_tol = [&](CLI::App* cmd) {
    cmd->add_option("--tol", o.config.tol, "Acceptance tolerance on nash_gap")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };
  const auto add_family = [&](CLI::App* cmd) {
    cmd->add_option("--family", o.source.family, "Game family")
        ->check(CLI::IsMember({"imbalanced3", "maximal3", "imbalanced", "blowup", "odd-one-out"}))
        ->capture_default_str();
    cmd->add_option("--m", o.source.m, "Players")->capture_default_str();
    cmd->add_option("--k", o.source.k, "Levels (imbalanced, blowup)")->capture_default_str();
  };
  const auto add_bounds = [&](CLI::App* cmd, Bounds& b) {
    cmd->add_option("--kmax", b.k_max, "Largest k")->capture_default_str();
    cmd->add_option("--tmax", b.t_max, "Largest t")->capture_default_str();
  };
  Bounds id_bounds{30, 30}, corner_bounds{30, 30}, formula_bounds{8, 8}, sweep_bounds{12, 12};

  auto* game = app.add_subcommand("game", "Game files")->require_subcommand(1);
  auto* build = game->add_subcommand("build", "Build a family member and write it as a game file");
  add_family(build);
  build->add_option("--out", o.out, "Game file to write")->required();
  add_format(build);
  build->callback([&] {
    report_to_out = false;
    run = [&] { return cmd_game_build(o.source, o.out); };
  });

  auto* nash = app.add_subcommand("nash", "Equilibria of a game");
  add_family(nash);
  nash->add_option("--game", o.source.path, "Game file (overrides --family)");
  nash->add_option("--mode", o.mode, "symmetric or search")
      ->check(CLI::IsMember({"symmetric", "search"}))
      ->capture_default_str();
  add_seed(nash);
  add_tol(nash);
  add_format(nash);
  add_out(nash);
  nash->callback([&] { run = [&] { return cmd_nash(o.source, o.mode, o.config); }; });

  auto* imb = app.add_subcommand("imbalance", "Imbalance statistics of one game, or a comparison of two");
  imb->add_option("games", o.games, "One or two game files")->required()->expected(1, 2);
  imb->add_option("--alpha", o.config.alphas, "Theil alpha values in (0,1)")
      ->check(CLI::Range(0.0, 1.0))
      ->delimiter(',');
  add_format(imb);
  add_out(imb);
  imb->callback([&] { run = [&] { return cmd_imbalance(o.games, o.config); }; });

  auto* verify = app.add_subcommand("verify", "Exact and certified checks")->require_subcommand(1);

  auto* ids = verify->add_subcommand("identities", "Alternating binomial identities");
  add_bounds(ids, id_bounds);
  add_format(ids);
  add_out(ids);
  ids->callback([&] { run = [&] { return cmd_verify_identities(id_bounds.k_max, id_bounds.t_max); }; });

  auto* corners = verify->add_subcommand("corners", "Corner values of the indifference difference");
  add_bounds(corners, corner_bounds);
  add_format(corners);
  add_out(corners);
  corners->callback([&] { run = [&] { return cmd_verify_corners(corner_bounds.k_max, corner_bounds.t_max); }; });

  auto* formulas = verify->add_subcommand("formulas", "Closed-form expected values against the raw oracle");
  add_bounds(formulas, formula_bounds);
  formulas->add_option("--trials", o.trials, "Random scenarios per role")->capture_default_str();
  add_seed(formulas);
  add_format(formulas);
  add_out(formulas);
  formulas->callback([&] { run = [&] { return cmd_verify_formulas(formula_bounds.k_max, formula_bounds.t_max, o.trials, o.config); }; });

  auto* infeas = verify->add_subcommand("infeasibility", "Certificate that one (k,t) system has no solution");
  infeas->add_option("--k", o.k, "Mixed R/P players")->required();
  infeas->add_option("--t", o.t, "Pure P players")->capture_default_str();
  infeas->add_option("--delta", o.config.delta, "Boundary margin")->capture_default_str();
  infeas->add_option("--max-depth", o.max_depth, "Subdivision depth limit")->capture_default_str();
  add_format(infeas);
  add_out(infeas);
  infeas->callback([&] { run = [&] { return cmd_verify_infeasibility(o.k, o.t, o.max_depth, o.config); }; });

  auto* sw = verify->add_subcommand("sweep", "Certificates for every (k,t) up to the bounds");
  add_bounds(sw, sweep_bounds);
  sw->add_option("--delta", o.config.delta, "Boundary margin")->capture_default_str();
  sw->add_option("--max-depth", o.max_depth, "Subdivision depth limit")->capture_default_str();
  sw->add_option("--budget", o.budget, "Wall-clock budget in seconds")->capture_default_str();
  sw->add_option("--jobs", o.config.jobs, "Worker threads (default: RPS_FORGE_JOBS or 1)")
      ->check(CLI::PositiveNumber);
  add_format(sw);
  add_out(sw);
  sw->callback([&] {
    run = [&] { return cmd_verify_sweep(sweep_bounds.k_max, sweep_bounds.t_max, o.max_depth, o.budget, o.config); };
  });

  auto* c2 = verify->add_subcommand("conjecture2", "P-type to leaf probability ratio at equilibrium");
  c2->add_option("--m", o.m, "Players")->capture_default_str();
  c2->add_option("--k", o.k, "Levels")->capture_default_str();
  add_seed(c2);
  add_tol(c2);
  add_format(c2);
  add_out(c2);
  c2->callback([&] { run = [&] { return cmd_verify_conjecture2(o.m, o.k, o.config); }; });

  try {
    o.config.jobs = jobs_from_env();
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "rps-forge: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    CommandResult result = run();
    if (!report_to_out) o.out.clear();
    return emit(result, o);
  } catch (const UsageError& e) {
    std::cerr << "rps-forge: " << e.what() << "\n";
    return kExitUsage;
  } catch (const rps::DomainError& e) {
    std::cerr << "rps-forge: " << e.what() << "\n";
    return kExitUsage;
  } catch (const rps::ParseError& e) {
    std::cerr << "rps-forge: " << e.what() << "\n";
    return kExitIo;
  } catch (const rps::IoError& e) {
    std::cerr << "rps-forge: " << e.what() << "\n";
    return kExitIo;
  } catch (const rps::SolverFailure& e) {
    std::cerr << "rps-forge: solver failure: " << e.what() << "\n";
    return kExitFailed;
  } catch (const std::exception& e) {
    std::cerr << "rps-forge: " << e.what() << "\n";
    return kExitFailed;
  }
}
