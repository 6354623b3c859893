#pragma once

// Command implementations behind the rps-forge binary. Each command returns
// a deterministic payload plus a flat table for human and CSV output.

#include "rpsforge/game.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rps::cli {

using Json = nlohmann::ordered_json;

enum class Format { Auto, Json, Table, Csv };

/// Thrown for invalid argument combinations; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::uint64_t seed = 0;
  double tol = 1e-8;
  std::vector<double> alphas{0.25, 0.5, 0.75};
  double delta = 1e-6;
  unsigned jobs = 1;
  Format format = Format::Auto;

  Json echo() const;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct CommandResult {
  std::string command;
  Json config;
  Json payload;
  Json timing = Json::object();  // wall-clock data, kept out of the payload
  Table table;
  std::vector<std::string> notes;
  bool ok = true;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

/// imbalanced3, maximal3, imbalanced, blowup or odd-one-out.
GameRule build_family(const std::string& family, unsigned m, unsigned k);

struct GameSource {
  std::optional<std::string> path;
  std::string family = "imbalanced3";
  unsigned m = 3;
  unsigned k = 1;
};

CommandResult cmd_game_build(const GameSource& source, const std::string& out_path);
CommandResult cmd_nash(const GameSource& source, const std::string& mode, const RunConfig& config);
CommandResult cmd_imbalance(const std::vector<std::string>& paths, const RunConfig& config);

CommandResult cmd_verify_identities(unsigned k_max, unsigned t_max);
CommandResult cmd_verify_corners(unsigned k_max, unsigned t_max);
CommandResult cmd_verify_formulas(unsigned k_max, unsigned t_max, unsigned trials, const RunConfig& config);
CommandResult cmd_verify_infeasibility(unsigned k, unsigned t, unsigned max_depth, const RunConfig& config);
CommandResult cmd_verify_sweep(unsigned k_max, unsigned t_max, unsigned max_depth, double budget_seconds,
                               const RunConfig& config);
CommandResult cmd_verify_conjecture2(unsigned m, unsigned k, const RunConfig& config);

/// Envelope {command, version, config, timestamp, payload, timing}.
Json envelope(const CommandResult& result, const std::string& timestamp);
std::string render_json(const CommandResult& result, const std::string& timestamp);
std::string render_table(const CommandResult& result);
std::string render_csv(const CommandResult& result);

std::string utc_timestamp();
std::string version();

/// Fixed six-decimal rendering used in tables.
std::string fixed6(double x);
std::string scientific(double x);

}  // namespace rps::cli
