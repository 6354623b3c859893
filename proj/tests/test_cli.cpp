#include "rpsforge/construct.hpp"
#include "rpsforge/game_io.hpp"
#include "rpsforge_cli/commands.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

namespace rps::cli {
namespace {

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "rps_forge_cli_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

TEST(Families, Build) {
  EXPECT_EQ(build_family("imbalanced3", 4, 1).players(), 4u);
  EXPECT_EQ(build_family("maximal3", 3, 1).object_count(), 3u);
  EXPECT_EQ(build_family("imbalanced", 3, 2).object_count(), 5u);
  EXPECT_EQ(build_family("blowup", 3, 2).object_count(), 5u);
  EXPECT_EQ(build_family("odd-one-out", 3, 1).object_count(), 2u);
  EXPECT_THROW(build_family("nope", 3, 1), UsageError);
}

TEST(Commands, GameBuildRoundTrip) {
  const auto path = scratch("imb4.game").string();
  const auto built = cmd_game_build({std::nullopt, "imbalanced3", 4, 1}, path);
  EXPECT_TRUE(built.ok);
  EXPECT_EQ(built.payload["multisets"], 15);
  std::ifstream in(path);
  const auto parsed = parse_game(in);
  const auto direct = imbalanced_rps3(4);
  EXPECT_EQ(uniform_expected_payoffs(parsed), uniform_expected_payoffs(direct));

  // Loaded games go through the search; it must not matter where the rule came from.
  const auto from_file = cmd_nash({path, "", 0, 0}, "search", {});
  const auto from_family = cmd_nash({std::nullopt, "imbalanced3", 4, 1}, "search", {});
  EXPECT_EQ(from_file.payload["equilibria"], from_family.payload["equilibria"]);
  EXPECT_FALSE(from_file.payload["equilibria"].empty());
}

TEST(Commands, NashSymmetric) {
  const auto r = cmd_nash({std::nullopt, "imbalanced3", 10, 1}, "symmetric", {});
  ASSERT_TRUE(r.ok);
  const auto x = r.payload["strategy"];
  EXPECT_NEAR(x[0].get<double>(), 0.212543, 1e-6);
  EXPECT_NEAR(x[1].get<double>(), 0.760443, 1e-6);
  EXPECT_NEAR(x[2].get<double>(), 0.027014, 1e-6);
  EXPECT_LE(r.payload["nash_gap"].get<double>(), 1e-9);
  EXPECT_THROW(cmd_nash({std::nullopt, "imbalanced3", 3, 1}, "bogus", {}), UsageError);
}

TEST(Commands, PayloadsAreDeterministic) {
  RunConfig config;
  config.seed = 5;
  const auto a = cmd_nash({std::nullopt, "imbalanced3", 3, 1}, "search", config);
  const auto b = cmd_nash({std::nullopt, "imbalanced3", 3, 1}, "search", config);
  EXPECT_EQ(a.payload.dump(), b.payload.dump());
  const auto c = cmd_verify_infeasibility(3, 1, 48, config);
  const auto d = cmd_verify_infeasibility(3, 1, 48, config);
  EXPECT_EQ(c.payload.dump(), d.payload.dump());
  EXPECT_EQ(c.payload["certificate"]["verdict"], "ProvedEmpty");
}

TEST(Commands, Verifiers) {
  const auto ids = cmd_verify_identities(10, 10);
  EXPECT_TRUE(ids.ok);
  EXPECT_EQ(ids.payload["checks"], 10u * 11u * 11u / 2u);
  EXPECT_TRUE(cmd_verify_corners(8, 8).ok);
  RunConfig config;
  config.seed = 3;
  EXPECT_TRUE(cmd_verify_formulas(4, 4, 20, config).ok);
  const auto sw = cmd_verify_sweep(2, 2, 48, 60, config);
  EXPECT_TRUE(sw.ok);
  EXPECT_EQ(sw.payload["summary"]["proved_empty"], 6);
  EXPECT_TRUE(cmd_verify_conjecture2(5, 1, config).ok);
}

TEST(Commands, ImbalanceComparison) {
  const auto a = scratch("max3.game").string(), b = scratch("imb3.game").string();
  cmd_game_build({std::nullopt, "maximal3", 3, 1}, a);
  cmd_game_build({std::nullopt, "imbalanced3", 3, 1}, b);
  const auto r = cmd_imbalance({a, b}, {});
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.payload["comparison"]["relation"], "Majorizes");
  EXPECT_EQ(r.payload["games"][1]["uniform_payoffs"][0], "4/9");
  EXPECT_THROW(cmd_imbalance({scratch("missing.game").string()}, {}), IoError);
}

TEST(Rendering, EnvelopeAndTables) {
  const auto r = cmd_verify_corners(3, 2);
  const auto env = envelope(r, "2026-01-01T00:00:00Z");
  for (const char* key : {"command", "version", "config", "timestamp", "ok", "payload", "timing"}) {
    EXPECT_TRUE(env.contains(key)) << key;
  }
  EXPECT_EQ(Json::parse(render_json(r, "x"))["payload"], r.payload);
  const auto csv = render_csv(r);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "checks,closed_form_mismatches,nonnegative");
  EXPECT_NE(render_table(r).find("checks"), std::string::npos);
  EXPECT_EQ(fixed6(0.5), "0.500000");
}

}  // namespace
}  // namespace rps::cli
