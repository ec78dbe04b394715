// Copyright 2026 The pairkey Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pairkey/cli.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "pairkey/io.hpp"

namespace pairkey::cli {
namespace {

namespace fs = std::filesystem;

CliInvocation parse(std::vector<const char*> args) {
  args.insert(args.begin(), "pairkey");
  return parse_cli(static_cast<int>(args.size()), args.data());
}

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<const char*> args) {
  args.insert(args.begin(), "pairkey");
  std::ostringstream out, err;
  const int status =
      run_cli(static_cast<int>(args.size()), args.data(), out, err);
  return {status, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("pairkey_cli_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST_CASE("K and p lists") {
  CHECK(parse_k_list("1..5") == std::vector<std::size_t>{1, 2, 3, 4, 5});
  CHECK(parse_k_list("3,7") == std::vector<std::size_t>{3, 7});
  CHECK(parse_k_list("1..3,8,10..11") ==
        std::vector<std::size_t>{1, 2, 3, 8, 10, 11});
  CHECK_THROWS_AS(parse_k_list("5..3"), UsageError);
  CHECK_THROWS_AS(parse_k_list("a"), UsageError);
  CHECK(parse_p_list("0.2,0.4,1") == std::vector<double>{0.2, 0.4, 1.0});
  CHECK_THROWS_AS(parse_p_list("0.2..0.4"), UsageError);
}

TEST_CASE("simulate parsing") {
  const CliInvocation inv = parse({"simulate", "--n", "100", "--K", "1..4",
                                   "--p", "0.3,0.6", "--trials", "50",
                                   "--seed", "9", "--workers", "2"});
  CHECK(inv.subcommand == Subcommand::kSimulate);
  CHECK(inv.config.n == 100);
  CHECK(inv.config.K_grid.size() == 4);
  CHECK(inv.config.p_grid.size() == 2);
  CHECK(inv.config.trials == 50);
  CHECK(inv.config.seed == 9);
  CHECK(inv.config.channel == Channel::kOnOff);
  CHECK(inv.workers == 2);
  CHECK(inv.format == Format::kCsv);
}

TEST_CASE("usage errors") {
  CHECK_THROWS_WITH_AS(parse({"simulate", "--K", "300", "--n", "200", "--p",
                              "0.5"}),
                       doctest::Contains("K must be < n"), UsageError);
  CHECK_THROWS_AS(parse({"simulate", "--K", "3", "--p", "0.5", "--bogus"}),
                  UsageError);
  CHECK_THROWS_AS(parse({"simulate", "--p", "0.5"}), UsageError);
  CHECK_THROWS_AS(parse({"simulate", "--K", "3", "--p", "0.5", "--channel",
                         "on_off", "--allow-large-rho"}),
                  UsageError);
  CHECK_THROWS_AS(parse({"simulate", "--K", "3", "--p", "0.8", "--channel",
                         "disk"}),
                  UsageError);
  CHECK_THROWS_AS(parse({"simulate", "--K", "3", "--p", "0"}), UsageError);
  CHECK_THROWS_AS(parse({"validate", "--n", "60"}), UsageError);
  CHECK_THROWS_AS(parse({"figure", "fig9"}), UsageError);

  const Run r = run({"simulate", "--K", "300", "--n", "200", "--p", "0.5"});
  CHECK(r.status == kExitUsage);
  CHECK(r.err.find("K must be < n") != std::string::npos);
  CHECK(r.out.empty());
}

TEST_CASE("large rho flag") {
  CHECK(parse({"simulate", "--K", "3", "--p", "0.8", "--allow-large-rho"})
            .config.channel == Channel::kDiskForced);
  CHECK(parse({"simulate", "--K", "3", "--p", "0.8", "--channel", "disk",
               "--allow-large-rho"})
            .config.channel == Channel::kDiskForced);
}

TEST_CASE("config file merges under explicit flags") {
  const fs::path dir = scratch("config");
  const fs::path cfg = dir / "c.json";
  {
    std::ofstream f(cfg);
    f << R"({"n": 80, "K": "2..4", "p": [0.3, 0.5], "trials": 40,
             "seed": 5, "format": "json"})";
  }
  const CliInvocation inv = parse({"simulate", "--config", cfg.c_str(),
                                   "--trials", "70"});
  CHECK(inv.config.n == 80);
  CHECK(inv.config.K_grid == std::vector<std::size_t>{2, 3, 4});
  CHECK(inv.config.p_grid == std::vector<double>{0.3, 0.5});
  CHECK(inv.config.trials == 70);
  CHECK(inv.config.seed == 5);
  CHECK(inv.format == Format::kJson);
}

TEST_CASE("PAIRKEY_WORKERS fills in for --workers") {
  ::setenv("PAIRKEY_WORKERS", "3", 1);
  CHECK(parse({"simulate", "--K", "2", "--p", "0.5"}).workers == 3);
  CHECK(parse({"simulate", "--K", "2", "--p", "0.5", "--workers", "1"})
            .workers == 1);
  ::unsetenv("PAIRKEY_WORKERS");
  CHECK(parse({"simulate", "--K", "2", "--p", "0.5"}).workers == 0);
}

TEST_CASE("simulate writes CSV and reports the seed") {
  const Run r = run({"simulate", "--n", "30", "--K", "1..3", "--p", "0.5",
                     "--trials", "20", "--seed", "11"});
  CHECK(r.status == kExitOk);
  CHECK(r.out.rfind(std::string(kCsvHeader) + "\n", 0) == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 4);
  CHECK(r.out.find('\r') == std::string::npos);
  CHECK(r.err.find("seed: 11") != std::string::npos);

  const Run again = run({"simulate", "--n", "30", "--K", "1..3", "--p", "0.5",
                         "--trials", "20", "--seed", "11", "--workers", "1"});
  CHECK(again.out == r.out);
}

TEST_CASE("simulate JSON output round-trips") {
  const Run r = run({"simulate", "--n", "30", "--K", "2", "--p", "0.5",
                     "--trials", "20", "--seed", "3", "--format", "json"});
  REQUIRE(r.status == kExitOk);
  const EstimateTable t = table_from_json(nlohmann::json::parse(r.out));
  CHECK(t.rows.size() == 1);
  CHECK(t.rows[0].connected.trials == 20);
}

TEST_CASE("theory prints the closed forms") {
  const Run r = run({"theory", "--n", "200", "--K", "12", "--p", "0.2"});
  REQUIRE(r.status == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["c_n"].get<double>() == doctest::Approx(0.878632980972704));
  CHECK(j["tau_hat"].get<double>() == doctest::Approx(2.363264185154601));
}

TEST_CASE("figure presets") {
  for (const char* name : {"fig2", "fig3"}) {
    const FigurePreset f = figure_preset(name);
    REQUIRE(f.sweep);
    CHECK(f.sweep->n == 200);
    CHECK(f.sweep->trials == 500);
    CHECK(f.sweep->K_grid.size() == 25);
    CHECK(f.sweep->p_grid == std::vector<double>{0.2, 0.4, 0.6, 0.8, 1.0});
    CHECK(f.sweep->channel == Channel::kOnOff);
  }
  CHECK(figure_preset("fig4").sweep->channel == Channel::kDiskForced);
  const FigurePreset inter = figure_preset("fig-intersection");
  REQUIRE(inter.dump);
  CHECK(inter.dump->n == 50);
  CHECK(inter.dump->K == 5);
  CHECK(inter.dump->p == 0.2);
}

TEST_CASE("dump-instance writes consistent files") {
  const fs::path dir = scratch("dump");
  const Run r = run({"dump-instance", "--n", "50", "--K", "5", "--p", "0.2",
                     "--seed", "4", "--out", dir.c_str()});
  REQUIRE(r.status == kExitOk);
  for (const char* f : {"pairing.txt", "h_edges.txt", "channel_edges.txt",
                        "intersection_edges.txt", "components.txt"}) {
    CHECK(fs::exists(dir / f));
  }
  CHECK_FALSE(fs::exists(dir / "positions.txt"));

  const DumpSummary s = dump_instance({50, 5, 0.2, Channel::kOnOff}, 4,
                                      dir / "again");
  CHECK(slurp(dir / "h_edges.txt") == slurp(dir / "again" / "h_edges.txt"));
  CHECK(s.intersection_edges <= s.h_edges);
  CHECK(s.intersection_edges <= s.channel_edges);
  CHECK(s.h_edges >= 50 * 5 / 2);
  CHECK(s.h_edges <= 50 * 5);

  const fs::path disk = scratch("dump_disk");
  dump_instance({40, 3, 0.3, Channel::kDisk}, 2, disk);
  CHECK(fs::exists(disk / "positions.txt"));
}

TEST_CASE("validate exit status") {
  const Run ok = run({"validate", "--n", "5", "--K", "2", "--p", "0.5",
                      "--samples", "20000", "--seed", "8"});
  CHECK(ok.status == kExitOk);
  const auto j = nlohmann::json::parse(ok.out);
  CHECK(j["passed"].get<bool>());
}

TEST_CASE("the installed binary returns the usage status") {
  const std::string cmd = std::string(PAIRKEY_CLI_PATH) +
                          " simulate --K 300 --n 200 --p 0.5 >/dev/null 2>&1";
  const int raw = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(raw));
  CHECK(WEXITSTATUS(raw) == kExitUsage);

  const std::string help = std::string(PAIRKEY_CLI_PATH) + " --help >/dev/null";
  const int h = std::system(help.c_str());
  REQUIRE(WIFEXITED(h));
  CHECK(WEXITSTATUS(h) == kExitOk);
}

}  // namespace
}  // namespace pairkey::cli
