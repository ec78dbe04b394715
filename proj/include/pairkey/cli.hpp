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

#ifndef PAIRKEY_CLI_HPP_
#define PAIRKEY_CLI_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pairkey/montecarlo.hpp"

namespace pairkey::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitValidationFailed = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Subcommand { kSimulate, kTheory, kValidate, kFigure, kDumpInstance };
enum class Format { kCsv, kJson };

// Parameters of a single sampled instance written out as edge lists.
struct DumpPlan {
  std::size_t n = 50;
  std::size_t K = 5;
  double p = 0.2;
  Channel channel = Channel::kOnOff;
};

struct CliInvocation {
  Subcommand subcommand = Subcommand::kSimulate;
  // simulate / figure sweeps. config.seed == 0 asks for an entropy seed.
  ExperimentConfig config;
  bool compare = false;
  // theory / validate point.
  std::size_t n = 0;
  std::size_t K = 0;
  double p = 0.0;
  std::uint64_t samples = 100000;
  // figure
  std::string preset;
  // figure fig-intersection / dump-instance
  std::optional<DumpPlan> dump;
  std::optional<std::filesystem::path> out;
  Format format = Format::kCsv;
  // 0 = available parallelism.
  unsigned workers = 0;
};

// "a..b" (inclusive) and comma lists, mixable: "1..5,8,10..12".
std::vector<std::size_t> parse_k_list(std::string_view text);
// Comma list of probabilities.
std::vector<double> parse_p_list(std::string_view text);

// Throws UsageError on unknown flags, missing options, conflicting channel
// flags and out-of-domain parameters. argv[0] is the program name.
CliInvocation parse_cli(int argc, const char* const* argv);

struct FigurePreset {
  std::string name;
  std::optional<ExperimentConfig> sweep;
  std::optional<DumpPlan> dump;
};

// fig2, fig3: on/off sweep at n=200, 500 trials, K=1..25,
//             p in {0.2, 0.4, 0.6, 0.8, 1};
// fig4:       the same grid under the disk channel with forced rho;
// fig-intersection: one G(50;0.2), one H(50;5) and their intersection.
// Throws UsageError for any other name.
FigurePreset figure_preset(std::string_view name);

struct DumpSummary {
  std::size_t h_edges = 0;
  std::size_t channel_edges = 0;
  std::size_t intersection_edges = 0;
  bool h_connected = false;
  bool channel_connected = false;
  bool intersection_connected = false;
  std::size_t isolated = 0;
  std::size_t component_count = 0;
};

// Samples trial 0 of the (n, K, p, channel) cell under `seed` and writes
// pairing.txt, h_edges.txt, channel_edges.txt, intersection_edges.txt,
// components.txt ("i label"), and positions.txt for disk channels into dir.
DumpSummary dump_instance(const DumpPlan& plan, std::uint64_t seed,
                          const std::filesystem::path& dir);

// Entry point. Returns the process exit status.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace pairkey::cli

#endif  // PAIRKEY_CLI_HPP_
