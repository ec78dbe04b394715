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

// Monte Carlo estimation of connectivity and node isolation in H ∩ G over
// (K, p) grids.
//
// Every trial owns a seed derived from (master seed, channel, n, K, p, trial
// index), so a cell's outcomes do not depend on the grid it sits in, on the
// order trials execute, or on the number of workers. sweep() runs trials
// under OpenMP; sweep_serial() is the single-threaded reference it is
// tested against.

#ifndef PAIRKEY_MONTECARLO_HPP_
#define PAIRKEY_MONTECARLO_HPP_

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pairkey/channel.hpp"
#include "pairkey/disjoint_set.hpp"
#include "pairkey/graph.hpp"
#include "pairkey/pairing.hpp"

namespace pairkey {

enum class Channel {
  kOnOff,
  kDisk,
  // Disk model with rho = sqrt(p/pi) even when rho >= 0.5.
  kDiskForced,
};

std::string_view to_string(Channel c);
// Accepts "on_off", "disk", "disk_forced". Throws std::invalid_argument.
Channel parse_channel(std::string_view s);

struct ExperimentConfig {
  std::size_t n = 200;
  std::vector<std::size_t> K_grid;
  std::vector<double> p_grid;
  std::size_t trials = 500;
  std::uint64_t seed = 1;
  Channel channel = Channel::kOnOff;

  // Throws std::invalid_argument on an empty grid, K >= n, p outside (0,1],
  // trials == 0; MatchingOutOfRange for a plain disk channel with
  // p >= pi/4.
  void validate() const;
};

struct TrialOutcome {
  bool connected = false;
  std::size_t isolated_count = 0;
  std::size_t edge_count = 0;

  friend bool operator==(const TrialOutcome&, const TrialOutcome&) = default;
};

std::uint64_t trial_seed(std::uint64_t master, Channel channel, std::size_t n,
                         std::size_t K, double p, std::uint64_t trial);

// Reusable per-thread scratch for trials at a fixed n.
class TrialKernel {
 public:
  explicit TrialKernel(std::size_t n);

  TrialOutcome run(std::size_t K, double p, Channel channel,
                   std::uint64_t seed);

 private:
  std::size_t n_;
  PartnerSampler sampler_;
  PairingTable table_;
  ChannelMask mask_;
  Positions positions_;
  std::vector<Edge> h_edges_;
  std::vector<std::uint32_t> degree_;
};

// One sample of H ∩ G: pairing first, then the channel, from one stream
// seeded with `seed`. Deterministic in its arguments.
TrialOutcome run_trial(std::size_t n, std::size_t K, double p, Channel channel,
                       std::uint64_t seed);

// Same draws as run_trial, but materializes H, the channel graph, and their
// intersection as Graph objects and evaluates them with the graph-core
// predicates. Slow; kept to pin the kernel.
TrialOutcome run_trial_reference(std::size_t n, std::size_t K, double p,
                                 Channel channel, std::uint64_t seed);

// Binomial estimate of a proportion.
struct Proportion {
  std::uint64_t count = 0;
  std::uint64_t trials = 0;

  double estimate() const {
    return trials == 0 ? 0.0 : static_cast<double>(count) / trials;
  }
  // sqrt(q(1-q)/trials); zero at q in {0,1}, see rule_of_three().
  double standard_error() const {
    const double q = estimate();
    return trials == 0 ? 0.0 : std::sqrt(q * (1.0 - q) / trials);
  }
  // 95% upper bound on the rate when count == 0 (or on 1-rate when
  // count == trials).
  double rule_of_three() const { return trials == 0 ? 1.0 : 3.0 / trials; }

  friend bool operator==(const Proportion&, const Proportion&) = default;
};

struct CellEstimate {
  Channel channel = Channel::kOnOff;
  std::size_t n = 0;
  std::size_t K = 0;
  double p = 0.0;
  Proportion connected;
  Proportion no_isolated;
  std::uint64_t seed = 0;
  // rho >= 0.5 under Channel::kDiskForced.
  bool forced_rho = false;

  friend bool operator==(const CellEstimate&, const CellEstimate&) = default;
};

struct EstimateTable {
  // Sorted by (channel, p, K).
  std::vector<CellEstimate> rows;

  const CellEstimate* find(Channel channel, std::size_t K, double p) const;
  void sort();

  friend bool operator==(const EstimateTable&, const EstimateTable&) = default;
};

// workers == 0 means the OpenMP default team size.
EstimateTable sweep(const ExperimentConfig& config, unsigned workers = 0);
EstimateTable sweep_serial(const ExperimentConfig& config);

// Smallest K in the table's column at (channel, p) with
// prob_connected >= level.
std::optional<std::size_t> find_crossover(const EstimateTable& table,
                                          Channel channel, double p,
                                          double level = 0.5);

struct CellDelta {
  std::size_t K = 0;
  double p = 0.0;
  double delta_connected = 0.0;    // baseline - other
  double delta_no_isolated = 0.0;  // baseline - other
  bool forced_rho = false;
};

struct CrossoverDelta {
  double p = 0.0;
  std::optional<std::size_t> baseline_K;
  std::optional<std::size_t> other_K;
  bool forced_rho = false;

  // |baseline - other|, when both crossovers exist.
  std::optional<std::size_t> distance() const;
};

struct ChannelComparison {
  EstimateTable baseline;  // on_off
  EstimateTable other;     // config.channel
  std::vector<CellDelta> cells;
  std::vector<CrossoverDelta> crossovers;
};

// Runs config's grid under the on/off channel and under config.channel and
// pairs the rows cell by cell.
ChannelComparison compare_channels(const ExperimentConfig& config,
                                   unsigned workers = 0);

// Direct estimate of P(1 ~ 2) in H ∩ G(n;K,p) from the partner sets of
// nodes 1 and 2 and the (1,2) channel only.
Proportion estimate_edge_prob(std::size_t n, std::size_t K, double p,
                              std::uint64_t trials, std::uint64_t seed);

// P(node 1 isolated in H ∩ G(n;K,p)) from full samples.
Proportion estimate_isolation_prob(std::size_t n, std::size_t K, double p,
                                   std::uint64_t trials, std::uint64_t seed);

}  // namespace pairkey

#endif  // PAIRKEY_MONTECARLO_HPP_
