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

#include "pairkey/montecarlo.hpp"

#include <omp.h>

#include <algorithm>
#include <numbers>
#include <stdexcept>
#include <tuple>

namespace pairkey {
namespace {

constexpr std::uint64_t kEdgeProbTag = 0x65646765ull;   // "edge"
constexpr std::uint64_t kIsolationTag = 0x69736f6cull;  // "isol"

DiskParams disk_params(Channel channel, double p) {
  return channel == Channel::kDisk ? match_rho(p) : match_rho_forced(p);
}

bool forced_rho(Channel channel, double p) {
  return channel == Channel::kDiskForced && match_rho_forced(p).forced;
}

struct Cell {
  std::size_t K;
  double p;
};

std::vector<Cell> cells_of(const ExperimentConfig& config) {
  std::vector<Cell> cells;
  cells.reserve(config.K_grid.size() * config.p_grid.size());
  for (double p : config.p_grid) {
    for (std::size_t K : config.K_grid) cells.push_back({K, p});
  }
  return cells;
}

CellEstimate empty_row(const ExperimentConfig& config, const Cell& cell) {
  CellEstimate row;
  row.channel = config.channel;
  row.n = config.n;
  row.K = cell.K;
  row.p = cell.p;
  row.connected.trials = config.trials;
  row.no_isolated.trials = config.trials;
  row.seed = config.seed;
  row.forced_rho = forced_rho(config.channel, cell.p);
  return row;
}

}  // namespace

std::string_view to_string(Channel c) {
  switch (c) {
    case Channel::kOnOff:
      return "on_off";
    case Channel::kDisk:
      return "disk";
    case Channel::kDiskForced:
      return "disk_forced";
  }
  return "?";
}

Channel parse_channel(std::string_view s) {
  if (s == "on_off") return Channel::kOnOff;
  if (s == "disk") return Channel::kDisk;
  if (s == "disk_forced") return Channel::kDiskForced;
  throw std::invalid_argument("unknown channel '" + std::string(s) +
                              "' (expected on_off, disk, disk_forced)");
}

void ExperimentConfig::validate() const {
  if (K_grid.empty()) throw std::invalid_argument("K grid is empty");
  if (p_grid.empty()) throw std::invalid_argument("p grid is empty");
  if (trials == 0) throw std::invalid_argument("trials must be >= 1");
  for (std::size_t K : K_grid) SchemeParams{n, K}.validate();
  for (double p : p_grid) {
    ChannelParams{p}.validate();
    if (channel == Channel::kDisk) match_rho(p);
  }
}

std::uint64_t trial_seed(std::uint64_t master, Channel channel, std::size_t n,
                         std::size_t K, double p, std::uint64_t trial) {
  return derive_seed({master, static_cast<std::uint64_t>(channel) + 1, n, K,
                      double_bits(p), trial});
}

TrialKernel::TrialKernel(std::size_t n)
    : n_(n), sampler_(n), mask_(n), degree_(n) {}

TrialOutcome TrialKernel::run(std::size_t K, double p, Channel channel,
                              std::uint64_t seed) {
  if (table_.n() != n_ || table_.K() != K) table_ = PairingTable({n_, K});
  Rng rng(seed);
  sample_pairing_into(table_, sampler_, rng);
  k_adjacency_edges(table_, h_edges_);

  // Keep the H edges whose channel is up, in place.
  std::size_t kept = 0;
  if (channel == Channel::kOnOff) {
    sample_channel_mask(mask_, ChannelParams{p}, rng);
    for (const Edge& e : h_edges_) {
      if (mask_.up(e.u, e.v)) h_edges_[kept++] = e;
    }
  } else {
    const DiskParams dp = disk_params(channel, p);
    sample_positions_into(positions_, n_, rng);
    for (const Edge& e : h_edges_) {
      if (toroidal_distance(positions_[e.u - 1], positions_[e.v - 1]) <
          dp.rho) {
        h_edges_[kept++] = e;
      }
    }
  }
  h_edges_.resize(kept);

  std::fill(degree_.begin(), degree_.end(), 0);
  DisjointSet dsu(n_);
  for (const Edge& e : h_edges_) {
    ++degree_[e.u - 1];
    ++degree_[e.v - 1];
    dsu.unite(e.u - 1, e.v - 1);
  }
  TrialOutcome out;
  out.edge_count = kept;
  out.isolated_count = static_cast<std::size_t>(
      std::count(degree_.begin(), degree_.end(), 0u));
  out.connected = dsu.set_count() == 1;
  return out;
}

TrialOutcome run_trial(std::size_t n, std::size_t K, double p, Channel channel,
                       std::uint64_t seed) {
  SchemeParams{n, K}.validate();
  ChannelParams{p}.validate();
  TrialKernel kernel(n);
  return kernel.run(K, p, channel, seed);
}

TrialOutcome run_trial_reference(std::size_t n, std::size_t K, double p,
                                 Channel channel, std::uint64_t seed) {
  Rng rng(seed);
  const Graph h = k_adjacency_graph(sample_pairing({n, K}, rng));
  const Graph g = channel == Channel::kOnOff
                      ? sample_er(n, ChannelParams{p}, rng)
                      : disk_graph(sample_positions(n, rng),
                                   disk_params(channel, p));
  const Graph both = intersect(h, g);
  return {is_connected(both), isolated_count(both), both.edge_count()};
}

const CellEstimate* EstimateTable::find(Channel channel, std::size_t K,
                                        double p) const {
  for (const CellEstimate& row : rows) {
    if (row.channel == channel && row.K == K && row.p == p) return &row;
  }
  return nullptr;
}

void EstimateTable::sort() {
  std::stable_sort(rows.begin(), rows.end(),
                   [](const CellEstimate& a, const CellEstimate& b) {
                     return std::tie(a.channel, a.p, a.K) <
                            std::tie(b.channel, b.p, b.K);
                   });
}

EstimateTable sweep_serial(const ExperimentConfig& config) {
  config.validate();
  EstimateTable table;
  TrialKernel kernel(config.n);
  for (const Cell& cell : cells_of(config)) {
    CellEstimate row = empty_row(config, cell);
    for (std::uint64_t t = 0; t < config.trials; ++t) {
      const TrialOutcome o = kernel.run(
          cell.K, cell.p, config.channel,
          trial_seed(config.seed, config.channel, config.n, cell.K, cell.p, t));
      row.connected.count += o.connected;
      row.no_isolated.count += o.isolated_count == 0;
    }
    table.rows.push_back(row);
  }
  table.sort();
  return table;
}

EstimateTable sweep(const ExperimentConfig& config, unsigned workers) {
  config.validate();
  const std::vector<Cell> cells = cells_of(config);
  const auto trials = static_cast<std::int64_t>(config.trials);
  const auto total = static_cast<std::int64_t>(cells.size()) * trials;

  // One slot per (cell, trial); bit 0 = connected, bit 1 = no isolated node.
  std::vector<std::uint8_t> flags(static_cast<std::size_t>(total), 0);
  const int team = workers == 0 ? omp_get_max_threads()
                                : static_cast<int>(workers);

#pragma omp parallel num_threads(team)
  {
    TrialKernel kernel(config.n);
#pragma omp for schedule(dynamic, 32)
    for (std::int64_t idx = 0; idx < total; ++idx) {
      const Cell& cell = cells[static_cast<std::size_t>(idx / trials)];
      const auto t = static_cast<std::uint64_t>(idx % trials);
      const TrialOutcome o = kernel.run(
          cell.K, cell.p, config.channel,
          trial_seed(config.seed, config.channel, config.n, cell.K, cell.p, t));
      flags[static_cast<std::size_t>(idx)] =
          static_cast<std::uint8_t>((o.connected ? 1u : 0u) |
                                    (o.isolated_count == 0 ? 2u : 0u));
    }
  }

  EstimateTable table;
  table.rows.reserve(cells.size());
  for (std::size_t c = 0; c < cells.size(); ++c) {
    CellEstimate row = empty_row(config, cells[c]);
    const auto begin = flags.begin() + static_cast<std::ptrdiff_t>(c) * trials;
    for (auto it = begin; it != begin + trials; ++it) {
      row.connected.count += *it & 1u;
      row.no_isolated.count += (*it >> 1) & 1u;
    }
    table.rows.push_back(row);
  }
  table.sort();
  return table;
}

std::optional<std::size_t> find_crossover(const EstimateTable& table,
                                          Channel channel, double p,
                                          double level) {
  std::optional<std::size_t> best;
  for (const CellEstimate& row : table.rows) {
    if (row.channel != channel || row.p != p) continue;
    if (row.connected.estimate() >= level && (!best || row.K < *best)) {
      best = row.K;
    }
  }
  return best;
}

std::optional<std::size_t> CrossoverDelta::distance() const {
  if (!baseline_K || !other_K) return std::nullopt;
  return *baseline_K > *other_K ? *baseline_K - *other_K
                                : *other_K - *baseline_K;
}

ChannelComparison compare_channels(const ExperimentConfig& config,
                                   unsigned workers) {
  ExperimentConfig on_off = config;
  on_off.channel = Channel::kOnOff;
  ChannelComparison out;
  out.baseline = sweep(on_off, workers);
  out.other = sweep(config, workers);
  for (const CellEstimate& a : out.baseline.rows) {
    const CellEstimate* b = out.other.find(config.channel, a.K, a.p);
    if (b == nullptr) continue;
    out.cells.push_back({a.K, a.p,
                         a.connected.estimate() - b->connected.estimate(),
                         a.no_isolated.estimate() - b->no_isolated.estimate(),
                         b->forced_rho});
  }
  std::vector<double> ps = config.p_grid;
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  for (double p : ps) {
    out.crossovers.push_back({p, find_crossover(out.baseline, Channel::kOnOff, p),
                              find_crossover(out.other, config.channel, p),
                              forced_rho(config.channel, p)});
  }
  return out;
}

Proportion estimate_edge_prob(std::size_t n, std::size_t K, double p,
                              std::uint64_t trials, std::uint64_t seed) {
  SchemeParams{n, K}.validate();
  ChannelParams{p}.validate();
  PartnerSampler sampler(n);
  std::vector<NodeId> first(K);
  std::vector<NodeId> second(K);
  Proportion out{0, trials};
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed({seed, kEdgeProbTag, n, K, double_bits(p), t}));
    sampler.draw(1, first, rng);
    sampler.draw(2, second, rng);
    const bool keyed = std::binary_search(first.begin(), first.end(), 2u) ||
                       std::binary_search(second.begin(), second.end(), 1u);
    const bool up = bernoulli(rng, p);
    out.count += keyed && up;
  }
  return out;
}

Proportion estimate_isolation_prob(std::size_t n, std::size_t K, double p,
                                   std::uint64_t trials, std::uint64_t seed) {
  SchemeParams{n, K}.validate();
  ChannelParams{p}.validate();
  PairingTable table({n, K});
  PartnerSampler sampler(n);
  ChannelMask mask(n);
  Proportion out{0, trials};
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed({seed, kIsolationTag, n, K, double_bits(p), t}));
    sample_pairing_into(table, sampler, rng);
    sample_channel_mask(mask, ChannelParams{p}, rng);
    bool isolated = true;
    for (NodeId j = 2; j <= n && isolated; ++j) {
      if (mask.up(1, j) && shared_key_count(table, 1, j) > 0) isolated = false;
    }
    out.count += isolated;
  }
  return out;
}

}  // namespace pairkey
