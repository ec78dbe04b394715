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

#include "pairkey/channel.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <string>

namespace pairkey {

void ChannelParams::validate() const {
  if (!(p > 0.0 && p <= 1.0)) {
    throw std::invalid_argument("p must be in (0,1], got " +
                                std::to_string(p));
  }
}

ChannelMask::ChannelMask(std::size_t n) { reset(n); }

void ChannelMask::reset(std::size_t n) {
  n_ = n;
  const std::size_t pairs = n * (n > 0 ? n - 1 : 0) / 2;
  bits_.assign((pairs + 63) / 64, 0);
}

void sample_channel_mask(ChannelMask& mask, const ChannelParams& cp, Rng& rng) {
  cp.validate();
  const std::size_t n = mask.node_count();
  mask.reset(n);
  for (NodeId i = 1; i <= n; ++i) {
    for (NodeId j = i + 1; j <= n; ++j) {
      if (bernoulli(rng, cp.p)) mask.set(i, j);
    }
  }
}

Graph sample_er(std::size_t n, const ChannelParams& cp, Rng& rng) {
  ChannelMask mask(n);
  sample_channel_mask(mask, cp, rng);
  std::vector<Edge> edges;
  for (NodeId i = 1; i <= n; ++i) {
    for (NodeId j = i + 1; j <= n; ++j) {
      if (mask.up(i, j)) edges.push_back({i, j});
    }
  }
  return Graph(n, edges);
}

void sample_positions_into(Positions& out, std::size_t n, Rng& rng) {
  out.resize(n);
  for (Point& pt : out) {
    pt.x = uniform01(rng);
    pt.y = uniform01(rng);
  }
}

Positions sample_positions(std::size_t n, Rng& rng) {
  Positions out;
  sample_positions_into(out, n, rng);
  return out;
}

double toroidal_distance(const Point& a, const Point& b) {
  double dx = std::fabs(a.x - b.x);
  double dy = std::fabs(a.y - b.y);
  dx = std::fmin(dx, 1.0 - dx);
  dy = std::fmin(dy, 1.0 - dy);
  return std::sqrt(dx * dx + dy * dy);
}

void DiskParams::validate() const {
  if (!(rho > 0.0)) throw std::invalid_argument("rho must be positive");
  if (rho >= 0.5 && !forced) {
    throw std::invalid_argument("rho must be < 0.5, got " +
                                std::to_string(rho));
  }
}

Graph disk_graph(const Positions& pos, const DiskParams& dp) {
  dp.validate();
  const std::size_t n = pos.size();
  std::vector<Edge> edges;
  for (NodeId i = 1; i <= n; ++i) {
    for (NodeId j = i + 1; j <= n; ++j) {
      if (toroidal_distance(pos[i - 1], pos[j - 1]) < dp.rho) {
        edges.push_back({i, j});
      }
    }
  }
  return Graph(n, edges);
}

DiskParams match_rho(double p) {
  if (!(p > 0.0)) {
    throw std::invalid_argument("p must be positive, got " + std::to_string(p));
  }
  if (p >= std::numbers::pi / 4.0) {
    throw MatchingOutOfRange(
        "p=" + std::to_string(p) +
        " needs rho >= 0.5, where P(edge) = pi*rho^2 no longer holds "
        "(use --allow-large-rho to force)");
  }
  return {std::sqrt(p / std::numbers::pi), false};
}

DiskParams match_rho_forced(double p) {
  ChannelParams{p}.validate();
  const double rho = std::sqrt(p / std::numbers::pi);
  return {rho, rho >= 0.5};
}

void write_positions(std::ostream& os, const Positions& pos) {
  char buf[64];
  for (std::size_t i = 0; i < pos.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%zu %.6f %.6f\n", i + 1, pos[i].x,
                  pos[i].y);
    os << buf;
  }
}

}  // namespace pairkey
