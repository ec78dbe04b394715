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

// Communication models: the on/off channel (Erdős–Rényi G(n;p)) and the disk
// model on the unit torus, plus the rule pi*rho^2 = p that matches them.

#ifndef PAIRKEY_CHANNEL_HPP_
#define PAIRKEY_CHANNEL_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pairkey/graph.hpp"
#include "pairkey/rng.hpp"

namespace pairkey {

struct ChannelParams {
  double p = 1.0;

  // Throws std::invalid_argument unless 0 < p <= 1.
  void validate() const;
};

// Channel state of every unordered pair, stored as one bit per pair in
// lexicographic pair order (1,2),(1,3),...,(n-1,n).
class ChannelMask {
 public:
  explicit ChannelMask(std::size_t n = 0);

  std::size_t node_count() const { return n_; }

  bool up(NodeId i, NodeId j) const {
    const std::size_t k = index(i, j);
    return (bits_[k >> 6] >> (k & 63)) & 1u;
  }
  void set(NodeId i, NodeId j) {
    const std::size_t k = index(i, j);
    bits_[k >> 6] |= std::uint64_t{1} << (k & 63);
  }
  void reset(std::size_t n);

 private:
  std::size_t index(NodeId i, NodeId j) const {
    if (i > j) std::swap(i, j);
    const std::size_t a = i - 1;
    return a * (2 * n_ - a - 1) / 2 + (j - i - 1);
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> bits_;
};

// One Bernoulli(p) draw per pair, in lexicographic pair order. This order is
// the reproducibility contract shared by sample_er and the trial kernels.
void sample_channel_mask(ChannelMask& mask, const ChannelParams& cp, Rng& rng);

// G(n;p).
Graph sample_er(std::size_t n, const ChannelParams& cp, Rng& rng);

struct Point {
  double x = 0.0;
  double y = 0.0;
};

using Positions = std::vector<Point>;

// n i.i.d. uniform points in [0,1)^2; x then y for each node in turn.
Positions sample_positions(std::size_t n, Rng& rng);
void sample_positions_into(Positions& out, std::size_t n, Rng& rng);

// Euclidean distance on the unit torus.
double toroidal_distance(const Point& a, const Point& b);

struct DiskParams {
  double rho = 0.0;
  // Set when rho >= 0.5 was admitted by match_rho_forced; the pair edge
  // probability is then smaller than pi*rho^2.
  bool forced = false;

  void validate() const;
};

// G(n;rho): edge iff toroidal distance < rho. Brute-force pair scan.
Graph disk_graph(const Positions& pos, const DiskParams& dp);

class MatchingOutOfRange : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// rho = sqrt(p/pi). Throws MatchingOutOfRange for p >= pi/4.
DiskParams match_rho(double p);

// rho = sqrt(p/pi) for any p in (0,1]; flags rho >= 0.5 as forced.
DiskParams match_rho_forced(double p);

// "i x y" per node, 1-based, six decimals.
void write_positions(std::ostream& os, const Positions& pos);

}  // namespace pairkey

#endif  // PAIRKEY_CHANNEL_HPP_
