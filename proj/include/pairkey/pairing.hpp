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

// Random pairwise key predistribution: each node i draws a uniform K-subset
// of the other nodes to pair with, one key per ordered pair is installed in
// both endpoints, and two nodes are K-adjacent when they hold a common key.

#ifndef PAIRKEY_PAIRING_HPP_
#define PAIRKEY_PAIRING_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "pairkey/graph.hpp"
#include "pairkey/rng.hpp"

namespace pairkey {

struct SchemeParams {
  std::size_t n = 0;
  std::size_t K = 0;

  // Throws std::invalid_argument unless n >= 2 and 1 <= K < n.
  void validate() const;
  friend bool operator==(const SchemeParams&, const SchemeParams&) = default;
};

// The offline pairing: for each node i, the K partners it selected, stored
// in ascending id order.
class PairingTable {
 public:
  PairingTable() = default;
  explicit PairingTable(SchemeParams params);

  // Builds a table from explicit partner sets (1-based). Each set must have
  // exactly K distinct entries in 1..n, none equal to its owner.
  static PairingTable from_sets(std::size_t n, std::size_t K,
                                const std::vector<std::vector<NodeId>>& sets);

  std::size_t n() const { return params_.n; }
  std::size_t K() const { return params_.K; }
  const SchemeParams& params() const { return params_; }

  std::span<const NodeId> partners(NodeId i) const {
    return {partners_.data() + (i - 1) * params_.K, params_.K};
  }
  std::span<NodeId> mutable_partners(NodeId i) {
    return {partners_.data() + (i - 1) * params_.K, params_.K};
  }

  // True iff j is in the partner set of i.
  bool selects(NodeId i, NodeId j) const;

  friend bool operator==(const PairingTable&, const PairingTable&) = default;

 private:
  SchemeParams params_;
  std::vector<NodeId> partners_;
};

// Draws uniform K-subsets by a partial Fisher-Yates shuffle over a scratch
// array that is restored after every draw, so repeated draws cost O(K).
class PartnerSampler {
 public:
  explicit PartnerSampler(std::size_t n);

  // Writes a uniform K-subset of {1..n} \ {owner}, sorted, into out.
  void draw(NodeId owner, std::span<NodeId> out, Rng& rng);

 private:
  std::size_t n_;
  std::vector<NodeId> scratch_;
  std::vector<std::uint32_t> swaps_;
};

// Samples all n partner sets in node order from one stream.
PairingTable sample_pairing(const SchemeParams& params, Rng& rng);
void sample_pairing_into(PairingTable& table, PartnerSampler& sampler,
                         Rng& rng);

// Identifier of the pairwise key initiated by `initiator` for `target`;
// `slot` is the initiator's local key index (1..K) under ascending-id
// labeling. Opaque: only equality and ordering matter.
struct KeyId {
  NodeId initiator = 0;
  NodeId target = 0;
  std::uint32_t slot = 0;

  friend bool operator==(const KeyId&, const KeyId&) = default;
  friend auto operator<=>(const KeyId&, const KeyId&) = default;
};

struct KeyRing {
  NodeId owner = 0;
  std::vector<KeyId> keys;  // sorted
};

// One ring per node, index i-1 for node i.
std::vector<KeyRing> build_key_rings(const PairingTable& table);

// |ring_a ∩ ring_b|.
std::size_t shared_key_count(const KeyRing& a, const KeyRing& b);

// Same quantity from the pairing alone: [j in Γ_i] + [i in Γ_j].
std::size_t shared_key_count(const PairingTable& table, NodeId i, NodeId j);

// Edges of the K-adjacency graph, normalized and each listed once.
void k_adjacency_edges(const PairingTable& table, std::vector<Edge>& out);

Graph k_adjacency_graph(const PairingTable& table);

// "i: j1 j2 ... jK" per node.
void write_pairing_table(std::ostream& os, const PairingTable& table);
PairingTable read_pairing_table(std::istream& is);

}  // namespace pairkey

#endif  // PAIRKEY_PAIRING_HPP_
