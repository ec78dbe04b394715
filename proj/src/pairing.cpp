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

#include "pairkey/pairing.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace pairkey {

void SchemeParams::validate() const {
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  if (K < 1) throw std::invalid_argument("K must be >= 1");
  if (K >= n) throw std::invalid_argument("K must be < n");
}

PairingTable::PairingTable(SchemeParams params) : params_(params) {
  params_.validate();
  partners_.assign(params_.n * params_.K, 0);
}

PairingTable PairingTable::from_sets(
    std::size_t n, std::size_t K, const std::vector<std::vector<NodeId>>& sets) {
  PairingTable table({n, K});
  if (sets.size() != n) {
    throw std::invalid_argument("expected " + std::to_string(n) +
                                " partner sets, got " +
                                std::to_string(sets.size()));
  }
  for (NodeId i = 1; i <= n; ++i) {
    std::vector<NodeId> s = sets[i - 1];
    std::sort(s.begin(), s.end());
    const bool bad_size = s.size() != K;
    const bool dup = std::adjacent_find(s.begin(), s.end()) != s.end();
    const bool bad_id = std::any_of(s.begin(), s.end(), [&](NodeId j) {
      return j < 1 || j > n || j == i;
    });
    if (bad_size || dup || bad_id) {
      throw std::invalid_argument("invalid partner set for node " +
                                  std::to_string(i));
    }
    std::copy(s.begin(), s.end(), table.mutable_partners(i).begin());
  }
  return table;
}

bool PairingTable::selects(NodeId i, NodeId j) const {
  const auto set = partners(i);
  return std::binary_search(set.begin(), set.end(), j);
}

PartnerSampler::PartnerSampler(std::size_t n) : n_(n), scratch_(n - 1) {
  for (std::size_t k = 0; k + 1 < n; ++k) {
    scratch_[k] = static_cast<NodeId>(k);
  }
}

void PartnerSampler::draw(NodeId owner, std::span<NodeId> out, Rng& rng) {
  const std::size_t m = n_ - 1;
  const std::size_t K = out.size();
  swaps_.resize(K);
  for (std::size_t t = 0; t < K; ++t) {
    const auto r = static_cast<std::uint32_t>(t + uniform_below(rng, m - t));
    std::swap(scratch_[t], scratch_[r]);
    swaps_[t] = r;
  }
  for (std::size_t t = 0; t < K; ++t) {
    // Candidate slot k stands for node k+1, skipping the owner.
    const NodeId slot = scratch_[t];
    out[t] = slot + 1 < owner ? slot + 1 : slot + 2;
  }
  for (std::size_t t = K; t-- > 0;) std::swap(scratch_[t], scratch_[swaps_[t]]);
  std::sort(out.begin(), out.end());
}

void sample_pairing_into(PairingTable& table, PartnerSampler& sampler,
                         Rng& rng) {
  for (NodeId i = 1; i <= table.n(); ++i) {
    sampler.draw(i, table.mutable_partners(i), rng);
  }
}

PairingTable sample_pairing(const SchemeParams& params, Rng& rng) {
  PairingTable table(params);
  PartnerSampler sampler(params.n);
  sample_pairing_into(table, sampler, rng);
  return table;
}

std::vector<KeyRing> build_key_rings(const PairingTable& table) {
  std::vector<KeyRing> rings(table.n());
  for (NodeId i = 1; i <= table.n(); ++i) rings[i - 1].owner = i;
  for (NodeId i = 1; i <= table.n(); ++i) {
    std::uint32_t slot = 0;
    for (NodeId j : table.partners(i)) {
      const KeyId key{i, j, ++slot};
      rings[i - 1].keys.push_back(key);
      rings[j - 1].keys.push_back(key);
    }
  }
  for (KeyRing& ring : rings) std::sort(ring.keys.begin(), ring.keys.end());
  return rings;
}

std::size_t shared_key_count(const KeyRing& a, const KeyRing& b) {
  std::size_t count = 0;
  auto ia = a.keys.begin();
  auto ib = b.keys.begin();
  while (ia != a.keys.end() && ib != b.keys.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

std::size_t shared_key_count(const PairingTable& table, NodeId i, NodeId j) {
  return static_cast<std::size_t>(table.selects(i, j)) +
         static_cast<std::size_t>(table.selects(j, i));
}

void k_adjacency_edges(const PairingTable& table, std::vector<Edge>& out) {
  out.clear();
  for (NodeId i = 1; i <= table.n(); ++i) {
    for (NodeId j : table.partners(i)) {
      // A mutual pair is emitted by its smaller endpoint only.
      if (j < i && table.selects(j, i)) continue;
      out.push_back(make_edge(i, j));
    }
  }
}

Graph k_adjacency_graph(const PairingTable& table) {
  std::vector<Edge> edges;
  k_adjacency_edges(table, edges);
  return Graph(table.n(), edges);
}

void write_pairing_table(std::ostream& os, const PairingTable& table) {
  for (NodeId i = 1; i <= table.n(); ++i) {
    os << i << ':';
    for (NodeId j : table.partners(i)) os << ' ' << j;
    os << '\n';
  }
}

PairingTable read_pairing_table(std::istream& is) {
  std::vector<std::vector<NodeId>> sets;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw std::invalid_argument("pairing line without ':': " + line);
    }
    const auto owner = std::stoul(line.substr(0, colon));
    if (owner != sets.size() + 1) {
      throw std::invalid_argument("pairing lines out of order at node " +
                                  std::to_string(owner));
    }
    std::istringstream rest(line.substr(colon + 1));
    std::vector<NodeId> set;
    for (NodeId j; rest >> j;) set.push_back(j);
    sets.push_back(std::move(set));
  }
  if (sets.empty()) throw std::invalid_argument("empty pairing table");
  return PairingTable::from_sets(sets.size(), sets.front().size(), sets);
}

}  // namespace pairkey
