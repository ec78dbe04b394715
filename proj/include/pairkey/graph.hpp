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

#ifndef PAIRKEY_GRAPH_HPP_
#define PAIRKEY_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <unordered_set>
#include <vector>

namespace pairkey {

// Node ids are 1-based on every public interface. Storage is 0-based.
using NodeId = std::uint32_t;

// Unordered pair {u, v}; normalized so that u < v.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Returns {min(a,b), max(a,b)}.
constexpr Edge make_edge(NodeId a, NodeId b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

// Undirected simple graph on nodes 1..n. Immutable once built: construct
// from an edge list, which may contain duplicates in either orientation
// (they are collapsed). Self-loops and out-of-range ids are rejected.
class Graph {
 public:
  explicit Graph(std::size_t node_count);
  Graph(std::size_t node_count, std::span<const Edge> edges);

  std::size_t node_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_keys_.size(); }

  bool has_edge(NodeId a, NodeId b) const;

  // Neighbors of node i (1-based ids), in insertion order.
  std::span<const NodeId> neighbors(NodeId i) const;

  // All edges, normalized and sorted lexicographically.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  std::uint64_t key(NodeId a, NodeId b) const;
  void check_node(NodeId i) const;

  std::vector<std::vector<NodeId>> adjacency_;
  std::unordered_set<std::uint64_t> edge_keys_;
};

// Complete graph K_n.
Graph complete_graph(std::size_t n);

struct ComponentLabeling {
  // labels[i] is the component id of node i+1; ids are 0..count-1, numbered
  // by smallest member node.
  std::vector<std::uint32_t> labels;
  std::size_t component_count = 0;
};

// Number of neighbors of node i. Throws std::out_of_range unless 1 <= i <= n.
std::size_t degree(const Graph& g, NodeId i);

std::size_t isolated_count(const Graph& g);

// Disjoint-set connectivity; the production path.
bool is_connected(const Graph& g);

// Breadth-first connectivity; kept as a cross-check for is_connected.
bool is_connected_bfs(const Graph& g);

ComponentLabeling connected_components(const Graph& g);

// Edge-set intersection. Throws std::invalid_argument on mismatched node
// counts.
Graph intersect(const Graph& a, const Graph& b);

// One "i j" line per edge, 1-based, i < j, sorted lexicographically.
void write_edge_list(std::ostream& os, const Graph& g);

}  // namespace pairkey

#endif  // PAIRKEY_GRAPH_HPP_
