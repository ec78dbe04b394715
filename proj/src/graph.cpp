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

#include "pairkey/graph.hpp"

#include <algorithm>
#include <ostream>
#include <queue>
#include <stdexcept>
#include <string>

#include "pairkey/disjoint_set.hpp"

namespace pairkey {

Graph::Graph(std::size_t node_count) : adjacency_(node_count) {}

Graph::Graph(std::size_t node_count, std::span<const Edge> edges)
    : adjacency_(node_count) {
  edge_keys_.reserve(edges.size());
  for (const Edge& e : edges) {
    check_node(e.u);
    check_node(e.v);
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop on node " + std::to_string(e.u));
    }
    if (edge_keys_.insert(key(e.u, e.v)).second) {
      adjacency_[e.u - 1].push_back(e.v);
      adjacency_[e.v - 1].push_back(e.u);
    }
  }
}

std::uint64_t Graph::key(NodeId a, NodeId b) const {
  const Edge e = make_edge(a, b);
  return (std::uint64_t{e.u} << 32) | e.v;
}

void Graph::check_node(NodeId i) const {
  if (i < 1 || i > adjacency_.size()) {
    throw std::out_of_range("node id " + std::to_string(i) +
                            " outside 1.." +
                            std::to_string(adjacency_.size()));
  }
}

bool Graph::has_edge(NodeId a, NodeId b) const {
  check_node(a);
  check_node(b);
  return edge_keys_.contains(key(a, b));
}

std::span<const NodeId> Graph::neighbors(NodeId i) const {
  check_node(i);
  return adjacency_[i - 1];
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_keys_.size());
  for (std::uint64_t k : edge_keys_) {
    out.push_back({static_cast<NodeId>(k >> 32),
                   static_cast<NodeId>(k & 0xffffffffu)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.node_count() == b.node_count() && a.edge_keys_ == b.edge_keys_;
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  edges.reserve(n * (n - 1) / 2);
  for (NodeId i = 1; i <= n; ++i) {
    for (NodeId j = i + 1; j <= n; ++j) edges.push_back({i, j});
  }
  return Graph(n, edges);
}

std::size_t degree(const Graph& g, NodeId i) { return g.neighbors(i).size(); }

std::size_t isolated_count(const Graph& g) {
  std::size_t count = 0;
  for (NodeId i = 1; i <= g.node_count(); ++i) {
    if (g.neighbors(i).empty()) ++count;
  }
  return count;
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.node_count();
  if (n <= 1) return true;
  if (g.edge_count() + 1 < n) return false;
  DisjointSet dsu(n);
  for (NodeId i = 1; i <= n; ++i) {
    for (NodeId j : g.neighbors(i)) {
      if (i < j && dsu.unite(i - 1, j - 1) && dsu.set_count() == 1) {
        return true;
      }
    }
  }
  return dsu.set_count() == 1;
}

bool is_connected_bfs(const Graph& g) {
  const std::size_t n = g.node_count();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::queue<NodeId> frontier;
  frontier.push(1);
  seen[0] = 1;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const NodeId i = frontier.front();
    frontier.pop();
    for (NodeId j : g.neighbors(i)) {
      if (!seen[j - 1]) {
        seen[j - 1] = 1;
        ++reached;
        frontier.push(j);
      }
    }
  }
  return reached == n;
}

ComponentLabeling connected_components(const Graph& g) {
  const std::size_t n = g.node_count();
  DisjointSet dsu(n);
  for (NodeId i = 1; i <= n; ++i) {
    for (NodeId j : g.neighbors(i)) {
      if (i < j) dsu.unite(i - 1, j - 1);
    }
  }
  constexpr std::uint32_t kUnset = 0xffffffffu;
  std::vector<std::uint32_t> root_label(n, kUnset);
  ComponentLabeling out;
  out.labels.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    const std::uint32_t r = dsu.find(i);
    if (root_label[r] == kUnset) {
      root_label[r] = static_cast<std::uint32_t>(out.component_count++);
    }
    out.labels[i] = root_label[r];
  }
  return out;
}

Graph intersect(const Graph& a, const Graph& b) {
  if (a.node_count() != b.node_count()) {
    throw std::invalid_argument(
        "intersect: node counts differ (" + std::to_string(a.node_count()) +
        " vs " + std::to_string(b.node_count()) + ")");
  }
  const Graph& small = a.edge_count() <= b.edge_count() ? a : b;
  const Graph& large = &small == &a ? b : a;
  std::vector<Edge> kept;
  for (NodeId i = 1; i <= small.node_count(); ++i) {
    for (NodeId j : small.neighbors(i)) {
      if (i < j && large.has_edge(i, j)) kept.push_back({i, j});
    }
  }
  return Graph(a.node_count(), kept);
}

void write_edge_list(std::ostream& os, const Graph& g) {
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
}

}  // namespace pairkey
