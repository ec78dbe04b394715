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

#ifndef PAIRKEY_TESTS_TEST_SUPPORT_HPP_
#define PAIRKEY_TESTS_TEST_SUPPORT_HPP_

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "pairkey/graph.hpp"

namespace pairkey::testing {

// |hits/trials - q| <= 3 sqrt(q(1-q)/trials).
inline bool within_3sigma(std::uint64_t hits, std::uint64_t trials, double q) {
  const double est = static_cast<double>(hits) / static_cast<double>(trials);
  return std::fabs(est - q) <=
         3.0 * std::sqrt(q * (1.0 - q) / static_cast<double>(trials));
}

// Random simple graph for property tests; each pair kept with probability
// `density`.
inline Graph random_graph(std::mt19937_64& gen, std::size_t n, double density) {
  std::bernoulli_distribution keep(density);
  std::vector<Edge> edges;
  for (NodeId i = 1; i <= n; ++i) {
    for (NodeId j = i + 1; j <= n; ++j) {
      if (keep(gen)) edges.push_back({i, j});
    }
  }
  return Graph(n, edges);
}

}  // namespace pairkey::testing

#endif  // PAIRKEY_TESTS_TEST_SUPPORT_HPP_
