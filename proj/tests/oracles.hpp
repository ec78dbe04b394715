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

// Exhaustive-enumeration oracles for tiny instances. These walk every
// pairing (and, where needed, every channel state) with exact weights and
// never touch the library's samplers or closed forms.

#ifndef PAIRKEY_TESTS_ORACLES_HPP_
#define PAIRKEY_TESTS_ORACLES_HPP_

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace pairkey::oracle {

using Set = std::vector<std::uint32_t>;

// All K-subsets of {1..n} \ {owner}, each sorted.
inline std::vector<Set> k_subsets(std::size_t n, std::size_t K,
                                  std::uint32_t owner) {
  std::vector<std::uint32_t> pool;
  for (std::uint32_t j = 1; j <= n; ++j) {
    if (j != owner) pool.push_back(j);
  }
  std::vector<Set> out;
  Set cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == K) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < pool.size(); ++i) {
      cur.push_back(pool[i]);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

inline bool contains(const Set& s, std::uint32_t x) {
  for (auto v : s) {
    if (v == x) return true;
  }
  return false;
}

// Calls f(sets, weight) for every pairing; sets[i-1] is node i's set.
inline void for_each_pairing(
    std::size_t n, std::size_t K,
    const std::function<void(const std::vector<Set>&, double)>& f) {
  std::vector<std::vector<Set>> choices;
  for (std::uint32_t i = 1; i <= n; ++i) choices.push_back(k_subsets(n, K, i));
  double weight = 1.0;
  for (const auto& c : choices) weight /= static_cast<double>(c.size());
  std::vector<std::size_t> idx(n, 0);
  std::vector<Set> sets(n);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) sets[i] = choices[i][idx[i]];
    f(sets, weight);
    std::size_t d = 0;
    while (d < n && ++idx[d] == choices[d].size()) idx[d++] = 0;
    if (d == n) break;
  }
}

inline bool k_adjacent(const std::vector<Set>& sets, std::uint32_t i,
                       std::uint32_t j) {
  return contains(sets[i - 1], j) || contains(sets[j - 1], i);
}

// Calls f(up, weight) for every on/off state of the C(n,2) channels; up(i,j)
// reports pair state. Only for n <= 6.
inline void for_each_channel_state(
    std::size_t n, double p,
    const std::function<void(const std::function<bool(std::uint32_t,
                                                      std::uint32_t)>&,
                             double)>& f) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint32_t i = 1; i <= n; ++i) {
    for (std::uint32_t j = i + 1; j <= n; ++j) pairs.push_back({i, j});
  }
  const std::uint64_t states = std::uint64_t{1} << pairs.size();
  for (std::uint64_t s = 0; s < states; ++s) {
    double w = 1.0;
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      w *= ((s >> b) & 1u) ? p : 1.0 - p;
    }
    const auto up = [&](std::uint32_t a, std::uint32_t b) {
      if (a > b) std::swap(a, b);
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (pairs[k].first == a && pairs[k].second == b) return ((s >> k) & 1u) != 0;
      }
      return false;
    };
    f(up, w);
  }
}

// P(node 1 isolated in H ∩ G) over every pairing and channel state.
inline double isolation_prob(std::size_t n, std::size_t K, double p) {
  double total = 0.0;
  for_each_pairing(n, K, [&](const std::vector<Set>& sets, double wp) {
    for_each_channel_state(n, p, [&](const auto& up, double wc) {
      bool isolated = true;
      for (std::uint32_t j = 2; j <= n; ++j) {
        if (k_adjacent(sets, 1, j) && up(1, j)) isolated = false;
      }
      if (isolated) total += wp * wc;
    });
  });
  return total;
}

// P(1 ~ 2) in H(n;K).
inline double link_prob(std::size_t n, std::size_t K) {
  // Count hits exactly; summing ~10^6 tiny weights drifts past 1e-12.
  std::uint64_t hits = 0;
  double weight = 0.0;
  for_each_pairing(n, K, [&](const std::vector<Set>& sets, double w) {
    weight = w;
    hits += k_adjacent(sets, 1, 2);
  });
  return static_cast<double>(hits) * weight;
}

// E[(1-p)^(1[1∈Γ_3] + 1[2∈Γ_3])].
inline double b_n(std::size_t n, std::size_t K, double p) {
  double total = 0.0;
  const auto subsets = k_subsets(n, K, 3);
  for (const Set& s : subsets) {
    total += std::pow(1.0 - p, contains(s, 1) + contains(s, 2));
  }
  return total / static_cast<double>(subsets.size());
}

// Distribution of E*_{n,r} = sum_{i>r} sum_{l<=r} 1[l ∈ Γ_i]; index = value.
inline std::vector<double> estar_distribution(std::size_t n, std::size_t r,
                                              std::size_t K) {
  std::vector<double> dist{1.0};
  for (std::uint32_t i = static_cast<std::uint32_t>(r) + 1; i <= n; ++i) {
    const auto subsets = k_subsets(n, K, i);
    std::vector<double> hits(K + 1, 0.0);
    for (const Set& s : subsets) {
      std::size_t h = 0;
      for (std::uint32_t l = 1; l <= r; ++l) h += contains(s, l);
      hits[h] += 1.0 / static_cast<double>(subsets.size());
    }
    std::vector<double> next(dist.size() + K, 0.0);
    for (std::size_t a = 0; a < dist.size(); ++a) {
      for (std::size_t h = 0; h <= K; ++h) next[a + h] += dist[a] * hits[h];
    }
    dist = std::move(next);
  }
  return dist;
}

// Cov(1[1 ~K 2], 1[1 ~K 3]) in H(n;K).
inline double edge_covariance(std::size_t n, std::size_t K) {
  double e12 = 0.0, e13 = 0.0, both = 0.0;
  for_each_pairing(n, K, [&](const std::vector<Set>& sets, double w) {
    const bool a = k_adjacent(sets, 1, 2);
    const bool b = k_adjacent(sets, 1, 3);
    e12 += a * w;
    e13 += b * w;
    both += (a && b) * w;
  });
  return both - e12 * e13;
}

}  // namespace pairkey::oracle

#endif  // PAIRKEY_TESTS_ORACLES_HPP_
