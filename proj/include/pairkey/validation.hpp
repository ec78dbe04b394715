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

#ifndef PAIRKEY_VALIDATION_HPP_
#define PAIRKEY_VALIDATION_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pairkey {

enum class CheckStatus { kPass, kFail, kSkipped };

std::string_view to_string(CheckStatus s);

// Two-sided checks pass when |empirical - theory| <= 3 sigma; one-sided
// (bound) checks pass when empirical <= theory + 3 sigma.
struct BoundCheck {
  std::string name;
  bool two_sided = false;
  double empirical = 0.0;
  double theory = 0.0;
  double sigma = 0.0;
  CheckStatus status = CheckStatus::kSkipped;
  std::string note;
};

struct ValidationReport {
  std::size_t n = 0;
  std::size_t K = 0;
  double p = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<BoundCheck> checks;

  bool passed() const;
  const BoundCheck* find(std::string_view name) const;
};

// Samples the pairing and the on/off channel `samples` times and compares
// the empirical moments with their closed forms and bounds:
//
//   edge_prob            P(1 ~ 2) in H ∩ G vs p lambda_n(K)
//   pairing_prob         P(1 in Γ_2) vs K/(n-1)
//   isolation_prob       P(node 1 isolated) vs (1-p)^K (1-pK/(n-1))^(n-K-1)
//   mean_degree_H        E[deg_H(1)] vs K + (n-K-1) K/(n-1)
//   b_n_le_u_n_sq        E[(1-p)^(1[1∈Γ_3] + 1[2∈Γ_3])] <= u_n^2
//   cross_moment_ratio   E[χ1 χ2]/E[χ1]^2 <= bound (skipped at p = 1)
//   estar_mean           E[E*_{n,2}] vs 2(n-2)K/(n-1)
//   estar_chernoff_tail  P(E*_{n,2} <= mean/2) <= exp(-mean/8)
//   edge_covariance_H    Cov(1[1 ~K 2], 1[1 ~K 3]) <= 0
//
// Requires 3 <= n <= 50 and samples >= 1000 (std::invalid_argument).
ValidationReport validate_bounds(std::size_t n, std::size_t K, double p,
                                 std::uint64_t samples, std::uint64_t seed);

}  // namespace pairkey

#endif  // PAIRKEY_VALIDATION_HPP_
