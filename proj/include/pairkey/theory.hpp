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

// Closed-form quantities for the intersection of the pairwise key graph
// H(n;K) with an on/off channel G(n;p). Every function is pure and throws
// std::domain_error outside its domain. Bounds are returned unclamped.

#ifndef PAIRKEY_THEORY_HPP_
#define PAIRKEY_THEORY_HPP_

#include <cstddef>
#include <optional>

namespace pairkey::theory {

// P(i ~ j) in H(n;K): 2K/(n-1) - (K/(n-1))^2.
double lambda_n(std::size_t n, std::size_t K);

// P(i ~ j) in H ∩ G: p * lambda_n(K).
double edge_prob(std::size_t n, std::size_t K, double p);

// Critical constant for the scaling p*(2K - K^2/(n-1)) ~ c log n. Continuous
// on [0,1], equal to 1 at p=0 and 0 at p=1.
double tau(double p);

// tau(p)/(2p) = 1/(p - log(1-p)), on (0,1). The critical K is about
// tau_hat(p) * log n when p is held fixed.
double tau_hat(double p);

// c_n with p*(2K - K^2/(n-1)) = c_n log n. Requires n >= 3.
double scaling_c_n(std::size_t n, std::size_t K, double p);

struct Alpha {
  double alpha = 0.0;
  // Approximates n * isolation_prob(n, K, p).
  double exp_alpha = 0.0;
};

// alpha_n = (1 - c_n) log n + K (p + log(1-p)).
Alpha alpha_n(std::size_t n, std::size_t K, double p);

// -x - log(1-x) on [0,1).
double psi(double x);

// P(node 1 is isolated in H ∩ G) = (1-p)^K (1 - pK/(n-1))^(n-K-1).
double isolation_prob(std::size_t n, std::size_t K, double p);

// Limit of isolation_prob as n grows with K and p fixed: (1-p)^K e^{-pK}.
double asymptotic_isolation_prob(std::size_t K, double p);

// E[(1-p)^{1[k in Γ_j]}] = 1 - pK/(n-1).
double u_n(std::size_t n, std::size_t K, double p);

// Upper bound on E[χ1 χ2] / E[χ1]^2, where χi is the isolation indicator of
// node i: (1/(1-p)) (K/(n-1))^2 + (1 - pK/(n-1))^{-2}. Requires p < 1.
double cross_moment_ratio_bound(std::size_t n, std::size_t K, double p);

// Mean of E*_{n,r}, the number of selections of nodes 1..r made by nodes
// r+1..n: r(n-r)K/(n-1).
double estar_mean(std::size_t n, std::size_t r, std::size_t K);

// Chernoff-Hoeffding bound on P(E*_{n,r} <= (1-t) mean):
// exp(-(t^2/2) * mean).
double estar_chernoff(std::size_t n, std::size_t r, std::size_t K, double t);

// Bound on P(nodes 1..r induce a connected subgraph of H ∩ G):
// r^{r-2} (p lambda_n(K))^{r-1}. May exceed 1.
double connected_subset_bound(std::size_t n, std::size_t r, std::size_t K,
                              double p);

// tau_hat(p) * log n.
double predicted_threshold_K(std::size_t n, double p);

// Every closed form evaluated at one parameter point. Quantities whose
// domain excludes the point (p = 1, n < 3) are empty.
struct TheoryReport {
  std::size_t n = 0;
  std::size_t K = 0;
  double p = 0.0;
  double lambda_n = 0.0;
  double edge_prob = 0.0;
  std::optional<double> c_n;
  std::optional<double> alpha_n;
  std::optional<double> exp_alpha_n;
  double tau = 0.0;
  std::optional<double> tau_hat;
  double isolation_prob = 0.0;
  double expected_isolated = 0.0;
  std::optional<double> asymptotic_isolation_prob;
  double u_n = 0.0;
  std::optional<double> predicted_threshold_K;
  std::optional<double> cross_moment_bound;
};

TheoryReport make_report(std::size_t n, std::size_t K, double p);

}  // namespace pairkey::theory

#endif  // PAIRKEY_THEORY_HPP_
