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

#include "pairkey/theory.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pairkey::theory {
namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::domain_error(what);
}

void require_scheme(std::size_t n, std::size_t K) {
  require(n >= 2, "n must be >= 2");
  require(K >= 1, "K must be >= 1");
  require(K < n, "K must be < n");
}

void require_p_half_open(double p) {
  require(p > 0.0 && p <= 1.0, "p must be in (0,1]");
}

void require_p_open(double p) {
  require(p > 0.0 && p < 1.0, "p must be in (0,1)");
}

// -log(1-p)/p, accurate as p -> 0.
double neg_log1m_over(double p) {
  if (p < 1e-4) return 1.0 + p / 2.0 + p * p / 3.0 + p * p * p / 4.0;
  return -std::log1p(-p) / p;
}

}  // namespace

double lambda_n(std::size_t n, std::size_t K) {
  require_scheme(n, K);
  const double q = static_cast<double>(K) / static_cast<double>(n - 1);
  return 2.0 * q - q * q;
}

double edge_prob(std::size_t n, std::size_t K, double p) {
  require_p_half_open(p);
  return p * lambda_n(n, K);
}

double tau(double p) {
  require(p >= 0.0 && p <= 1.0, "p must be in [0,1]");
  if (p == 0.0) return 1.0;
  if (p == 1.0) return 0.0;
  return 2.0 / (1.0 + neg_log1m_over(p));
}

double tau_hat(double p) {
  require_p_open(p);
  return 1.0 / (p - std::log1p(-p));
}

double scaling_c_n(std::size_t n, std::size_t K, double p) {
  require(n >= 3, "n must be >= 3");
  require_scheme(n, K);
  require_p_half_open(p);
  const double k = static_cast<double>(K);
  return p * (2.0 * k - k * k / static_cast<double>(n - 1)) /
         std::log(static_cast<double>(n));
}

Alpha alpha_n(std::size_t n, std::size_t K, double p) {
  require_p_open(p);
  const double c = scaling_c_n(n, K, p);
  const double a = (1.0 - c) * std::log(static_cast<double>(n)) +
                   static_cast<double>(K) * (p + std::log1p(-p));
  return {a, std::exp(a)};
}

double psi(double x) {
  require(x >= 0.0 && x < 1.0, "x must be in [0,1)");
  if (x < 1e-3) {
    // Series x^2/2 + x^3/3 + ...; the direct form cancels badly here.
    double term = x;
    double sum = 0.0;
    for (int k = 2; k <= 8; ++k) {
      term *= x;
      sum += term / k;
    }
    return sum;
  }
  return -x - std::log1p(-x);
}

double isolation_prob(std::size_t n, std::size_t K, double p) {
  require_scheme(n, K);
  require_p_half_open(p);
  const double q = p * static_cast<double>(K) / static_cast<double>(n - 1);
  return std::pow(1.0 - p, static_cast<double>(K)) *
         std::pow(1.0 - q, static_cast<double>(n - K - 1));
}

double asymptotic_isolation_prob(std::size_t K, double p) {
  require(K >= 1, "K must be >= 1");
  require_p_open(p);
  const double k = static_cast<double>(K);
  return std::pow(1.0 - p, k) * std::exp(-p * k);
}

double u_n(std::size_t n, std::size_t K, double p) {
  require_scheme(n, K);
  require_p_half_open(p);
  return 1.0 - p * static_cast<double>(K) / static_cast<double>(n - 1);
}

double cross_moment_ratio_bound(std::size_t n, std::size_t K, double p) {
  require_scheme(n, K);
  require_p_open(p);
  const double q = static_cast<double>(K) / static_cast<double>(n - 1);
  const double u = 1.0 - p * q;
  return q * q / (1.0 - p) + 1.0 / (u * u);
}

double estar_mean(std::size_t n, std::size_t r, std::size_t K) {
  require_scheme(n, K);
  require(r >= 2 && r + 1 <= n, "r must be in [2, n-1]");
  return static_cast<double>(r) * static_cast<double>(n - r) *
         static_cast<double>(K) / static_cast<double>(n - 1);
}

double estar_chernoff(std::size_t n, std::size_t r, std::size_t K, double t) {
  require(t > 0.0 && t < 1.0, "t must be in (0,1)");
  return std::exp(-(t * t / 2.0) * estar_mean(n, r, K));
}

double connected_subset_bound(std::size_t n, std::size_t r, std::size_t K,
                              double p) {
  require(r >= 2 && r <= n, "r must be in [2, n]");
  const double rr = static_cast<double>(r);
  return std::pow(rr, rr - 2.0) * std::pow(edge_prob(n, K, p), rr - 1.0);
}

double predicted_threshold_K(std::size_t n, double p) {
  require(n >= 3, "n must be >= 3");
  return tau_hat(p) * std::log(static_cast<double>(n));
}

TheoryReport make_report(std::size_t n, std::size_t K, double p) {
  TheoryReport r;
  r.n = n;
  r.K = K;
  r.p = p;
  r.lambda_n = lambda_n(n, K);
  r.edge_prob = edge_prob(n, K, p);
  r.tau = tau(p);
  r.isolation_prob = isolation_prob(n, K, p);
  r.expected_isolated = static_cast<double>(n) * r.isolation_prob;
  r.u_n = u_n(n, K, p);
  if (n >= 3) r.c_n = scaling_c_n(n, K, p);
  if (p < 1.0) {
    r.tau_hat = tau_hat(p);
    r.asymptotic_isolation_prob = asymptotic_isolation_prob(K, p);
    r.cross_moment_bound = cross_moment_ratio_bound(n, K, p);
    if (n >= 3) {
      const Alpha a = alpha_n(n, K, p);
      r.alpha_n = a.alpha;
      r.exp_alpha_n = a.exp_alpha;
      r.predicted_threshold_K = predicted_threshold_K(n, p);
    }
  }
  return r;
}

}  // namespace pairkey::theory
