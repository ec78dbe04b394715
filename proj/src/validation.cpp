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

#include "pairkey/validation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "pairkey/channel.hpp"
#include "pairkey/pairing.hpp"
#include "pairkey/rng.hpp"
#include "pairkey/theory.hpp"

namespace pairkey {
namespace {

constexpr std::uint64_t kValidateTag = 0x76616c6964ull;  // "valid"
constexpr double kChernoffT = 0.5;
constexpr double kSlack = 1e-12;

double mean(const std::vector<double>& xs) {
  return std::accumulate(xs.begin(), xs.end(), 0.0) /
         static_cast<double>(xs.size());
}

// Standard error of the sample mean.
double sem(const std::vector<double>& xs) {
  const double m = mean(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - m) * (x - m);
  const auto N = static_cast<double>(xs.size());
  return std::sqrt(ss / (N - 1.0) / N);
}

BoundCheck two_sided(std::string name, double empirical, double theory,
                     double sigma) {
  BoundCheck c{std::move(name), true, empirical, theory, sigma,
               CheckStatus::kFail, {}};
  if (std::fabs(empirical - theory) <= 3.0 * sigma + kSlack) {
    c.status = CheckStatus::kPass;
  }
  return c;
}

BoundCheck upper_bound(std::string name, double empirical, double bound,
                       double sigma) {
  BoundCheck c{std::move(name), false, empirical, bound, sigma,
               CheckStatus::kFail, {}};
  if (empirical <= bound + 3.0 * sigma + kSlack) c.status = CheckStatus::kPass;
  return c;
}

// Binomial standard error at the theoretical rate.
double binomial_sigma(double q, std::uint64_t samples) {
  return std::sqrt(q * (1.0 - q) / static_cast<double>(samples));
}

}  // namespace

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "fail";
    case CheckStatus::kSkipped:
      return "skipped";
  }
  return "?";
}

bool ValidationReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const BoundCheck& c) {
    return c.status == CheckStatus::kFail;
  });
}

const BoundCheck* ValidationReport::find(std::string_view name) const {
  for (const BoundCheck& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

ValidationReport validate_bounds(std::size_t n, std::size_t K, double p,
                                 std::uint64_t samples, std::uint64_t seed) {
  if (n < 3 || n > 50) {
    throw std::invalid_argument("validate needs 3 <= n <= 50");
  }
  if (samples < 1000) {
    throw std::invalid_argument("validate needs at least 1000 samples");
  }
  SchemeParams{n, K}.validate();
  ChannelParams{p}.validate();

  const auto N = static_cast<std::size_t>(samples);
  std::vector<double> edge(N), paired(N), iso1(N), iso12(N), degree(N),
      b_term(N), estar(N), adj12(N), adj13(N);

  PairingTable table({n, K});
  PartnerSampler sampler(n);
  ChannelMask mask(n);
  const double fail_weight = 1.0 - p;
  const auto keyed = [&](NodeId i, NodeId j) {
    return shared_key_count(table, i, j) > 0;
  };
  const auto isolated = [&](NodeId i) {
    for (NodeId j = 1; j <= n; ++j) {
      if (j != i && keyed(i, j) && mask.up(i, j)) return false;
    }
    return true;
  };

  for (std::size_t t = 0; t < N; ++t) {
    Rng rng(derive_seed({seed, kValidateTag, n, K, double_bits(p), t}));
    sample_pairing_into(table, sampler, rng);
    sample_channel_mask(mask, ChannelParams{p}, rng);

    edge[t] = keyed(1, 2) && mask.up(1, 2);
    paired[t] = table.selects(2, 1);
    const bool i1 = isolated(1);
    iso1[t] = i1;
    iso12[t] = i1 && isolated(2);

    std::size_t deg = 0;
    for (NodeId j = 2; j <= n; ++j) deg += keyed(1, j);
    degree[t] = static_cast<double>(deg);

    const int xy = table.selects(3, 1) + table.selects(3, 2);
    b_term[t] = std::pow(fail_weight, xy);

    std::size_t e = 0;
    for (NodeId i = 3; i <= n; ++i) e += table.selects(i, 1) + table.selects(i, 2);
    estar[t] = static_cast<double>(e);

    adj12[t] = keyed(1, 2);
    adj13[t] = keyed(1, 3);
  }

  ValidationReport report{n, K, p, samples, seed, {}};
  auto& checks = report.checks;

  const double ep = theory::edge_prob(n, K, p);
  checks.push_back(two_sided("edge_prob", mean(edge), ep,
                             binomial_sigma(ep, samples)));

  const double sel = static_cast<double>(K) / static_cast<double>(n - 1);
  checks.push_back(two_sided("pairing_prob", mean(paired), sel,
                             binomial_sigma(sel, samples)));

  const double ip = theory::isolation_prob(n, K, p);
  checks.push_back(two_sided("isolation_prob", mean(iso1), ip,
                             binomial_sigma(ip, samples)));

  const double mean_deg =
      static_cast<double>(K) + static_cast<double>(n - K - 1) * sel;
  checks.push_back(two_sided("mean_degree_H", mean(degree), mean_deg,
                             sem(degree)));

  const double u = theory::u_n(n, K, p);
  checks.push_back(upper_bound("b_n_le_u_n_sq", mean(b_term), u * u,
                               sem(b_term)));

  {
    const double m1 = mean(iso1);
    const double m12 = mean(iso12);
    if (p >= 1.0) {
      BoundCheck c{"cross_moment_ratio", false, 0.0, 0.0, 0.0,
                   CheckStatus::kSkipped, "undefined at p=1"};
      checks.push_back(c);
    } else if (m1 == 0.0) {
      BoundCheck c{"cross_moment_ratio", false, 0.0,
                   theory::cross_moment_ratio_bound(n, K, p), 0.0,
                   CheckStatus::kSkipped, "no isolated node observed"};
      checks.push_back(c);
    } else {
      // Delta method on m12 / m1^2.
      std::vector<double> influence(N);
      const double a = 1.0 / (m1 * m1);
      const double b = 2.0 * m12 / (m1 * m1 * m1);
      for (std::size_t t = 0; t < N; ++t) {
        influence[t] = a * iso12[t] - b * iso1[t];
      }
      checks.push_back(upper_bound("cross_moment_ratio", m12 / (m1 * m1),
                                   theory::cross_moment_ratio_bound(n, K, p),
                                   sem(influence)));
    }
  }

  const double es_mean = theory::estar_mean(n, 2, K);
  checks.push_back(two_sided("estar_mean", mean(estar), es_mean, sem(estar)));

  {
    const double cut = (1.0 - kChernoffT) * es_mean;
    std::vector<double> tail(N);
    std::transform(estar.begin(), estar.end(), tail.begin(),
                   [cut](double e) { return e <= cut ? 1.0 : 0.0; });
    BoundCheck c = upper_bound("estar_chernoff_tail", mean(tail),
                               theory::estar_chernoff(n, 2, K, kChernoffT),
                               sem(tail));
    c.note = "t=0.5";
    checks.push_back(c);
  }

  {
    const double m2 = mean(adj12);
    const double m3 = mean(adj13);
    std::vector<double> cross(N);
    for (std::size_t t = 0; t < N; ++t) {
      cross[t] = (adj12[t] - m2) * (adj13[t] - m3);
    }
    checks.push_back(upper_bound("edge_covariance_H", mean(cross), 0.0,
                                 sem(cross)));
  }
  return report;
}

}  // namespace pairkey
