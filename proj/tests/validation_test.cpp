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

#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "pairkey/theory.hpp"

namespace pairkey {
namespace {

TEST_CASE("all checks pass at n=5, K=2, p=0.5") {
  const ValidationReport r = validate_bounds(5, 2, 0.5, 100000, 42);
  for (const BoundCheck& c : r.checks) {
    CAPTURE(c.name);
    CAPTURE(c.empirical);
    CAPTURE(c.theory);
    CAPTURE(c.sigma);
    CHECK(c.status == CheckStatus::kPass);
  }
  CHECK(r.passed());
  CHECK(r.checks.size() == 9);
}

TEST_CASE("oracle-side values of the bound checks") {
  // b_n <= u_n^2 holds exactly, not just up to noise.
  const double u = theory::u_n(5, 2, 0.5);
  CHECK(oracle::b_n(5, 2, 0.5) == doctest::Approx(13.0 / 24.0).epsilon(1e-12));
  CHECK(oracle::b_n(5, 2, 0.5) <= u * u);
  CHECK(oracle::edge_covariance(5, 2) <= 0.0);
  CHECK(oracle::edge_covariance(6, 2) <= 0.0);

  const ValidationReport r = validate_bounds(5, 2, 0.5, 100000, 9);
  const BoundCheck* b = r.find("b_n_le_u_n_sq");
  REQUIRE(b);
  CHECK(std::fabs(b->empirical - 13.0 / 24.0) <= 3.0 * b->sigma);
  const BoundCheck* cov = r.find("edge_covariance_H");
  REQUIRE(cov);
  CHECK(std::fabs(cov->empirical - oracle::edge_covariance(5, 2)) <=
        3.0 * cov->sigma + 1e-12);
}

TEST_CASE("n=3, K=1, p=0.5 isolation") {
  const ValidationReport r = validate_bounds(3, 1, 0.5, 100000, 5);
  const BoundCheck* iso = r.find("isolation_prob");
  REQUIRE(iso);
  CHECK(iso->theory == doctest::Approx(0.375).epsilon(1e-12));
  CHECK(iso->status == CheckStatus::kPass);
}

TEST_CASE("p=1 skips the cross-moment check") {
  const ValidationReport r = validate_bounds(5, 2, 1.0, 2000, 5);
  const BoundCheck* c = r.find("cross_moment_ratio");
  REQUIRE(c);
  CHECK(c->status == CheckStatus::kSkipped);
  CHECK(c->note == "undefined at p=1");
}

TEST_CASE("n=20, K=2, p=0.3 cross-moment ratio under the bound") {
  const ValidationReport r = validate_bounds(20, 2, 0.3, 100000, 13);
  const BoundCheck* c = r.find("cross_moment_ratio");
  REQUIRE(c);
  CHECK(c->status == CheckStatus::kPass);
  CHECK(c->theory ==
        doctest::Approx(theory::cross_moment_ratio_bound(20, 2, 0.3)));
  CHECK(r.passed());
}

TEST_CASE("input checks") {
  CHECK_THROWS_AS(validate_bounds(5, 2, 0.5, 999, 1), std::invalid_argument);
  CHECK_THROWS_AS(validate_bounds(51, 2, 0.5, 1000, 1), std::invalid_argument);
  CHECK_THROWS_AS(validate_bounds(2, 1, 0.5, 1000, 1), std::invalid_argument);
  CHECK_THROWS_AS(validate_bounds(5, 5, 0.5, 1000, 1), std::invalid_argument);
}

TEST_CASE("deterministic in the seed") {
  const ValidationReport a = validate_bounds(6, 2, 0.4, 5000, 77);
  const ValidationReport b = validate_bounds(6, 2, 0.4, 5000, 77);
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].empirical == b.checks[i].empirical);
  }
}

}  // namespace
}  // namespace pairkey
