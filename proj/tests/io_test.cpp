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

#include "pairkey/io.hpp"

#include <filesystem>
#include <sstream>

#include "doctest.h"

namespace pairkey {
namespace {

TEST_CASE("empty table is header-only CSV") {
  std::ostringstream os;
  write_csv(os, EstimateTable{});
  CHECK(os.str() == std::string(kCsvHeader) + "\n");
}

TEST_CASE("one-cell table") {
  EstimateTable t;
  CellEstimate r;
  r.channel = Channel::kOnOff;
  r.n = 200;
  r.K = 12;
  r.p = 0.2;
  r.connected = {251, 500};
  r.no_isolated = {263, 500};
  r.seed = 42;
  t.rows.push_back(r);
  std::ostringstream os;
  write_csv(os, t);
  CHECK(os.str() == std::string(kCsvHeader) +
                        "\non_off,200,12,0.2,500,251,0.502,0.0223605,263,"
                        "0.526,0.0223304,42\n");
}

TEST_CASE("format_prob uses six significant digits") {
  CHECK(format_prob(0.123456789) == "0.123457");
  CHECK(format_prob(1.0) == "1");
  CHECK(format_prob(0.0) == "0");
  CHECK(format_prob(1.0 / 3.0) == "0.333333");
}

TEST_CASE("property: JSON round trip of estimate tables") {
  std::mt19937_64 gen(5);
  for (int round = 0; round < 50; ++round) {
    EstimateTable t;
    const int rows = static_cast<int>(gen() % 12);
    for (int i = 0; i < rows; ++i) {
      CellEstimate r;
      r.channel = static_cast<Channel>(gen() % 3);
      r.n = 2 + gen() % 1000;
      r.K = 1 + gen() % (r.n - 1);
      r.p = static_cast<double>(1 + gen() % 1000) / 1000.0;
      const std::uint64_t trials = 1 + gen() % 10000;
      r.connected = {gen() % (trials + 1), trials};
      r.no_isolated = {gen() % (trials + 1), trials};
      r.seed = gen();
      r.forced_rho = gen() % 2;
      t.rows.push_back(r);
    }
    const std::string text = to_json(t).dump();
    CHECK(table_from_json(nlohmann::json::parse(text)) == t);
  }
}

TEST_CASE("rule-of-three notes on saturated cells") {
  EstimateTable t;
  CellEstimate r;
  r.connected = {0, 500};
  r.no_isolated = {500, 500};
  t.rows.push_back(r);
  const auto j = to_json(t);
  CHECK(j["rows"][0]["connected"]["note"].get<std::string>().find("0.006") !=
        std::string::npos);
  CHECK(j["rows"][0]["no_isolated"].contains("note"));
}

TEST_CASE("theory report JSON has nulls outside the domain") {
  const auto j = to_json(theory::make_report(200, 12, 1.0));
  CHECK(j["tau_hat"].is_null());
  CHECK(j["tau"].get<double>() == 0.0);
  const auto k = to_json(theory::make_report(200, 12, 0.2));
  CHECK(k["predicted_threshold_K"].get<double>() ==
        doctest::Approx(12.5213236739456));
}

TEST_CASE("write_file reports the path on failure") {
  const std::filesystem::path bad = "/nonexistent-dir/for/sure/out.csv";
  try {
    write_file(bad, "x");
    FAIL("expected OutputError");
  } catch (const OutputError& e) {
    CHECK(std::string(e.what()).find(bad.string()) != std::string::npos);
  }
}

}  // namespace
}  // namespace pairkey
