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

#include <cstdio>
#include <fstream>
#include <ostream>

namespace pairkey {
namespace {

using nlohmann::ordered_json;

ordered_json optional_value(const std::optional<double>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json optional_value(const std::optional<std::size_t>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json proportion_json(const Proportion& q) {
  ordered_json j;
  j["count"] = q.count;
  j["prob"] = q.estimate();
  j["stderr"] = q.standard_error();
  if (q.count == 0) {
    j["note"] = "rule-of-three upper bound on rate: " +
                format_prob(q.rule_of_three());
  } else if (q.count == q.trials) {
    j["note"] = "rule-of-three upper bound on 1-rate: " +
                format_prob(q.rule_of_three());
  }
  return j;
}

}  // namespace

std::string format_prob(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

void write_csv(std::ostream& os, const EstimateTable& table) {
  os << kCsvHeader << '\n';
  for (const CellEstimate& r : table.rows) {
    os << to_string(r.channel) << ',' << r.n << ',' << r.K << ','
       << format_prob(r.p) << ',' << r.connected.trials << ','
       << r.connected.count << ',' << format_prob(r.connected.estimate())
       << ',' << format_prob(r.connected.standard_error()) << ','
       << r.no_isolated.count << ',' << format_prob(r.no_isolated.estimate())
       << ',' << format_prob(r.no_isolated.standard_error()) << ',' << r.seed
       << '\n';
  }
}

ordered_json to_json(const EstimateTable& table) {
  ordered_json rows = ordered_json::array();
  for (const CellEstimate& r : table.rows) {
    ordered_json j;
    j["channel"] = to_string(r.channel);
    j["n"] = r.n;
    j["K"] = r.K;
    j["p"] = r.p;
    j["trials"] = r.connected.trials;
    j["connected"] = proportion_json(r.connected);
    j["no_isolated"] = proportion_json(r.no_isolated);
    j["seed"] = r.seed;
    j["forced_rho"] = r.forced_rho;
    rows.push_back(std::move(j));
  }
  return ordered_json{{"rows", std::move(rows)}};
}

EstimateTable table_from_json(const nlohmann::json& j) {
  EstimateTable table;
  for (const auto& r : j.at("rows")) {
    CellEstimate row;
    row.channel = parse_channel(r.at("channel").get<std::string>());
    row.n = r.at("n").get<std::size_t>();
    row.K = r.at("K").get<std::size_t>();
    row.p = r.at("p").get<double>();
    const auto trials = r.at("trials").get<std::uint64_t>();
    row.connected = {r.at("connected").at("count").get<std::uint64_t>(),
                     trials};
    row.no_isolated = {r.at("no_isolated").at("count").get<std::uint64_t>(),
                       trials};
    row.seed = r.at("seed").get<std::uint64_t>();
    row.forced_rho = r.value("forced_rho", false);
    table.rows.push_back(row);
  }
  return table;
}

ordered_json to_json(const theory::TheoryReport& r) {
  ordered_json j;
  j["n"] = r.n;
  j["K"] = r.K;
  j["p"] = r.p;
  j["lambda_n"] = r.lambda_n;
  j["edge_prob"] = r.edge_prob;
  j["c_n"] = optional_value(r.c_n);
  j["alpha_n"] = optional_value(r.alpha_n);
  j["exp_alpha_n"] = optional_value(r.exp_alpha_n);
  j["tau"] = r.tau;
  j["tau_hat"] = optional_value(r.tau_hat);
  j["isolation_prob"] = r.isolation_prob;
  j["expected_isolated"] = r.expected_isolated;
  j["asymptotic_isolation_prob"] = optional_value(r.asymptotic_isolation_prob);
  j["u_n"] = r.u_n;
  j["predicted_threshold_K"] = optional_value(r.predicted_threshold_K);
  j["cross_moment_bound"] = optional_value(r.cross_moment_bound);
  return j;
}

ordered_json to_json(const ValidationReport& report) {
  ordered_json checks = ordered_json::array();
  for (const BoundCheck& c : report.checks) {
    ordered_json j;
    j["name"] = c.name;
    j["kind"] = c.two_sided ? "two_sided" : "upper_bound";
    j["empirical"] = c.empirical;
    j["theory"] = c.theory;
    j["sigma"] = c.sigma;
    j["status"] = to_string(c.status);
    if (!c.note.empty()) j["note"] = c.note;
    checks.push_back(std::move(j));
  }
  ordered_json j;
  j["n"] = report.n;
  j["K"] = report.K;
  j["p"] = report.p;
  j["samples"] = report.samples;
  j["seed"] = report.seed;
  j["passed"] = report.passed();
  j["checks"] = std::move(checks);
  return j;
}

ordered_json to_json(const ChannelComparison& c) {
  ordered_json cells = ordered_json::array();
  for (const CellDelta& d : c.cells) {
    cells.push_back({{"K", d.K},
                     {"p", d.p},
                     {"delta_connected", d.delta_connected},
                     {"delta_no_isolated", d.delta_no_isolated},
                     {"forced_rho", d.forced_rho}});
  }
  ordered_json crossovers = ordered_json::array();
  for (const CrossoverDelta& d : c.crossovers) {
    crossovers.push_back({{"p", d.p},
                          {"baseline_K", optional_value(d.baseline_K)},
                          {"other_K", optional_value(d.other_K)},
                          {"distance", optional_value(d.distance())},
                          {"forced_rho", d.forced_rho}});
  }
  ordered_json j;
  j["baseline"] = to_json(c.baseline);
  j["other"] = to_json(c.other);
  j["cells"] = std::move(cells);
  j["crossovers"] = std::move(crossovers);
  return j;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw OutputError("cannot open " + path.string() + " for writing");
  out << text;
  out.flush();
  if (!out) throw OutputError("write failed for " + path.string());
}

}  // namespace pairkey
