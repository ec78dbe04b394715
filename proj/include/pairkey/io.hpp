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

#ifndef PAIRKEY_IO_HPP_
#define PAIRKEY_IO_HPP_

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "pairkey/montecarlo.hpp"
#include "pairkey/theory.hpp"
#include "pairkey/validation.hpp"

namespace pairkey {

inline constexpr const char* kCsvHeader =
    "channel,n,K,p,trials,count_connected,prob_connected,stderr_connected,"
    "count_no_isolated,prob_no_isolated,stderr_no_isolated,seed";

// Six significant digits, "%.6g".
std::string format_prob(double x);

// Header plus one row per cell in (channel, p, K) order. LF line endings.
void write_csv(std::ostream& os, const EstimateTable& table);

nlohmann::ordered_json to_json(const EstimateTable& table);
nlohmann::ordered_json to_json(const theory::TheoryReport& report);
nlohmann::ordered_json to_json(const ValidationReport& report);
nlohmann::ordered_json to_json(const ChannelComparison& comparison);

// Inverse of to_json(EstimateTable); probabilities are recomputed from the
// counts, so table_from_json(to_json(t)) == t exactly.
EstimateTable table_from_json(const nlohmann::json& j);

class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Writes `text` to `path` in binary mode (LF preserved). Throws OutputError
// naming the path on failure.
void write_file(const std::filesystem::path& path, const std::string& text);

}  // namespace pairkey

#endif  // PAIRKEY_IO_HPP_
