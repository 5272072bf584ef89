// Copyright 2026 The qifl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line surface. Subcommands: analyze, capacity, compare,
// verify ldp|lip, dalenius, fuzz.
//
// Exit codes: 0 success, 1 a checked predicate is false, 2 validation error,
// 3 parse error.

#ifndef QIFL_CLI_HPP_
#define QIFL_CLI_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qifl/measures.hpp"

namespace qifl::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPredicateFalse = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitParse = 3;

enum class Measure {
  kPriorVulnerability,
  kPosteriorVulnerability,
  kMaxPosteriorVulnerability,
  kAvgLeakage,
  kMaxCaseLeakage,
  kLift,
  kBayesCapacity,
  kLiftCapacity,
};

enum class Format { kText, kJson };

std::string_view to_string(Measure m);
std::optional<Measure> parse_measure(std::string_view name);
std::vector<std::string> measure_names();

struct AnalysisRequest {
  std::string channel_path;
  std::optional<std::string> prior;  // path or "uniform"
  std::optional<std::string> gain;   // path, "gid" or "reciprocal"
  Measure measure = Measure::kLift;
  Format format = Format::kText;
  LiftFormula formula = LiftFormula::kChannelOverMarginal;

  // Throws Error(kInvalidArgument) when the measure needs an absent input.
  void validate() const;
};

struct RunResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

RunResult run(const AnalysisRequest& request);

// `args` excludes the program name. `seed_env` is the value of QIF_SEED.
RunResult run_command_line(const std::vector<std::string>& args,
                           const std::optional<std::string>& seed_env = {});

}  // namespace qifl::cli

#endif  // QIFL_CLI_HPP_
