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

// Randomised, exact-arithmetic checking of the leakage relations.
//
// Instances are a pure function of (seed, trial index). Every registered
// property is run on `trials` instances; the first failing instance is shrunk
// (dimensions first, then denominators) while the same relation keeps
// failing.

#ifndef QIFL_PROPCHECK_HPP_
#define QIFL_PROPCHECK_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qifl/core.hpp"
#include "qifl/measures.hpp"

namespace qifl::propcheck {

inline constexpr std::uint64_t kDefaultSeed = 0x51f15eedULL;

struct InstanceSpec {
  std::size_t max_secrets = 5;
  std::size_t max_observations = 5;
  std::size_t max_actions = 5;
  long denominator_bound = 24;
  std::size_t trials = 1000;
  std::uint64_t seed = kDefaultSeed;

  // Throws Error(kInvalidArgument) if any bound or `trials` is zero.
  void validate() const;
};

struct Instance {
  Prior prior;          // full support
  Channel channel;      // secrets -> observations
  GainFunction gain;    // non-negative, at least one positive entry
  Channel post;         // observations -> outputs; post-processing / Dalenius
};

Instance gen_instance(const InstanceSpec& spec, std::uint64_t trial_index);

// The implementations a run checks. Tests swap in deliberately broken
// variants to confirm the registry notices.
struct Subject {
  std::function<LeakageReport(const Prior&, const Channel&)> lift;

  static Subject reference();
};

struct Violation {
  std::string relation;
  std::string lhs;
  std::string rhs;
};

// kDiscard marks instances outside the property's domain.
struct Outcome {
  enum class Verdict { kPass, kFail, kDiscard };
  Verdict verdict = Verdict::kPass;
  std::optional<Violation> violation;

  static Outcome pass() { return {}; }
  static Outcome discard() { return {Verdict::kDiscard, std::nullopt}; }
  static Outcome fail(Violation v) { return {Verdict::kFail, std::move(v)}; }
};

struct Property {
  std::string name;
  std::function<Outcome(const Instance&, const Subject&)> check;
};

const std::vector<Property>& registry();
const Property* find_property(std::string_view name);

// Runs one property on one instance; library precondition errors become
// discards and any other exception becomes a failure.
Outcome evaluate(const Property& p, const Instance& instance,
                 const Subject& subject);

struct Failure {
  std::uint64_t trial_index = 0;
  Instance shrunk;
  Violation violation;  // as re-evaluated on `shrunk`
  std::size_t shrink_steps = 0;
};

struct CheckResult {
  std::string property;
  std::size_t trials_run = 0;
  std::size_t discarded = 0;
  bool passed = true;
  std::optional<Failure> failure;
};

// Greedy shrink: accepts a smaller candidate only if `p` still fails on it
// with the same relation.
Instance shrink(const Instance& failing, const Property& p,
                const Subject& subject, std::size_t* steps = nullptr);

CheckResult run_property(const Property& p, const InstanceSpec& spec,
                         const Subject& subject = Subject::reference());

std::vector<CheckResult> run_registry(
    const InstanceSpec& spec, const Subject& subject = Subject::reference());

}  // namespace qifl::propcheck

#endif  // QIFL_PROPCHECK_HPP_
