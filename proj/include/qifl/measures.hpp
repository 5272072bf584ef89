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

// Leakage and capacity measures over exact channels.
//
// Vulnerabilities and leakages follow the g-leakage framework: an adversary is
// a prior plus a non-negative gain table, and leakage is the multiplicative
// growth of their best expected gain. Lift and lift capacity are the max-case
// counterparts; capacities are reported as e^eps factors, never logarithms.
//
// Witnesses break ties by axis position, observation first, then secret, then
// action.

#ifndef QIFL_MEASURES_HPP_
#define QIFL_MEASURES_HPP_

#include <array>
#include <optional>
#include <string>

#include "qifl/core.hpp"
#include "qifl/rational.hpp"

namespace qifl {

struct Witness {
  std::optional<std::string> observation;
  std::optional<std::string> secret;
  std::optional<std::string> action;
  // Lift capacity only: the row in the denominator of the binding ratio.
  std::optional<std::string> other_secret;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct LeakageReport {
  ExtRational value;
  std::optional<Witness> witness;

  std::string decimal(int places = 4) const { return value.decimal(places); }
};

// max_w sum_x pi(x) g(w,x).
Rational prior_vulnerability(const GainFunction& g, const Prior& pi);

// sum_y p(y) V_g(posterior_y).
Rational posterior_vulnerability(const GainFunction& g, const Prior& pi,
                                 const Channel& c);

// Throws kDegenerateGain when the prior vulnerability is zero.
Rational mult_leakage(const GainFunction& g, const Prior& pi,
                      const Channel& c);

// max over retained y of V_g(posterior_y).
Rational max_posterior_vulnerability(const GainFunction& g, const Prior& pi,
                                     const Channel& c);

// Throws kDegenerateGain when the prior vulnerability is zero.
Rational max_case_leakage(const GainFunction& g, const Prior& pi,
                          const Channel& c);
// As above; the witness names the binding observation and action.
LeakageReport max_case_leakage_report(const GainFunction& g, const Prior& pi,
                                      const Channel& c);

// Sum of column maxima.
Rational bayes_capacity(const Channel& c);

// The three equivalent ways of evaluating lift; all maximise over the pairs
// with positive joint mass.
enum class LiftFormula {
  kChannelOverMarginal,  // C(x,y) / p(y)
  kPosteriorOverPrior,   // posterior_y(x) / pi(x)
  kJointOverProduct,     // J(x,y) / (pi(x) p(y))
};

LeakageReport lift(const Prior& pi, const Channel& c,
                   LiftFormula formula = LiftFormula::kChannelOverMarginal);

// Largest within-column ratio C(x,y)/C(x',y), skipping 0/0; +inf when a column
// mixes zero and nonzero entries. Equals e^eps of the tightest LDP bound.
ExtRational lift_capacity(const Channel& c);
LeakageReport lift_capacity_report(const Channel& c);

// True iff C(x,y) <= factor * C(x',y) everywhere. Throws kInvalidEpsilon when
// factor < 1.
bool verify_ldp(const Channel& c, const ExtRational& factor);

// True iff 1/factor <= posterior_y(x)/pi(x) <= factor for every x and retained
// y. Throws kZeroPriorMass unless pi has full support, kInvalidEpsilon when
// factor < 1.
bool verify_lip(const Prior& pi, const Channel& c, const Rational& factor);

struct ChainLink {
  std::string relation;  // e.g. "avg_leakage <= max_case_leakage"
  ExtRational lhs;
  ExtRational rhs;
  bool holds = false;
};

struct OrderingChainReport {
  Rational avg_leakage;
  Rational max_case_leakage;
  Rational lift;
  Rational bayes_capacity;
  ExtRational lift_capacity;
  std::array<ChainLink, 6> links;

  bool all_hold() const;
  // First violated relation, if any.
  std::optional<ChainLink> first_violation() const;
};

// Evaluates every leakage/capacity relation for one (g, pi, C):
//   avg <= max-case <= lift <= lift capacity,
//   avg <= Bayes capacity <= lift,
//   lift capacity == max_y (max_x C) / (min_x C).
// Requires a full-support prior and V_g(pi) > 0.
OrderingChainReport check_ordering_chain(const GainFunction& g,
                                         const Prior& pi, const Channel& c);

// max_y max_x C(x,y) / min_x C(x,y): the column max/min route to lift
// capacity, independent of the pairwise scan in lift_capacity().
ExtRational lift_capacity_by_column_extremes(const Channel& c);

}  // namespace qifl

#endif  // QIFL_MEASURES_HPP_
