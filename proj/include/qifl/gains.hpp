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

#ifndef QIFL_GAINS_HPP_
#define QIFL_GAINS_HPP_

#include "qifl/core.hpp"

namespace qifl {

// One-try guessing: actions are the secrets, gain 1 on a correct guess.
GainFunction gid(const Labels& secrets);

// Diagonal gain 1/pi(x). Its max-case leakage under pi equals lift(pi, C).
// Throws kZeroPriorMass if any secret has zero mass.
GainFunction reciprocal_gain(const Prior& pi);

// max over (w, x) of pi(x) g(w, x).
Rational max_prior_vulnerability(const GainFunction& g, const Prior& pi);

// Splits every action w into one action per secret, "w@x", that only pays
// off on x. Ordinary vulnerability under the result equals
// max_prior_vulnerability under g, for every prior.
GainFunction pointwise_gain(const GainFunction& g);

}  // namespace qifl

#endif  // QIFL_GAINS_HPP_
