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

// Leakage about a secret Z that is correlated with the channel's input X.
// A correlation J over Z x X factors as rho (a prior on Z) and D: Z -> X; the
// adversary then effectively observes Z through D followed by C.

#ifndef QIFL_DALENIUS_HPP_
#define QIFL_DALENIUS_HPP_

#include "qifl/core.hpp"
#include "qifl/rational.hpp"

namespace qifl {

class Correlation {
 public:
  explicit Correlation(Joint j);

  const Labels& z_labels() const { return joint_.row_labels(); }
  const Labels& x_labels() const { return joint_.col_labels(); }
  const Joint& joint() const { return joint_; }
  const Factorization& factors() const { return factors_; }
  // rho and D restricted to the Z values with positive mass.
  const Prior& supported_rho() const { return supported_rho_; }
  const Channel& supported_d() const { return supported_d_; }
  // Marginal on X: pi(x) = sum_z rho(z) D(z,x).
  const Prior& pushforward() const { return pushforward_; }

 private:
  Joint joint_;
  Factorization factors_;
  Prior supported_rho_;
  Channel supported_d_;
  Prior pushforward_;
};

struct DaleniusLift {
  Rational lhs;           // Lift(rho, DC)
  Rational lift_rho_d;    // Lift(rho, D)
  Rational lift_pi_c;     // Lift(pi, C)
  Rational bound;         // min of the two
  bool holds = false;     // lhs <= bound
};

// Throws kLabelMismatch unless the correlation's X axis is C's secret axis.
DaleniusLift dalenius_lift(const Correlation& j, const Channel& c);

struct DaleniusCapacity {
  Rational leak;          // max-case g-leakage of Z through DC
  ExtRational cap_dc;     // lift capacity of DC
  ExtRational cap_c;      // lift capacity of C
  bool holds = false;     // leak <= cap_dc <= cap_c
};

// `g` is a gain over Z. Throws kLabelMismatch or kDegenerateGain.
DaleniusCapacity dalenius_capacity_bound(const Correlation& j,
                                         const Channel& c,
                                         const GainFunction& g);

}  // namespace qifl

#endif  // QIFL_DALENIUS_HPP_
