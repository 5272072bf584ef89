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

#include "qifl/gains.hpp"

#include <gtest/gtest.h>

#include "qifl/measures.hpp"
#include "qifl/propcheck.hpp"
#include "support/fixtures.hpp"

namespace qifl {
namespace {

using testing::q;
using testing::Rows;

TEST(GidTest, IsIdentityMatrix) {
  const GainFunction g = gid(Labels{"a", "b", "c"});
  EXPECT_EQ(g.actions(), g.secrets());
  for (std::size_t w = 0; w < 3; ++w) {
    for (std::size_t x = 0; x < 3; ++x) EXPECT_EQ(g.at(w, x), q(w == x ? 1 : 0));
  }
  EXPECT_EQ(prior_vulnerability(g, Prior::uniform(g.secrets())), q(1, 3));
}

TEST(ReciprocalGainTest, PriorVulnerabilityIsSupportSize) {
  const Prior pi = testing::eye_prior();
  EXPECT_EQ(prior_vulnerability(reciprocal_gain(pi), pi), q(1));
  EXPECT_EQ(reciprocal_gain(pi).at(1, 1), q(2));
}

TEST(ReciprocalGainTest, RejectsZeroMass) {
  try {
    reciprocal_gain(Prior::point(Labels{"a", "b"}, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kZeroPriorMass);
  }
}

TEST(ReciprocalGainTest, MaxCaseLeakageEqualsLift) {
  propcheck::InstanceSpec spec;
  for (std::uint64_t i = 0; i < 200; ++i) {
    const auto in = propcheck::gen_instance(spec, i);
    EXPECT_EQ(ExtRational(max_case_leakage(reciprocal_gain(in.prior), in.prior,
                                           in.channel)),
              lift(in.prior, in.channel).value);
  }
}

TEST(PointwiseGainTest, ActionLabels) {
  const GainFunction g = pointwise_gain(gid(Labels{"a", "b"}));
  EXPECT_EQ(g.actions().names(),
            (std::vector<std::string>{"a@a", "a@b", "b@a", "b@b"}));
  EXPECT_EQ(g.at(0, 0), q(1));
  EXPECT_EQ(g.at(1, 1), q(0));
}

TEST(PointwiseGainTest, SurveyGMaxPosterior) {
  const Channel g = testing::survey_g();
  const Prior u = Prior::uniform(g.secrets());
  EXPECT_EQ(posterior_vulnerability(pointwise_gain(gid(g.secrets())), u, g),
            q(5, 9));
}

TEST(PointwiseGainTest, VulnerabilityEqualsMaxPriorVulnerability) {
  propcheck::InstanceSpec spec;
  for (std::uint64_t i = 0; i < 300; ++i) {
    const auto in = propcheck::gen_instance(spec, i);
    const GainFunction star = pointwise_gain(in.gain);
    EXPECT_EQ(prior_vulnerability(star, in.prior),
              max_prior_vulnerability(in.gain, in.prior));
  }
}

TEST(MaxPriorVulnerabilityTest, HandValue) {
  const Labels s{"a", "b"};
  const GainFunction g =
      GainFunction::make(Labels{"u", "v"}, s, Rows{{q(1), q(1)}, {q(3), q(0)}});
  const Prior pi = Prior::make(s, {q(1, 4), q(3, 4)});
  EXPECT_EQ(max_prior_vulnerability(g, pi), q(3, 4));
  EXPECT_EQ(prior_vulnerability(g, pi), q(1));
}

}  // namespace
}  // namespace qifl
