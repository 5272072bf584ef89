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

#include "qifl/measures.hpp"

#include <gtest/gtest.h>

#include "qifl/gains.hpp"
#include "qifl/propcheck.hpp"
#include "support/fixtures.hpp"

namespace qifl {
namespace {

using testing::q;
using testing::Rows;
namespace oracle = testing::oracle;

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorKind::kInvalidArgument;
}

constexpr LiftFormula kFormulas[] = {LiftFormula::kChannelOverMarginal,
                                     LiftFormula::kPosteriorOverPrior,
                                     LiftFormula::kJointOverProduct};

TEST(LiftTest, EyeColourValueAndWitness) {
  for (LiftFormula f : kFormulas) {
    const LeakageReport r =
        lift(testing::eye_prior(), testing::eye_channel(), f);
    EXPECT_EQ(r.value, ExtRational(q(19, 11)));
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_EQ(r.witness->secret, "bg");
    EXPECT_EQ(r.witness->observation, "b");
  }
}

TEST(LiftTest, EyeColourReciprocalGainPosteriors) {
  const Prior pi = testing::eye_prior();
  const Hyper h = hyper(pi, testing::eye_channel());
  const GainFunction g = reciprocal_gain(pi);
  EXPECT_EQ(prior_vulnerability(g, h.posteriors[0]), q(19, 11));
  EXPECT_EQ(prior_vulnerability(g, h.posteriors[1]), q(5, 3));
}

TEST(LiftTest, IdentityChannelUniformPrior) {
  const Labels l = Labels::numbered("x", 4);
  EXPECT_EQ(lift(Prior::uniform(l), identity_channel(l)).value,
            ExtRational(4));
}

TEST(LiftTest, NonInteractingIsOne) {
  const Labels s{"a", "b", "c"};
  const Channel c = constant_channel(s, Labels{"u", "v"}, {q(1, 3), q(2, 3)});
  const Prior pi = Prior::make(s, {q(1, 2), q(1, 3), q(1, 6)});
  for (LiftFormula f : kFormulas) EXPECT_EQ(lift(pi, c, f).value, ExtRational(1));
}

TEST(LiftTest, IgnoresZeroMassSecrets) {
  const Labels s{"a", "b"};
  const Channel c = make_channel(s, Labels{"u", "v"},
                                 Rows{{q(1), q(0)}, {q(0), q(1)}});
  // Only a carries mass; lift over supported pairs is 1.
  for (LiftFormula f : kFormulas) {
    EXPECT_EQ(lift(Prior::point(s, 0), c, f).value, ExtRational(1));
  }
}

TEST(LiftTest, MatchesDefinitionOracle) {
  propcheck::InstanceSpec spec;
  for (std::uint64_t i = 0; i < 300; ++i) {
    const auto in = propcheck::gen_instance(spec, i);
    const Rational expected =
        oracle::lift(in.prior.masses(), oracle::rows_of(in.channel.entries()));
    for (LiftFormula f : kFormulas) {
      EXPECT_EQ(lift(in.prior, in.channel, f).value, ExtRational(expected));
    }
  }
}

TEST(LiftCapacityTest, SurveyChannels) {
  EXPECT_EQ(lift_capacity(testing::survey_g()), ExtRational(4));
  EXPECT_EQ(lift_capacity(testing::survey_r()), ExtRational(3));
}

TEST(LiftCapacityTest, EyeColour) {
  EXPECT_EQ(lift_capacity(testing::eye_channel()), ExtRational(15));
  const LeakageReport r = lift_capacity_report(testing::eye_channel());
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->observation, "g");
  EXPECT_EQ(r.witness->secret, "g");
  EXPECT_EQ(r.witness->other_secret, "bg");
}

TEST(LiftCapacityTest, IdentityIsInfinite) {
  const Channel c = identity_channel(Labels{"a", "b"});
  EXPECT_TRUE(lift_capacity(c).is_infinite());
  EXPECT_TRUE(lift_capacity_by_column_extremes(c).is_infinite());
}

TEST(LiftCapacityTest, NonInteractingIsOne) {
  const Channel c = constant_channel(Labels{"a", "b"}, Labels{"u", "v"},
                                     {q(1, 4), q(3, 4)});
  EXPECT_EQ(lift_capacity(c), ExtRational(1));
}

TEST(LiftCapacityTest, AllZeroColumnIsSkipped) {
  const Channel c = make_channel(Labels{"a", "b"}, Labels{"u", "v", "w"},
                                 Rows{{q(1, 2), q(1, 2), q(0)},
                                      {q(1, 4), q(3, 4), q(0)}});
  EXPECT_EQ(lift_capacity(c), ExtRational(2));
}

TEST(LiftCapacityTest, MatchesPairwiseOracle) {
  propcheck::InstanceSpec spec;
  for (std::uint64_t i = 0; i < 300; ++i) {
    const auto in = propcheck::gen_instance(spec, i);
    const auto expected =
        oracle::column_ratio_max(oracle::rows_of(in.channel.entries()));
    const ExtRational got = lift_capacity(in.channel);
    if (expected) {
      EXPECT_EQ(got, ExtRational(*expected));
    } else {
      EXPECT_TRUE(got.is_infinite());
    }
    EXPECT_EQ(got, lift_capacity_by_column_extremes(in.channel));
  }
}

// Blending the barycentric grid with uniform at weight 1/n keeps every prior
// at least 1/n^2 away from the simplex faces, which caps the reachable lift
// well below the capacity. The acceptance grid therefore shrinks the weight
// much faster than the grid spacing.
TEST(LiftCapacityTest, GridBlendedAtOneOverNStaysBelowCapacity) {
  const Channel c = testing::eye_channel();
  const long n = 16;
  Rational sup;
  oracle::for_each_grid_point(3, n, [&](const std::vector<long>& k) {
    const Prior pi = Prior::make(c.secrets(), oracle::blended_prior(k, n, q(1, n)));
    sup = std::max(sup, lift(pi, c).value.value());
  });
  EXPECT_LT(sup, q(11));
  EXPECT_GT(sup, q(10));

  Rational fine;
  oracle::for_each_grid_point(3, n, [&](const std::vector<long>& k) {
    const Prior pi =
        Prior::make(c.secrets(), oracle::blended_prior(k, n, q(1, 100000000)));
    fine = std::max(fine, lift(pi, c).value.value());
  });
  EXPECT_LE(fine, q(15));
  EXPECT_GE(fine * 100, q(15 * 99));
}

TEST(BayesCapacityTest, Values) {
  EXPECT_EQ(bayes_capacity(testing::eye_channel()), q(17, 10));
  EXPECT_EQ(bayes_capacity(testing::survey_g()), q(5, 3));
  EXPECT_EQ(bayes_capacity(testing::survey_r()), q(9, 5));
  EXPECT_EQ(bayes_capacity(identity_channel(Labels::numbered("x", 5))), q(5));
}

TEST(BayesCapacityTest, StrictlyBelowLiftOnEyeColour) {
  EXPECT_LT(ExtRational(bayes_capacity(testing::eye_channel())),
            lift(testing::eye_prior(), testing::eye_channel()).value);
}

TEST(VulnerabilityTest, SurveyPosteriors) {
  const Channel g = testing::survey_g();
  const Channel r = testing::survey_r();
  const Prior u = Prior::uniform(g.secrets());
  EXPECT_EQ(posterior_vulnerability(gid(g.secrets()), u, g), q(5, 9));
  EXPECT_EQ(posterior_vulnerability(gid(r.secrets()), u, r), q(3, 5));
  EXPECT_EQ(max_posterior_vulnerability(gid(g.secrets()), u, g), q(4, 7));
}

TEST(LeakageTest, SurveyUniformChain) {
  const Channel g = testing::survey_g();
  const Prior u = Prior::uniform(g.secrets());
  const OrderingChainReport rep = check_ordering_chain(gid(g.secrets()), u, g);
  EXPECT_EQ(rep.avg_leakage, q(5, 3));
  EXPECT_EQ(rep.max_case_leakage, q(12, 7));
  EXPECT_EQ(rep.lift, q(12, 7));
  EXPECT_EQ(rep.bayes_capacity, q(5, 3));
  EXPECT_EQ(rep.lift_capacity, ExtRational(4));
  EXPECT_TRUE(rep.all_hold());
}

TEST(LeakageTest, PointAdjacentPriorChain) {
  const Channel r = testing::survey_r();
  const Prior pi = Prior::make(r.secrets(), {q(98, 100), q(1, 100), q(1, 100)});
  const OrderingChainReport rep = check_ordering_chain(gid(r.secrets()), pi, r);
  EXPECT_EQ(rep.avg_leakage, q(1));
  EXPECT_EQ(rep.max_case_leakage, q(75, 74));
  EXPECT_EQ(rep.lift, q(50, 17));
  EXPECT_EQ(rep.bayes_capacity, q(9, 5));
  EXPECT_EQ(rep.lift_capacity, ExtRational(3));
  EXPECT_TRUE(rep.all_hold());
  EXPECT_FALSE(rep.first_violation().has_value());
}

TEST(LeakageTest, EyeColourGid) {
  const Prior pi = testing::eye_prior();
  const Channel c = testing::eye_channel();
  EXPECT_EQ(mult_leakage(gid(pi.support()), pi, c), q(49, 40));
  EXPECT_EQ(max_case_leakage(gid(pi.support()), pi, c), q(5, 3));
}

TEST(LeakageTest, MaxCaseWitnessNamesObservationAndAction) {
  const Channel g = testing::survey_g();
  const LeakageReport r = max_case_leakage_report(
      gid(g.secrets()), Prior::uniform(g.secrets()), g);
  EXPECT_EQ(r.value, ExtRational(q(12, 7)));
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->observation, "y");
  EXPECT_EQ(r.witness->action, "y");
}

TEST(LeakageTest, DegenerateGain) {
  const Labels s{"a", "b"};
  const GainFunction zero =
      GainFunction::make(Labels{"w"}, s, Rows{{q(0), q(0)}});
  const Channel c = identity_channel(s);
  EXPECT_EQ(kind_of([&] { mult_leakage(zero, Prior::uniform(s), c); }),
            ErrorKind::kDegenerateGain);
  EXPECT_EQ(kind_of([&] { max_case_leakage(zero, Prior::uniform(s), c); }),
            ErrorKind::kDegenerateGain);
}

TEST(LeakageTest, VulnerabilityMatchesOracle) {
  propcheck::InstanceSpec spec;
  for (std::uint64_t i = 0; i < 200; ++i) {
    const auto in = propcheck::gen_instance(spec, i);
    EXPECT_EQ(prior_vulnerability(in.gain, in.prior),
              oracle::vulnerability(oracle::rows_of(in.gain.gains()),
                                    in.prior.masses()));
  }
}

TEST(VerifyTest, LdpTightAtCapacity) {
  const Channel g = testing::survey_g();
  EXPECT_TRUE(verify_ldp(g, ExtRational(4)));
  EXPECT_FALSE(verify_ldp(g, ExtRational(q(39, 10))));
  EXPECT_TRUE(verify_ldp(g, ExtRational::infinity()));
  EXPECT_FALSE(verify_ldp(identity_channel(Labels{"a", "b"}), ExtRational(1000)));
}

TEST(VerifyTest, LdpRejectsFactorBelowOne) {
  EXPECT_EQ(kind_of([] { verify_ldp(testing::survey_g(), ExtRational(q(1, 2))); }),
            ErrorKind::kInvalidEpsilon);
}

TEST(VerifyTest, LipEyeColour) {
  const Prior pi = testing::eye_prior();
  const Channel c = testing::eye_channel();
  EXPECT_TRUE(verify_lip(pi, c, q(9)));
  EXPECT_FALSE(verify_lip(pi, c, q(8)));
}

TEST(VerifyTest, LipNeedsFullSupport) {
  const Labels s{"a", "b"};
  EXPECT_EQ(kind_of([&] {
              verify_lip(Prior::point(s, 0), identity_channel(s), q(2));
            }),
            ErrorKind::kZeroPriorMass);
  EXPECT_EQ(kind_of([&] {
              verify_lip(Prior::uniform(s), identity_channel(s), q(1, 2));
            }),
            ErrorKind::kInvalidEpsilon);
}

TEST(OrderingChainTest, HoldsOnGeneratedInstances) {
  propcheck::InstanceSpec spec;
  std::size_t checked = 0;
  for (std::uint64_t i = 0; i < 300; ++i) {
    const auto in = propcheck::gen_instance(spec, i);
    try {
      const auto rep = check_ordering_chain(in.gain, in.prior, in.channel);
      EXPECT_TRUE(rep.all_hold()) << "trial " << i;
      ++checked;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kDegenerateGain);
    }
  }
  EXPECT_GT(checked, 250u);
}

}  // namespace
}  // namespace qifl
