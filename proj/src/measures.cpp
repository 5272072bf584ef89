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

#include <algorithm>

namespace qifl {

namespace {

struct BestAction {
  Rational value;
  std::size_t action = 0;
};

// Maximises sum_x weights(x) g(w,x) over actions; ties keep the first action.
BestAction best_action(const GainFunction& g,
                       const std::vector<Rational>& weights) {
  BestAction best;
  for (std::size_t w = 0; w < g.actions().size(); ++w) {
    Rational expected;
    for (std::size_t x = 0; x < weights.size(); ++x) {
      if (weights[x].is_zero()) continue;
      expected += weights[x] * g.at(w, x);
    }
    if (w == 0 || expected > best.value) best = {std::move(expected), w};
  }
  return best;
}

void require_gain_matches(const GainFunction& g, const Prior& pi) {
  require_same_labels(g.secrets(), pi.support(), "gain secrets vs prior");
}

Rational nonzero_prior_vulnerability(const GainFunction& g, const Prior& pi) {
  Rational v = prior_vulnerability(g, pi);
  if (v.is_zero()) {
    throw Error(ErrorKind::kDegenerateGain,
                "prior vulnerability is zero, leakage ratio undefined");
  }
  return v;
}

void require_factor_at_least_one(const ExtRational& factor) {
  if (factor < ExtRational(1)) {
    throw Error(ErrorKind::kInvalidEpsilon,
                "e^eps factor " + factor.str() + " is below 1");
  }
}

std::vector<Rational> marginals(const Prior& pi, const Channel& c) {
  std::vector<Rational> p(c.num_observations());
  for (std::size_t x = 0; x < c.num_secrets(); ++x) {
    if (pi.mass(x).is_zero()) continue;
    for (std::size_t y = 0; y < c.num_observations(); ++y) {
      p[y] += pi.mass(x) * c.at(x, y);
    }
  }
  return p;
}

}  // namespace

Rational prior_vulnerability(const GainFunction& g, const Prior& pi) {
  require_gain_matches(g, pi);
  return best_action(g, pi.masses()).value;
}

Rational posterior_vulnerability(const GainFunction& g, const Prior& pi,
                                 const Channel& c) {
  require_gain_matches(g, pi);
  const Hyper h = hyper(pi, c);
  Rational total;
  for (std::size_t i = 0; i < h.size(); ++i) {
    total += h.marginals[i] * best_action(g, h.posteriors[i].masses()).value;
  }
  return total;
}

Rational mult_leakage(const GainFunction& g, const Prior& pi,
                      const Channel& c) {
  const Rational prior = nonzero_prior_vulnerability(g, pi);
  return posterior_vulnerability(g, pi, c) / prior;
}

Rational max_posterior_vulnerability(const GainFunction& g, const Prior& pi,
                                     const Channel& c) {
  require_gain_matches(g, pi);
  const Hyper h = hyper(pi, c);
  Rational best;
  for (const auto& posterior : h.posteriors) {
    best = std::max(best, best_action(g, posterior.masses()).value);
  }
  return best;
}

Rational max_case_leakage(const GainFunction& g, const Prior& pi,
                          const Channel& c) {
  const Rational prior = nonzero_prior_vulnerability(g, pi);
  return max_posterior_vulnerability(g, pi, c) / prior;
}

LeakageReport max_case_leakage_report(const GainFunction& g, const Prior& pi,
                                      const Channel& c) {
  const Rational prior = nonzero_prior_vulnerability(g, pi);
  const Hyper h = hyper(pi, c);
  std::optional<BestAction> best;
  std::size_t best_obs = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    BestAction here = best_action(g, h.posteriors[i].masses());
    if (!best || here.value > best->value) {
      best = std::move(here);
      best_obs = i;
    }
  }
  Witness w;
  w.observation = h.observations[best_obs];
  w.action = g.actions()[best->action];
  return {ExtRational(best->value / prior), std::move(w)};
}

Rational bayes_capacity(const Channel& c) {
  Rational total;
  for (std::size_t y = 0; y < c.num_observations(); ++y) {
    Rational column_max;
    for (std::size_t x = 0; x < c.num_secrets(); ++x) {
      column_max = std::max(column_max, c.at(x, y));
    }
    total += column_max;
  }
  return total;
}

LeakageReport lift(const Prior& pi, const Channel& c, LiftFormula formula) {
  require_same_labels(pi.support(), c.secrets(), "prior support vs secrets");
  std::optional<Rational> best;
  std::size_t best_x = 0;
  std::size_t best_y = 0;
  auto consider = [&](Rational ratio, std::size_t x, std::size_t y) {
    if (!best || ratio > *best) {
      best = std::move(ratio);
      best_x = x;
      best_y = y;
    }
  };

  switch (formula) {
    case LiftFormula::kChannelOverMarginal: {
      const auto p = marginals(pi, c);
      for (std::size_t y = 0; y < c.num_observations(); ++y) {
        for (std::size_t x = 0; x < c.num_secrets(); ++x) {
          if (pi.mass(x).is_zero() || c.at(x, y).is_zero()) continue;
          consider(c.at(x, y) / p[y], x, y);
        }
      }
      break;
    }
    case LiftFormula::kPosteriorOverPrior: {
      const Hyper h = hyper(pi, c);
      for (std::size_t i = 0; i < h.size(); ++i) {
        const Prior& post = h.posteriors[i];
        for (std::size_t x = 0; x < c.num_secrets(); ++x) {
          if (post.mass(x).is_zero()) continue;
          consider(post.mass(x) / pi.mass(x), x, h.source_columns[i]);
        }
      }
      break;
    }
    case LiftFormula::kJointOverProduct: {
      const Joint j = joint(pi, c);
      for (std::size_t y = 0; y < c.num_observations(); ++y) {
        const Rational p = j.entries().col_sum(y);
        for (std::size_t x = 0; x < c.num_secrets(); ++x) {
          if (j.at(x, y).is_zero()) continue;
          consider(j.at(x, y) / (pi.mass(x) * p), x, y);
        }
      }
      break;
    }
  }

  // A valid prior has a positive-mass secret, whose row has a positive entry.
  Witness w;
  w.secret = c.secrets()[best_x];
  w.observation = c.observations()[best_y];
  return {ExtRational(*best), std::move(w)};
}

LeakageReport lift_capacity_report(const Channel& c) {
  ExtRational best(1);
  Witness w;
  bool have_witness = false;
  for (std::size_t y = 0; y < c.num_observations(); ++y) {
    for (std::size_t x = 0; x < c.num_secrets(); ++x) {
      const Rational& top = c.at(x, y);
      if (top.is_zero()) continue;
      for (std::size_t other = 0; other < c.num_secrets(); ++other) {
        const Rational& bottom = c.at(other, y);
        ExtRational ratio = bottom.is_zero() ? ExtRational::infinity()
                                             : ExtRational(top / bottom);
        if (!have_witness || ratio > best) {
          best = std::move(ratio);
          w = Witness{c.observations()[y], c.secrets()[x], std::nullopt,
                      c.secrets()[other]};
          have_witness = true;
        }
      }
    }
  }
  return {std::move(best), std::move(w)};
}

ExtRational lift_capacity(const Channel& c) {
  return lift_capacity_report(c).value;
}

ExtRational lift_capacity_by_column_extremes(const Channel& c) {
  ExtRational best(1);
  for (std::size_t y = 0; y < c.num_observations(); ++y) {
    Rational lo = c.at(0, y);
    Rational hi = c.at(0, y);
    for (std::size_t x = 1; x < c.num_secrets(); ++x) {
      lo = std::min(lo, c.at(x, y));
      hi = std::max(hi, c.at(x, y));
    }
    if (hi.is_zero()) continue;
    if (lo.is_zero()) return ExtRational::infinity();
    best = std::max(best, ExtRational(hi / lo));
  }
  return best;
}

bool verify_ldp(const Channel& c, const ExtRational& factor) {
  require_factor_at_least_one(factor);
  if (factor.is_infinite()) return true;
  const Rational& k = factor.value();
  for (std::size_t y = 0; y < c.num_observations(); ++y) {
    for (std::size_t x = 0; x < c.num_secrets(); ++x) {
      for (std::size_t other = 0; other < c.num_secrets(); ++other) {
        if (c.at(x, y) > k * c.at(other, y)) return false;
      }
    }
  }
  return true;
}

bool verify_lip(const Prior& pi, const Channel& c, const Rational& factor) {
  if (!pi.full_support()) {
    throw Error(ErrorKind::kZeroPriorMass,
                "local information privacy needs a full-support prior");
  }
  require_factor_at_least_one(factor);
  const Rational lower = Rational(1) / factor;
  const Hyper h = hyper(pi, c);
  for (const auto& post : h.posteriors) {
    for (std::size_t x = 0; x < pi.size(); ++x) {
      const Rational ratio = post.mass(x) / pi.mass(x);
      if (ratio < lower || ratio > factor) return false;
    }
  }
  return true;
}

bool OrderingChainReport::all_hold() const {
  return std::all_of(links.begin(), links.end(),
                     [](const ChainLink& l) { return l.holds; });
}

std::optional<ChainLink> OrderingChainReport::first_violation() const {
  for (const auto& l : links) {
    if (!l.holds) return l;
  }
  return std::nullopt;
}

OrderingChainReport check_ordering_chain(const GainFunction& g,
                                         const Prior& pi, const Channel& c) {
  if (!pi.full_support()) {
    throw Error(ErrorKind::kZeroPriorMass,
                "ordering chain needs a full-support prior");
  }
  OrderingChainReport r;
  r.avg_leakage = mult_leakage(g, pi, c);
  r.max_case_leakage = max_case_leakage(g, pi, c);
  r.lift = lift(pi, c).value.value();
  r.bayes_capacity = bayes_capacity(c);
  r.lift_capacity = lift_capacity(c);
  const ExtRational by_extremes = lift_capacity_by_column_extremes(c);

  auto le = [](std::string relation, ExtRational lhs, ExtRational rhs) {
    const bool holds = lhs <= rhs;
    return ChainLink{std::move(relation), std::move(lhs), std::move(rhs),
                     holds};
  };
  r.links = {
      le("avg_leakage <= max_case_leakage", r.avg_leakage, r.max_case_leakage),
      le("max_case_leakage <= lift", r.max_case_leakage, r.lift),
      le("lift <= lift_capacity", r.lift, r.lift_capacity),
      le("avg_leakage <= bayes_capacity", r.avg_leakage, r.bayes_capacity),
      le("bayes_capacity <= lift", r.bayes_capacity, r.lift),
      ChainLink{"lift_capacity == column_max/column_min", r.lift_capacity,
                by_extremes, r.lift_capacity == by_extremes},
  };
  return r;
}

}  // namespace qifl
