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

#include "qifl/propcheck.hpp"

#include <algorithm>
#include <random>
#include <utility>

#include "qifl/dalenius.hpp"
#include "qifl/gains.hpp"

namespace qifl::propcheck {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

class Draw {
 public:
  Draw(std::uint64_t seed, std::uint64_t index)
      : engine_(splitmix64(seed ^ splitmix64(index))) {}

  // Uniform on [0, n).
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  std::size_t dim(std::size_t max) { return 1 + below(max); }

 private:
  std::mt19937_64 engine_;
};

std::vector<Rational> normalise(const std::vector<long>& weights) {
  long total = 0;
  for (long w : weights) total += w;
  std::vector<Rational> row;
  row.reserve(weights.size());
  for (long w : weights) row.emplace_back(w, total);
  return row;
}

// Numerators over a random denominator D <= bound, each in [lo, D].
std::vector<long> draw_weights(Draw& draw, std::size_t width, long bound,
                               long lo) {
  const long denominator = 1 + static_cast<long>(draw.below(bound));
  std::vector<long> w(width);
  for (auto& v : w) {
    v = lo + static_cast<long>(draw.below(denominator - lo + 1));
  }
  if (std::all_of(w.begin(), w.end(), [](long v) { return v == 0; })) {
    w[draw.below(width)] = 1;
  }
  return w;
}

Channel draw_channel(Draw& draw, const Labels& rows, const Labels& cols,
                     long bound) {
  enum { kGeneric, kNonInteracting, kForcedZero } kind = kGeneric;
  const auto roll = draw.below(100);
  if (roll < 15) {
    kind = kNonInteracting;
  } else if (roll < 35) {
    kind = kForcedZero;
  }
  std::vector<std::vector<Rational>> m;
  if (kind == kNonInteracting) {
    auto row = normalise(draw_weights(draw, cols.size(), bound, 0));
    m.assign(rows.size(), row);
  } else {
    std::vector<std::vector<long>> weights;
    for (std::size_t x = 0; x < rows.size(); ++x) {
      weights.push_back(draw_weights(draw, cols.size(), bound, 0));
    }
    if (kind == kForcedZero && cols.size() > 1) {
      auto& row = weights[draw.below(rows.size())];
      const auto j = draw.below(cols.size());
      row[j] = 0;
      if (std::all_of(row.begin(), row.end(), [](long v) { return v == 0; })) {
        row[(j + 1) % cols.size()] = 1;
      }
    }
    for (const auto& w : weights) m.push_back(normalise(w));
  }
  return make_channel(rows, cols, m);
}

std::string show(const ExtRational& v) { return v.str(); }

Outcome expect_le(const std::string& relation, const ExtRational& lhs,
                  const ExtRational& rhs) {
  if (lhs <= rhs) return Outcome::pass();
  return Outcome::fail({relation, show(lhs), show(rhs)});
}

Outcome expect_eq(const std::string& relation, const ExtRational& lhs,
                  const ExtRational& rhs) {
  if (lhs == rhs) return Outcome::pass();
  return Outcome::fail({relation, show(lhs), show(rhs)});
}

bool failed(const Outcome& o) { return o.verdict == Outcome::Verdict::kFail; }

// Same prior with the last secret's mass moved onto the others.
std::optional<Prior> drop_last_secret_mass(const Prior& pi) {
  if (pi.size() < 2) return std::nullopt;
  const Rational keep = Rational(1) - pi.mass(pi.size() - 1);
  std::vector<Rational> masses;
  for (std::size_t i = 0; i + 1 < pi.size(); ++i) {
    masses.push_back(pi.mass(i) / keep);
  }
  masses.emplace_back(0);
  return Prior::make(pi.support(), std::move(masses));
}

// ---------------------------------------------------------------------------
// Properties.

Outcome ordering_chain(const Instance& in, const Subject& s) {
  const auto& [pi, c, g, post] = in;
  const ExtRational avg = mult_leakage(g, pi, c);
  const ExtRational max_case = max_case_leakage(g, pi, c);
  const ExtRational lift_value = s.lift(pi, c).value;
  const ExtRational bayes = bayes_capacity(c);
  const ExtRational cap = lift_capacity(c);
  for (auto o : {
           expect_le("avg_leakage <= max_case_leakage", avg, max_case),
           expect_le("max_case_leakage <= lift", max_case, lift_value),
           expect_le("lift <= lift_capacity", lift_value, cap),
           expect_le("avg_leakage <= bayes_capacity", avg, bayes),
           expect_le("bayes_capacity <= lift", bayes, lift_value),
           expect_eq("lift_capacity == column_max/column_min", cap,
                     lift_capacity_by_column_extremes(c)),
       }) {
    if (failed(o)) return o;
  }
  return Outcome::pass();
}

Outcome lift_formula_equivalence(const Instance& in, const Subject& s) {
  auto check = [&](const Prior& pi) {
    const ExtRational base = s.lift(pi, in.channel).value;
    auto o = expect_eq(
        "lift C/p == lift posterior/prior", base,
        lift(pi, in.channel, LiftFormula::kPosteriorOverPrior).value);
    if (failed(o)) return o;
    return expect_eq("lift C/p == lift J/(pi p)", base,
                     lift(pi, in.channel, LiftFormula::kJointOverProduct).value);
  };
  if (auto o = check(in.prior); failed(o)) return o;
  if (auto partial = drop_last_secret_mass(in.prior)) return check(*partial);
  return Outcome::pass();
}

Outcome lift_realization(const Instance& in, const Subject& s) {
  return expect_eq(
      "max_case_leakage(reciprocal_gain) == lift",
      max_case_leakage(reciprocal_gain(in.prior), in.prior, in.channel),
      s.lift(in.prior, in.channel).value);
}

Outcome pointwise_gain_equivalence(const Instance& in, const Subject&) {
  const GainFunction star = pointwise_gain(in.gain);
  const Rational vmax_prior = max_prior_vulnerability(in.gain, in.prior);
  auto o = expect_eq("V_{g*}(pi) == V^max_g(pi)",
                     prior_vulnerability(star, in.prior), vmax_prior);
  if (failed(o) || vmax_prior.is_zero()) return o;
  Rational vmax_posterior;
  for (const auto& post : hyper(in.prior, in.channel).posteriors) {
    vmax_posterior =
        std::max(vmax_posterior, max_prior_vulnerability(in.gain, post));
  }
  return expect_eq("max-case leakage with V^max_g == with V_{g*}",
                   vmax_posterior / vmax_prior,
                   max_case_leakage(star, in.prior, in.channel));
}

Outcome bayes_capacity_at_uniform(const Instance& in, const Subject&) {
  const Channel& c = in.channel;
  const Rational bayes = bayes_capacity(c);
  auto o = expect_eq("mult_leakage(gid, uniform) == bayes_capacity",
                     mult_leakage(gid(c.secrets()),
                                  Prior::uniform(c.secrets()), c),
                     bayes);
  if (failed(o)) return o;
  return expect_le("mult_leakage(g, pi) <= bayes_capacity",
                   mult_leakage(in.gain, in.prior, c), bayes);
}

Outcome ldp_implies_lip(const Instance& in, const Subject&) {
  const ExtRational cap = lift_capacity(in.channel);
  if (cap.is_infinite()) return Outcome::discard();
  if (!verify_ldp(in.channel, cap)) {
    return Outcome::fail({"verify_ldp(C, lift_capacity(C))", "false", "true"});
  }
  if (!verify_lip(in.prior, in.channel, cap.value())) {
    return Outcome::fail({"ldp(k) implies lip(pi, k)", "false", "true"});
  }
  return Outcome::pass();
}

Outcome dalenius_lift_bound(const Instance& in, const Subject&) {
  const Correlation corr(joint(in.prior, in.channel));
  const DaleniusLift r = dalenius_lift(corr, in.post);
  auto o = expect_le("Lift(rho,DC) <= Lift(rho,D)", r.lhs, r.lift_rho_d);
  if (failed(o)) return o;
  o = expect_le("Lift(rho,DC) <= Lift(pi,C)", r.lhs, r.lift_pi_c);
  if (failed(o)) return o;
  if (!r.holds) return Outcome::fail({"dalenius holds flag", "false", "true"});
  return Outcome::pass();
}

Outcome dalenius_capacity(const Instance& in, const Subject&) {
  const Correlation corr(joint(in.prior, in.channel));
  const DaleniusCapacity r = dalenius_capacity_bound(corr, in.post, in.gain);
  auto o = expect_le("MaxLeak_g(rho,DC) <= MaxLift(DC)", r.leak, r.cap_dc);
  if (failed(o)) return o;
  o = expect_le("MaxLift(DC) <= MaxLift(C)", r.cap_dc, r.cap_c);
  if (failed(o)) return o;
  if (!r.holds) return Outcome::fail({"capacity holds flag", "false", "true"});
  return Outcome::pass();
}

Outcome max_case_dpi(const Instance& in, const Subject&) {
  return expect_le(
      "MaxLeak_g(pi, C;P) <= MaxLeak_g(pi, C)",
      max_case_leakage(in.gain, in.prior, compose(in.channel, in.post)),
      max_case_leakage(in.gain, in.prior, in.channel));
}

Outcome hyper_reconstruction(const Instance& in, const Subject&) {
  const Hyper h = hyper(in.prior, in.channel);
  const Joint j = joint(in.prior, in.channel);
  for (std::size_t x = 0; x < in.prior.size(); ++x) {
    Rational total;
    for (std::size_t i = 0; i < h.size(); ++i) {
      const Rational cell = h.marginals[i] * h.posteriors[i].mass(x);
      if (cell != j.at(x, h.source_columns[i])) {
        return Outcome::fail({"p(y) posterior_y(x) == J(x,y)", cell.str(),
                              j.at(x, h.source_columns[i]).str()});
      }
      total += cell;
    }
    if (total != in.prior.mass(x)) {
      return Outcome::fail(
          {"sum_y p(y) posterior_y == prior", total.str(),
           in.prior.mass(x).str()});
    }
  }
  return Outcome::pass();
}

Outcome factorize_round_trip(const Instance& in, const Subject&) {
  const Factorization f = factorize(joint(in.prior, in.channel));
  if (!(f.rho == in.prior)) {
    return Outcome::fail({"factorize(joint).rho == prior", "differs", ""});
  }
  if (!(f.d == in.channel)) {
    return Outcome::fail({"factorize(joint).channel == channel", "differs", ""});
  }
  return Outcome::pass();
}

Outcome capacity_closed_form(const Instance& in, const Subject& s) {
  const Channel& c = in.channel;
  const ExtRational cap = lift_capacity(c);
  auto o = expect_eq("lift_capacity == column_max/column_min", cap,
                     lift_capacity_by_column_extremes(c));
  if (failed(o)) return o;
  if (!verify_ldp(c, cap)) {
    return Outcome::fail({"verify_ldp(C, lift_capacity(C))", "false", "true"});
  }
  if (cap.is_finite() && cap.value() > Rational(1)) {
    const Rational below = (cap.value() + Rational(1)) / Rational(2);
    if (verify_ldp(c, below)) {
      return Outcome::fail({"verify_ldp(C, factor < lift_capacity) is false",
                            "true", "false"});
    }
  }
  // Priors concentrating on one secret, as in the capacity supremum.
  const std::size_t n = c.num_secrets();
  if (n < 2) return Outcome::pass();
  const Rational spread(1, 16 * static_cast<long>(n - 1));
  for (std::size_t hot = 0; hot < n; ++hot) {
    std::vector<Rational> masses(n, spread);
    masses[hot] = Rational(15, 16);
    const Prior pi = Prior::make(c.secrets(), std::move(masses));
    o = expect_le("lift(near-point prior) <= lift_capacity", s.lift(pi, c).value,
                  cap);
    if (failed(o)) return o;
  }
  return Outcome::pass();
}

Outcome non_interacting_fixpoint(const Instance& in, const Subject& s) {
  const Channel& c = in.channel;
  if (!c.non_interacting()) return Outcome::discard();
  const ExtRational one(1);
  for (auto o : {
           expect_eq("mult_leakage == 1", mult_leakage(in.gain, in.prior, c),
                     one),
           expect_eq("max_case_leakage == 1",
                     max_case_leakage(in.gain, in.prior, c), one),
           expect_eq("lift == 1", s.lift(in.prior, c).value, one),
           expect_eq("bayes_capacity == 1", bayes_capacity(c), one),
           expect_eq("lift_capacity == 1", lift_capacity(c), one),
       }) {
    if (failed(o)) return o;
  }
  return Outcome::pass();
}

Outcome post_processing_capacity(const Instance& in, const Subject&) {
  return expect_le("MaxLift(C;P) <= MaxLift(C)",
                   lift_capacity(compose(in.channel, in.post)),
                   lift_capacity(in.channel));
}

// ---------------------------------------------------------------------------
// Shrinking.

struct Complexity {
  std::size_t cells = 0;
  double denominators = 0;

  friend bool operator<(const Complexity& a, const Complexity& b) {
    return std::pair(a.cells, a.denominators) <
           std::pair(b.cells, b.denominators);
  }
};

void tally(Complexity& k, const Matrix& m) {
  k.cells += m.rows() * m.cols();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const auto& v : m.row(r)) k.denominators += v.mpq().get_den().get_d();
  }
}

Complexity complexity(const Instance& in) {
  Complexity k;
  k.cells += in.prior.size();
  for (const auto& m : in.prior.masses()) {
    k.denominators += m.mpq().get_den().get_d();
  }
  tally(k, in.channel.entries());
  tally(k, in.gain.gains());
  tally(k, in.post.entries());
  return k;
}

Matrix drop_row(const Matrix& m, std::size_t drop) {
  Matrix out(m.rows() - 1, m.cols());
  for (std::size_t r = 0, o = 0; r < m.rows(); ++r) {
    if (r == drop) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) out.at(o, c) = m.at(r, c);
    ++o;
  }
  return out;
}

Matrix drop_col(const Matrix& m, std::size_t drop) {
  Matrix out(m.rows(), m.cols() - 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0, o = 0; c < m.cols(); ++c) {
      if (c == drop) continue;
      out.at(r, o++) = m.at(r, c);
    }
  }
  return out;
}

// Folds column `from` into its neighbour, keeping rows stochastic.
Matrix merge_col(const Matrix& m, std::size_t from) {
  const std::size_t into = from == 0 ? 1 : from - 1;
  Matrix merged = m;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    merged.at(r, into) += m.at(r, from);
  }
  return drop_col(merged, from);
}

// Rounds a distribution to multiples of 1/d, fixing the largest cell so the
// total stays one.
std::optional<std::vector<Rational>> round_row(std::span<const Rational> row,
                                               long d, bool keep_positive) {
  std::vector<Rational> out;
  Rational total;
  std::size_t largest = 0;
  for (std::size_t i = 0; i < row.size(); ++i) {
    mpq_class scaled = row[i].mpq() * d + mpq_class(1, 2);
    mpz_class k = scaled.get_num() / scaled.get_den();
    out.push_back(Rational::from_mpq(mpq_class(k, d)));
    total += out.back();
    if (row[i] > row[largest]) largest = i;
  }
  out[largest] += Rational(1) - total;
  for (const auto& v : out) {
    if (v.is_negative() || (keep_positive && v.is_zero())) return std::nullopt;
  }
  if (std::equal(out.begin(), out.end(), row.begin(), row.end())) {
    return std::nullopt;
  }
  return out;
}

constexpr long kShrinkDenominators[] = {1, 2, 3, 4, 5, 6, 8, 10, 12};

std::vector<Instance> shrink_candidates(const Instance& in) {
  std::vector<Instance> out;
  const Prior& pi = in.prior;
  const Channel& c = in.channel;
  const GainFunction& g = in.gain;
  const Channel& post = in.post;

  auto attempt = [&](auto&& build) {
    try {
      out.push_back(build());
    } catch (const Error&) {
      // Candidate would break an instance invariant.
    }
  };

  for (std::size_t x = 0; c.num_secrets() > 1 && x < c.num_secrets(); ++x) {
    attempt([&] {
      const Rational keep = Rational(1) - pi.mass(x);
      std::vector<Rational> masses;
      for (std::size_t i = 0; i < pi.size(); ++i) {
        if (i != x) masses.push_back(pi.mass(i) / keep);
      }
      const Labels secrets = c.secrets().without(x);
      return Instance{
          Prior::make(secrets, std::move(masses)),
          make_channel(secrets, c.observations(), drop_row(c.entries(), x)),
          GainFunction::make(g.actions(), secrets, drop_col(g.gains(), x)),
          post};
    });
  }
  for (std::size_t y = 0; c.num_observations() > 1 && y < c.num_observations();
       ++y) {
    attempt([&] {
      const Labels obs = c.observations().without(y);
      return Instance{
          pi, make_channel(c.secrets(), obs, merge_col(c.entries(), y)), g,
          make_channel(obs, post.observations(), drop_row(post.entries(), y))};
    });
  }
  for (std::size_t w = 0; g.actions().size() > 1 && w < g.actions().size();
       ++w) {
    attempt([&] {
      return Instance{pi, c,
                      GainFunction::make(g.actions().without(w), g.secrets(),
                                         drop_row(g.gains(), w)),
                      post};
    });
  }
  for (std::size_t z = 0;
       post.num_observations() > 1 && z < post.num_observations(); ++z) {
    attempt([&] {
      return Instance{pi, c, g,
                      make_channel(post.secrets(),
                                   post.observations().without(z),
                                   merge_col(post.entries(), z))};
    });
  }

  for (long d : kShrinkDenominators) {
    if (auto masses = round_row(pi.masses(), d, true)) {
      attempt([&] {
        return Instance{Prior::make(pi.support(), *masses), c, g, post};
      });
    }
    for (std::size_t x = 0; x < c.num_secrets(); ++x) {
      if (auto row = round_row(c.entries().row(x), d, false)) {
        attempt([&] {
          Matrix m = c.entries();
          for (std::size_t y = 0; y < m.cols(); ++y) m.at(x, y) = (*row)[y];
          return Instance{pi, make_channel(c.secrets(), c.observations(), m),
                          g, post};
        });
      }
    }
    for (std::size_t x = 0; x < post.num_secrets(); ++x) {
      if (auto row = round_row(post.entries().row(x), d, false)) {
        attempt([&] {
          Matrix m = post.entries();
          for (std::size_t y = 0; y < m.cols(); ++y) m.at(x, y) = (*row)[y];
          return Instance{
              pi, c, g,
              make_channel(post.secrets(), post.observations(), m)};
        });
      }
    }
  }
  for (std::size_t w = 0; w < g.actions().size(); ++w) {
    for (std::size_t x = 0; x < g.secrets().size(); ++x) {
      const Rational& v = g.at(w, x);
      for (const Rational& simpler : {Rational(0), Rational(1)}) {
        if (v == simpler) continue;
        attempt([&] {
          Matrix m = g.gains();
          m.at(w, x) = simpler;
          return Instance{pi, c,
                          GainFunction::make(g.actions(), g.secrets(), m),
                          post};
        });
      }
    }
  }
  return out;
}

}  // namespace

void InstanceSpec::validate() const {
  if (max_secrets == 0 || max_observations == 0 || max_actions == 0 ||
      denominator_bound < 1 || trials == 0) {
    throw Error(ErrorKind::kInvalidArgument,
                "instance bounds and trials must be at least 1");
  }
}

Instance gen_instance(const InstanceSpec& spec, std::uint64_t trial_index) {
  spec.validate();
  Draw draw(spec.seed, trial_index);
  const long bound = spec.denominator_bound;
  const Labels secrets = Labels::numbered("x", draw.dim(spec.max_secrets));
  const Labels observations =
      Labels::numbered("y", draw.dim(spec.max_observations));
  const Labels actions = Labels::numbered("w", draw.dim(spec.max_actions));
  const Labels outputs = Labels::numbered("z", draw.dim(spec.max_observations));

  Prior prior = Prior::make(
      secrets, normalise(draw_weights(draw, secrets.size(), bound, 1)));
  Channel channel = draw_channel(draw, secrets, observations, bound);

  const long gain_den = 1 + static_cast<long>(draw.below(bound));
  Matrix gains(actions.size(), secrets.size());
  bool any_positive = false;
  for (std::size_t w = 0; w < actions.size(); ++w) {
    for (std::size_t x = 0; x < secrets.size(); ++x) {
      const long k = static_cast<long>(draw.below(gain_den + 1));
      gains.at(w, x) = Rational(k, gain_den);
      any_positive = any_positive || k > 0;
    }
  }
  if (!any_positive) gains.at(0, draw.below(secrets.size())) = 1;

  std::vector<std::vector<Rational>> post_rows;
  for (std::size_t y = 0; y < observations.size(); ++y) {
    post_rows.push_back(
        normalise(draw_weights(draw, outputs.size(), bound, 0)));
  }
  return Instance{std::move(prior), std::move(channel),
                  GainFunction::make(actions, secrets, std::move(gains)),
                  make_channel(observations, outputs, post_rows)};
}

Subject Subject::reference() {
  return Subject{
      [](const Prior& pi, const Channel& c) { return qifl::lift(pi, c); }};
}

const std::vector<Property>& registry() {
  static const std::vector<Property> properties = {
      {"ordering_chain", ordering_chain},
      {"lift_formula_equivalence", lift_formula_equivalence},
      {"lift_realization", lift_realization},
      {"pointwise_gain_equivalence", pointwise_gain_equivalence},
      {"bayes_capacity_at_uniform", bayes_capacity_at_uniform},
      {"ldp_implies_lip", ldp_implies_lip},
      {"dalenius_lift", dalenius_lift_bound},
      {"dalenius_capacity", dalenius_capacity},
      {"max_case_dpi", max_case_dpi},
      {"hyper_reconstruction", hyper_reconstruction},
      {"factorize_round_trip", factorize_round_trip},
      {"capacity_closed_form", capacity_closed_form},
      {"non_interacting_fixpoint", non_interacting_fixpoint},
      {"post_processing_capacity", post_processing_capacity},
  };
  return properties;
}

const Property* find_property(std::string_view name) {
  for (const auto& p : registry()) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

Outcome evaluate(const Property& p, const Instance& instance,
                 const Subject& subject) {
  try {
    return p.check(instance, subject);
  } catch (const Error& e) {
    switch (e.kind()) {
      case ErrorKind::kDegenerateGain:
      case ErrorKind::kZeroPriorMass:
      case ErrorKind::kInvalidEpsilon:
        return Outcome::discard();
      default:
        return Outcome::fail({"exception", e.what(), ""});
    }
  } catch (const std::exception& e) {
    return Outcome::fail({"exception", e.what(), ""});
  }
}

Instance shrink(const Instance& failing, const Property& p,
                const Subject& subject, std::size_t* steps) {
  const Outcome original = evaluate(p, failing, subject);
  if (!failed(original)) return failing;
  const std::string relation = original.violation->relation;

  Instance current = failing;
  Complexity size = complexity(current);
  std::size_t taken = 0;
  constexpr std::size_t kMaxSteps = 1000;
  bool improved = true;
  while (improved && taken < kMaxSteps) {
    improved = false;
    for (auto& candidate : shrink_candidates(current)) {
      const Complexity k = complexity(candidate);
      if (!(k < size)) continue;
      const Outcome o = evaluate(p, candidate, subject);
      if (failed(o) && o.violation->relation == relation) {
        current = std::move(candidate);
        size = k;
        ++taken;
        improved = true;
        break;
      }
    }
  }
  if (steps) *steps = taken;
  return current;
}

CheckResult run_property(const Property& p, const InstanceSpec& spec,
                         const Subject& subject) {
  spec.validate();
  CheckResult result;
  result.property = p.name;
  for (std::uint64_t i = 0; i < spec.trials; ++i) {
    const Instance instance = gen_instance(spec, i);
    const Outcome o = evaluate(p, instance, subject);
    ++result.trials_run;
    if (o.verdict == Outcome::Verdict::kDiscard) {
      ++result.discarded;
      continue;
    }
    if (!failed(o)) continue;
    std::size_t steps = 0;
    Instance shrunk = shrink(instance, p, subject, &steps);
    Violation violation = *evaluate(p, shrunk, subject).violation;
    result.passed = false;
    result.failure =
        Failure{i, std::move(shrunk), std::move(violation), steps};
    break;
  }
  return result;
}

std::vector<CheckResult> run_registry(const InstanceSpec& spec,
                                      const Subject& subject) {
  spec.validate();
  std::vector<CheckResult> results;
  for (const auto& p : registry()) {
    results.push_back(run_property(p, spec, subject));
  }
  return results;
}

}  // namespace qifl::propcheck
