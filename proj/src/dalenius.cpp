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

#include "qifl/dalenius.hpp"

#include <algorithm>

#include "qifl/measures.hpp"

namespace qifl {

namespace {

std::vector<std::size_t> supported_rows(const Prior& rho) {
  std::vector<std::size_t> rows;
  for (std::size_t z = 0; z < rho.size(); ++z) {
    if (rho.mass(z).is_positive()) rows.push_back(z);
  }
  return rows;
}

Prior restrict_prior(const Prior& rho, const std::vector<std::size_t>& rows) {
  std::vector<std::string> names;
  std::vector<Rational> masses;
  for (auto z : rows) {
    names.push_back(rho.support()[z]);
    masses.push_back(rho.mass(z));
  }
  return Prior::make(Labels(std::move(names)), std::move(masses));
}

Channel restrict_rows(const Channel& d, const std::vector<std::size_t>& rows) {
  std::vector<std::string> names;
  Matrix m(rows.size(), d.num_observations());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    names.push_back(d.secrets()[rows[i]]);
    for (std::size_t x = 0; x < d.num_observations(); ++x) {
      m.at(i, x) = d.at(rows[i], x);
    }
  }
  return make_channel(Labels(std::move(names)), d.observations(),
                      std::move(m));
}

GainFunction restrict_secrets(const GainFunction& g,
                              const std::vector<std::size_t>& cols) {
  std::vector<std::string> names;
  Matrix m(g.actions().size(), cols.size());
  for (std::size_t i = 0; i < cols.size(); ++i) {
    names.push_back(g.secrets()[cols[i]]);
    for (std::size_t w = 0; w < g.actions().size(); ++w) {
      m.at(w, i) = g.at(w, cols[i]);
    }
  }
  return GainFunction::make(g.actions(), Labels(std::move(names)),
                            std::move(m));
}

Prior column_marginal(const Joint& j) {
  std::vector<Rational> masses(j.entries().cols());
  for (std::size_t x = 0; x < masses.size(); ++x) {
    masses[x] = j.entries().col_sum(x);
  }
  return Prior::make(j.col_labels(), std::move(masses));
}

}  // namespace

Correlation::Correlation(Joint j)
    : joint_(std::move(j)),
      factors_(factorize(joint_)),
      supported_rho_(restrict_prior(factors_.rho, supported_rows(factors_.rho))),
      supported_d_(restrict_rows(factors_.d, supported_rows(factors_.rho))),
      pushforward_(column_marginal(joint_)) {}

DaleniusLift dalenius_lift(const Correlation& j, const Channel& c) {
  require_same_labels(j.x_labels(), c.secrets(),
                      "correlation X axis vs channel secrets");
  const Prior& rho = j.supported_rho();
  const Channel& d = j.supported_d();
  DaleniusLift r;
  r.lhs = lift(rho, compose(d, c)).value.value();
  r.lift_rho_d = lift(rho, d).value.value();
  r.lift_pi_c = lift(j.pushforward(), c).value.value();
  r.bound = std::min(r.lift_rho_d, r.lift_pi_c);
  r.holds = r.lhs <= r.bound;
  return r;
}

DaleniusCapacity dalenius_capacity_bound(const Correlation& j,
                                         const Channel& c,
                                         const GainFunction& g) {
  require_same_labels(j.x_labels(), c.secrets(),
                      "correlation X axis vs channel secrets");
  require_same_labels(g.secrets(), j.z_labels(), "gain secrets vs Z axis");
  const Channel dc = compose(j.supported_d(), c);
  const GainFunction g_supported =
      restrict_secrets(g, supported_rows(j.factors().rho));
  DaleniusCapacity r;
  r.leak = max_case_leakage(g_supported, j.supported_rho(), dc);
  r.cap_dc = lift_capacity(dc);
  r.cap_c = lift_capacity(c);
  r.holds = ExtRational(r.leak) <= r.cap_dc && r.cap_dc <= r.cap_c;
  return r;
}

}  // namespace qifl
