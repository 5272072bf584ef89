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

#include <algorithm>

namespace qifl {

GainFunction gid(const Labels& secrets) {
  Matrix m(secrets.size(), secrets.size());
  for (std::size_t i = 0; i < secrets.size(); ++i) m.at(i, i) = 1;
  return GainFunction::make(secrets, secrets, std::move(m));
}

GainFunction reciprocal_gain(const Prior& pi) {
  const Labels& secrets = pi.support();
  Matrix m(secrets.size(), secrets.size());
  for (std::size_t i = 0; i < secrets.size(); ++i) {
    if (pi.mass(i).is_zero()) {
      throw Error(ErrorKind::kZeroPriorMass,
                  "reciprocal gain undefined: secret '" + secrets[i] +
                      "' has zero prior mass");
    }
    m.at(i, i) = Rational(1) / pi.mass(i);
  }
  return GainFunction::make(secrets, secrets, std::move(m));
}

Rational max_prior_vulnerability(const GainFunction& g, const Prior& pi) {
  require_same_labels(g.secrets(), pi.support(), "gain secrets vs prior");
  Rational best;
  for (std::size_t w = 0; w < g.actions().size(); ++w) {
    for (std::size_t x = 0; x < pi.size(); ++x) {
      best = std::max(best, pi.mass(x) * g.at(w, x));
    }
  }
  return best;
}

GainFunction pointwise_gain(const GainFunction& g) {
  const Labels& secrets = g.secrets();
  const std::size_t n = secrets.size();
  std::vector<std::string> actions;
  actions.reserve(g.actions().size() * n);
  Matrix m(g.actions().size() * n, n);
  for (std::size_t w = 0; w < g.actions().size(); ++w) {
    for (std::size_t pinned = 0; pinned < n; ++pinned) {
      actions.push_back(g.actions()[w] + "@" + secrets[pinned]);
      m.at(w * n + pinned, pinned) = g.at(w, pinned);
    }
  }
  return GainFunction::make(Labels(std::move(actions)), secrets, std::move(m));
}

}  // namespace qifl
