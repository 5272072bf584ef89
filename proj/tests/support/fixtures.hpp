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

// Shared channels and independent brute-force oracles for the test suites.
// The oracles work on raw rational matrices and never call the measures
// under test.

#ifndef QIFL_TESTS_SUPPORT_FIXTURES_HPP_
#define QIFL_TESTS_SUPPORT_FIXTURES_HPP_

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "qifl/core.hpp"
#include "qifl/measures.hpp"

namespace qifl::testing {

inline Rational q(long n, long d = 1) { return Rational(n, d); }

using Rows = std::vector<std::vector<Rational>>;

// Eye-colour reporting channel: secrets b, g, bg; reports b, g.
inline Channel eye_channel() {
  return make_channel(Labels{"b", "g", "bg"}, Labels{"b", "g"},
                      Rows{{q(3, 4), q(1, 4)},
                           {q(1, 4), q(3, 4)},
                           {q(19, 20), q(1, 20)}});
}

inline Prior eye_prior() {
  return Prior::make(Labels{"b", "g", "bg"}, {q(1, 4), q(1, 2), q(1, 4)});
}

// Geometric-style survey mechanism (eps = ln 4).
inline Channel survey_g() {
  return make_channel(Labels{"y", "m", "n"}, Labels{"y", "m", "n"},
                      Rows{{q(2, 3), q(1, 6), q(1, 6)},
                           {q(1, 3), q(1, 3), q(1, 3)},
                           {q(1, 6), q(1, 6), q(2, 3)}});
}

// Randomised-response survey mechanism (eps = ln 3).
inline Channel survey_r() {
  return make_channel(Labels{"y", "m", "n"}, Labels{"y", "m", "n"},
                      Rows{{q(3, 5), q(1, 5), q(1, 5)},
                           {q(1, 5), q(3, 5), q(1, 5)},
                           {q(1, 5), q(1, 5), q(3, 5)}});
}

namespace oracle {

// lift straight from its definition: max over pi(x) C(x,y) > 0 of
// C(x,y) / sum_x' pi(x') C(x',y).
inline Rational lift(const std::vector<Rational>& pi, const Rows& c) {
  std::optional<Rational> best;
  for (std::size_t y = 0; y < c.front().size(); ++y) {
    Rational p;
    for (std::size_t x = 0; x < c.size(); ++x) p += pi[x] * c[x][y];
    for (std::size_t x = 0; x < c.size(); ++x) {
      if ((pi[x] * c[x][y]).is_zero()) continue;
      Rational r = c[x][y] / p;
      if (!best || r > *best) best = r;
    }
  }
  return *best;
}

// Pairwise within-column ratio maximum; nullopt stands for +inf.
inline std::optional<Rational> column_ratio_max(const Rows& c) {
  Rational best(1);
  for (std::size_t y = 0; y < c.front().size(); ++y) {
    for (const auto& top : c) {
      for (const auto& bottom : c) {
        if (top[y].is_zero()) continue;
        if (bottom[y].is_zero()) return std::nullopt;
        best = std::max(best, top[y] / bottom[y]);
      }
    }
  }
  return best;
}

// max_w sum_x pi(x) g(w,x).
inline Rational vulnerability(const Rows& g, const std::vector<Rational>& pi) {
  std::optional<Rational> best;
  for (const auto& row : g) {
    Rational s;
    for (std::size_t x = 0; x < pi.size(); ++x) s += pi[x] * row[x];
    if (!best || s > *best) best = s;
  }
  return *best;
}

inline Rows rows_of(const Matrix& m) {
  Rows out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out[r].assign(m.row(r).begin(), m.row(r).end());
  }
  return out;
}

inline Rows multiply(const Rows& a, const Rows& b) {
  Rows out(a.size(), std::vector<Rational>(b.front().size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      for (std::size_t j = 0; j < b.front().size(); ++j) {
        out[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return out;
}

// Calls f on every point of the barycentric grid {k / n : sum k = n} in
// `dims` dimensions.
inline void for_each_grid_point(
    std::size_t dims, long n,
    const std::function<void(const std::vector<long>&)>& f) {
  std::vector<long> k(dims, 0);
  std::function<void(std::size_t, long)> rec = [&](std::size_t i,
                                                   long left) {
    if (i + 1 == dims) {
      k[i] = left;
      f(k);
      return;
    }
    for (long v = 0; v <= left; ++v) {
      k[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, n);
}

// Full-support prior: (1 - w) * (k / n) + w * uniform.
inline std::vector<Rational> blended_prior(const std::vector<long>& k, long n,
                                           const Rational& w) {
  const Rational u(1, static_cast<long>(k.size()));
  std::vector<Rational> pi;
  for (long v : k) pi.push_back((Rational(1) - w) * Rational(v, n) + w * u);
  return pi;
}

}  // namespace oracle

// Deliberately broken lift: ranges over C(x,y) > 0 instead of J(x,y) > 0, so
// zero-mass secrets can win.
inline LeakageReport broken_lift(const Prior& pi, const Channel& c) {
  std::optional<Rational> best;
  for (std::size_t y = 0; y < c.num_observations(); ++y) {
    Rational p;
    for (std::size_t x = 0; x < pi.size(); ++x) p += pi.mass(x) * c.at(x, y);
    if (p.is_zero()) continue;
    for (std::size_t x = 0; x < pi.size(); ++x) {
      if (c.at(x, y).is_zero()) continue;
      Rational r = c.at(x, y) / p;
      if (!best || r > *best) best = r;
    }
  }
  return LeakageReport{ExtRational(*best), std::nullopt};
}

}  // namespace qifl::testing

#endif  // QIFL_TESTS_SUPPORT_FIXTURES_HPP_
