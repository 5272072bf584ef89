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

#include "qifl/core.hpp"

#include <algorithm>
#include <unordered_set>

namespace qifl {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNonStochasticRow:
      return "NonStochasticRow";
    case ErrorKind::kNegativeEntry:
      return "NegativeEntry";
    case ErrorKind::kLabelMismatch:
      return "LabelMismatch";
    case ErrorKind::kDegenerateGain:
      return "DegenerateGain";
    case ErrorKind::kInvalidEpsilon:
      return "InvalidEpsilon";
    case ErrorKind::kZeroPriorMass:
      return "ZeroPriorMass";
    case ErrorKind::kParseError:
      return "ParseError";
    case ErrorKind::kInvalidArgument:
      return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

std::string join(const std::vector<std::string>& names) {
  std::string out = "(";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ",";
    out += names[i];
  }
  return out + ")";
}

void require_non_negative(const Matrix& m, const Labels& rows,
                          const Labels& cols, std::string_view what) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m.at(r, c).is_negative()) {
        throw Error(ErrorKind::kNegativeEntry,
                    std::string(what) + " entry (" + rows[r] + ", " + cols[c] +
                        ") = " + m.at(r, c).str());
      }
    }
  }
}

void require_shape(const Matrix& m, const Labels& rows, const Labels& cols,
                   std::string_view what) {
  if (rows.empty() || cols.empty()) {
    throw Error(ErrorKind::kInvalidArgument,
                std::string(what) + " needs at least one row and one column");
  }
  if (m.rows() != rows.size() || m.cols() != cols.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                std::string(what) + " matrix is " + std::to_string(m.rows()) +
                    "x" + std::to_string(m.cols()) + " but labels are " +
                    std::to_string(rows.size()) + "x" +
                    std::to_string(cols.size()));
  }
}

}  // namespace

Labels::Labels(std::vector<std::string> names) : names_(std::move(names)) {
  std::unordered_set<std::string_view> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw Error(ErrorKind::kInvalidArgument, "empty label");
    if (!seen.insert(n).second) {
      throw Error(ErrorKind::kInvalidArgument, "duplicate label '" + n + "'");
    }
  }
}

Labels Labels::numbered(std::string_view prefix, std::size_t count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    names.push_back(std::string(prefix) + std::to_string(i));
  }
  return Labels(std::move(names));
}

std::optional<std::size_t> Labels::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

Labels Labels::without(std::size_t i) const {
  auto names = names_;
  names.erase(names.begin() + static_cast<std::ptrdiff_t>(i));
  return Labels(std::move(names));
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw Error(ErrorKind::kInvalidArgument,
                  "ragged matrix: row " + std::to_string(r) + " has " +
                      std::to_string(rows[r].size()) + " cells, expected " +
                      std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Rational Matrix::row_sum(std::size_t r) const {
  Rational s;
  for (const auto& v : row(r)) s += v;
  return s;
}

Rational Matrix::col_sum(std::size_t c) const {
  Rational s;
  for (std::size_t r = 0; r < rows_; ++r) s += at(r, c);
  return s;
}

Prior Prior::make(Labels support, std::vector<Rational> masses) {
  if (support.empty() || support.size() != masses.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "prior needs one mass per secret (" +
                    std::to_string(support.size()) + " labels, " +
                    std::to_string(masses.size()) + " masses)");
  }
  Rational total;
  for (std::size_t i = 0; i < masses.size(); ++i) {
    if (masses[i].is_negative()) {
      throw Error(ErrorKind::kNegativeEntry,
                  "prior mass of " + support[i] + " = " + masses[i].str());
    }
    total += masses[i];
  }
  if (total != Rational(1)) {
    throw Error(ErrorKind::kNonStochasticRow,
                "prior masses sum to " + total.str());
  }
  return Prior(std::move(support), std::move(masses));
}

Prior Prior::uniform(Labels support) {
  if (support.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "uniform prior over no secrets");
  }
  const long n = static_cast<long>(support.size());
  std::vector<Rational> masses(support.size(), Rational(1, n));
  return Prior(std::move(support), std::move(masses));
}

Prior Prior::point(Labels support, std::size_t at) {
  if (at >= support.size()) {
    throw Error(ErrorKind::kInvalidArgument, "point prior index out of range");
  }
  std::vector<Rational> masses(support.size());
  masses[at] = 1;
  return Prior(std::move(support), std::move(masses));
}

bool Prior::full_support() const {
  return std::all_of(masses_.begin(), masses_.end(),
                     [](const Rational& m) { return m.is_positive(); });
}

bool Channel::non_interacting() const {
  for (std::size_t x = 1; x < entries_.rows(); ++x) {
    for (std::size_t y = 0; y < entries_.cols(); ++y) {
      if (entries_.at(x, y) != entries_.at(0, y)) return false;
    }
  }
  return true;
}

Channel make_channel(Labels secrets, Labels observations, Matrix entries) {
  require_shape(entries, secrets, observations, "channel");
  require_non_negative(entries, secrets, observations, "channel");
  for (std::size_t x = 0; x < entries.rows(); ++x) {
    if (auto s = entries.row_sum(x); s != Rational(1)) {
      throw Error(ErrorKind::kNonStochasticRow,
                  "channel row '" + secrets[x] + "' sums to " + s.str());
    }
  }
  return Channel(std::move(secrets), std::move(observations),
                 std::move(entries));
}

Channel make_channel(Labels secrets, Labels observations,
                     const std::vector<std::vector<Rational>>& rows) {
  return make_channel(std::move(secrets), std::move(observations),
                      Matrix::from_rows(rows));
}

Channel identity_channel(const Labels& secrets) {
  Matrix m(secrets.size(), secrets.size());
  for (std::size_t i = 0; i < secrets.size(); ++i) m.at(i, i) = 1;
  return make_channel(secrets, secrets, std::move(m));
}

Channel constant_channel(const Labels& secrets, const Labels& observations,
                         const std::vector<Rational>& row) {
  return make_channel(secrets, observations,
                      std::vector<std::vector<Rational>>(secrets.size(), row));
}

Joint Joint::make(Labels row_labels, Labels col_labels, Matrix entries) {
  require_shape(entries, row_labels, col_labels, "joint");
  require_non_negative(entries, row_labels, col_labels, "joint");
  Rational total;
  for (std::size_t r = 0; r < entries.rows(); ++r) total += entries.row_sum(r);
  if (total != Rational(1)) {
    throw Error(ErrorKind::kNonStochasticRow,
                "joint entries sum to " + total.str());
  }
  return Joint(std::move(row_labels), std::move(col_labels),
               std::move(entries));
}

GainFunction GainFunction::make(Labels actions, Labels secrets, Matrix gains) {
  require_shape(gains, actions, secrets, "gain");
  require_non_negative(gains, actions, secrets, "gain");
  return GainFunction(std::move(actions), std::move(secrets),
                      std::move(gains));
}

GainFunction GainFunction::make(
    Labels actions, Labels secrets,
    const std::vector<std::vector<Rational>>& rows) {
  return make(std::move(actions), std::move(secrets), Matrix::from_rows(rows));
}

void require_same_labels(const Labels& a, const Labels& b,
                         std::string_view what) {
  if (a != b) {
    throw Error(ErrorKind::kLabelMismatch, std::string(what) + ": " +
                                               join(a.names()) + " vs " +
                                               join(b.names()));
  }
}

Joint joint(const Prior& pi, const Channel& c) {
  require_same_labels(pi.support(), c.secrets(), "prior support vs secrets");
  Matrix m(c.num_secrets(), c.num_observations());
  for (std::size_t x = 0; x < c.num_secrets(); ++x) {
    for (std::size_t y = 0; y < c.num_observations(); ++y) {
      m.at(x, y) = pi.mass(x) * c.at(x, y);
    }
  }
  return Joint::make(c.secrets(), c.observations(), std::move(m));
}

Hyper hyper(const Prior& pi, const Channel& c) {
  const Joint j = joint(pi, c);
  Hyper h;
  std::vector<std::string> kept;
  for (std::size_t y = 0; y < c.num_observations(); ++y) {
    Rational marginal = j.entries().col_sum(y);
    if (marginal.is_zero()) continue;
    std::vector<Rational> posterior(c.num_secrets());
    for (std::size_t x = 0; x < c.num_secrets(); ++x) {
      posterior[x] = j.at(x, y) / marginal;
    }
    kept.push_back(c.observations()[y]);
    h.source_columns.push_back(y);
    h.posteriors.push_back(Prior::make(c.secrets(), std::move(posterior)));
    h.marginals.push_back(std::move(marginal));
  }
  h.observations = Labels(std::move(kept));
  return h;
}

Channel compose(const Channel& d, const Channel& c) {
  require_same_labels(d.observations(), c.secrets(),
                      "composed channel interface");
  Matrix m(d.num_secrets(), c.num_observations());
  for (std::size_t z = 0; z < d.num_secrets(); ++z) {
    for (std::size_t x = 0; x < d.num_observations(); ++x) {
      const Rational& dzx = d.at(z, x);
      if (dzx.is_zero()) continue;
      for (std::size_t y = 0; y < c.num_observations(); ++y) {
        m.at(z, y) += dzx * c.at(x, y);
      }
    }
  }
  return make_channel(d.secrets(), c.observations(), std::move(m));
}

Factorization factorize(const Joint& j) {
  const std::size_t rows = j.entries().rows();
  const std::size_t cols = j.entries().cols();
  std::vector<Rational> rho(rows);
  Matrix d(rows, cols);
  const Rational uniform(1, static_cast<long>(cols));
  for (std::size_t z = 0; z < rows; ++z) {
    rho[z] = j.entries().row_sum(z);
    for (std::size_t x = 0; x < cols; ++x) {
      d.at(z, x) = rho[z].is_zero() ? uniform : j.at(z, x) / rho[z];
    }
  }
  return {Prior::make(j.row_labels(), std::move(rho)),
          make_channel(j.row_labels(), j.col_labels(), std::move(d))};
}

}  // namespace qifl
