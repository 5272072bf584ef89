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

// Exact domain types for finite probabilistic channels and the Bayesian
// plumbing (joints, hypers, composition, factorisation) that every leakage
// measure consumes. All values are immutable once constructed; the factory
// functions are the only way to obtain one and they validate everything.

#ifndef QIFL_CORE_HPP_
#define QIFL_CORE_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qifl/error.hpp"
#include "qifl/rational.hpp"

namespace qifl {

// An ordered axis of unique, non-empty names (secrets, observations or
// actions).
class Labels {
 public:
  Labels() = default;
  // Throws Error(kInvalidArgument) on an empty or duplicate name.
  explicit Labels(std::vector<std::string> names);
  Labels(std::initializer_list<std::string> names)
      : Labels(std::vector<std::string>(names)) {}

  // "prefix0", "prefix1", ...
  static Labels numbered(std::string_view prefix, std::size_t count);

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  const std::string& operator[](std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  // Copy without position `i`.
  Labels without(std::size_t i) const;

  friend bool operator==(const Labels&, const Labels&) = default;

 private:
  std::vector<std::string> names_;
};

// Dense row-major matrix of rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), cells_(rows * cols) {}
  // Throws Error(kInvalidArgument) on ragged input.
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Rational& at(std::size_t r, std::size_t c) const {
    return cells_[r * cols_ + c];
  }
  Rational& at(std::size_t r, std::size_t c) { return cells_[r * cols_ + c]; }
  std::span<const Rational> row(std::size_t r) const {
    return {cells_.data() + r * cols_, cols_};
  }
  Rational row_sum(std::size_t r) const;
  Rational col_sum(std::size_t c) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> cells_;
};

// Distribution over a finite secret set. Masses are non-negative and sum to
// exactly one; zero masses are allowed (partial support).
class Prior {
 public:
  // Throws kInvalidArgument (size mismatch / empty), kNegativeEntry, or
  // kNonStochasticRow when the masses do not sum to one.
  static Prior make(Labels support, std::vector<Rational> masses);
  static Prior uniform(Labels support);
  static Prior point(Labels support, std::size_t at);

  const Labels& support() const { return support_; }
  std::size_t size() const { return masses_.size(); }
  const Rational& mass(std::size_t i) const { return masses_[i]; }
  const std::vector<Rational>& masses() const { return masses_; }
  bool full_support() const;

  friend bool operator==(const Prior&, const Prior&) = default;

 private:
  Prior(Labels support, std::vector<Rational> masses)
      : support_(std::move(support)), masses_(std::move(masses)) {}

  Labels support_;
  std::vector<Rational> masses_;
};

// Row-stochastic matrix: row x is the output distribution for secret x.
class Channel {
 public:
  const Labels& secrets() const { return secrets_; }
  const Labels& observations() const { return observations_; }
  const Matrix& entries() const { return entries_; }
  const Rational& at(std::size_t x, std::size_t y) const {
    return entries_.at(x, y);
  }
  std::size_t num_secrets() const { return secrets_.size(); }
  std::size_t num_observations() const { return observations_.size(); }

  // True when all rows are identical (no information flows).
  bool non_interacting() const;

  friend bool operator==(const Channel&, const Channel&) = default;

 private:
  friend Channel make_channel(Labels, Labels, Matrix);
  Channel(Labels secrets, Labels observations, Matrix entries)
      : secrets_(std::move(secrets)),
        observations_(std::move(observations)),
        entries_(std::move(entries)) {}

  Labels secrets_;
  Labels observations_;
  Matrix entries_;
};

// Throws kInvalidArgument (dimensions), kNegativeEntry, or kNonStochasticRow
// naming the offending row label.
Channel make_channel(Labels secrets, Labels observations, Matrix entries);
Channel make_channel(Labels secrets, Labels observations,
                     const std::vector<std::vector<Rational>>& rows);

Channel identity_channel(const Labels& secrets);
// Every row equal to `row`.
Channel constant_channel(const Labels& secrets, const Labels& observations,
                         const std::vector<Rational>& row);

// Joint distribution over rows x columns; entries sum to exactly one.
class Joint {
 public:
  static Joint make(Labels row_labels, Labels col_labels, Matrix entries);

  const Labels& row_labels() const { return row_labels_; }
  const Labels& col_labels() const { return col_labels_; }
  const Matrix& entries() const { return entries_; }
  const Rational& at(std::size_t r, std::size_t c) const {
    return entries_.at(r, c);
  }

  friend bool operator==(const Joint&, const Joint&) = default;

 private:
  Joint(Labels rows, Labels cols, Matrix entries)
      : row_labels_(std::move(rows)),
        col_labels_(std::move(cols)),
        entries_(std::move(entries)) {}

  Labels row_labels_;
  Labels col_labels_;
  Matrix entries_;
};

// Posterior decomposition of (prior, channel). Only observations with a
// positive marginal are retained.
struct Hyper {
  Labels observations;
  // Column of the source channel each retained observation came from.
  std::vector<std::size_t> source_columns;
  std::vector<Rational> marginals;
  std::vector<Prior> posteriors;

  std::size_t size() const { return marginals.size(); }
};

// Non-negative action x secret gain table.
class GainFunction {
 public:
  static GainFunction make(Labels actions, Labels secrets, Matrix gains);
  static GainFunction make(Labels actions, Labels secrets,
                           const std::vector<std::vector<Rational>>& rows);

  const Labels& actions() const { return actions_; }
  const Labels& secrets() const { return secrets_; }
  const Matrix& gains() const { return gains_; }
  const Rational& at(std::size_t w, std::size_t x) const {
    return gains_.at(w, x);
  }

  friend bool operator==(const GainFunction&, const GainFunction&) = default;

 private:
  GainFunction(Labels actions, Labels secrets, Matrix gains)
      : actions_(std::move(actions)),
        secrets_(std::move(secrets)),
        gains_(std::move(gains)) {}

  Labels actions_;
  Labels secrets_;
  Matrix gains_;
};

// Throws kLabelMismatch unless `a == b`; `what` names the two axes.
void require_same_labels(const Labels& a, const Labels& b,
                         std::string_view what);

// J(x,y) = pi(x) C(x,y).
Joint joint(const Prior& pi, const Channel& c);

Hyper hyper(const Prior& pi, const Channel& c);

// Matrix product: d is Z -> X, c is X -> Y, result is Z -> Y.
Channel compose(const Channel& d, const Channel& c);

struct Factorization {
  Prior rho;
  Channel d;
};

// Splits a joint into its row marginal and the row-normalised channel. Rows
// with zero mass get the uniform row.
Factorization factorize(const Joint& j);

}  // namespace qifl

#endif  // QIFL_CORE_HPP_
