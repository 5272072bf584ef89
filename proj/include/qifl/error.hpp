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

#ifndef QIFL_ERROR_HPP_
#define QIFL_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace qifl {

enum class ErrorKind {
  kNonStochasticRow,
  kNegativeEntry,
  kLabelMismatch,
  kDegenerateGain,
  kInvalidEpsilon,
  kZeroPriorMass,
  kParseError,
  kInvalidArgument,
};

std::string_view to_string(ErrorKind kind);

// Every validation failure in the library surfaces as an Error carrying its
// kind; the message names the offending labels where there are any.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qifl

#endif  // QIFL_ERROR_HPP_
