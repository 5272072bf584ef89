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

// Self-labelling CSV formats.
//
//   channel,<obs1>,<obs2>,...      gain,<secret1>,...      joint,<x1>,...
//   <secret>,<p1>,<p2>,...         <action>,<g1>,...       <z>,<j1>,...
//
//   prior files are one "<secret>,<mass>" line per secret.
//
// Cells are comma separated with no quoting. Labels match [A-Za-z0-9_@-]+;
// numbers match -?[0-9]+(/[1-9][0-9]*)? or -?[0-9]+\.[0-9]+ and are parsed
// exactly (0.75 is 3/4). Blank lines and a trailing '\r' are ignored.

#ifndef QIFL_CSV_IO_HPP_
#define QIFL_CSV_IO_HPP_

#include <string>
#include <string_view>

#include "qifl/core.hpp"

namespace qifl {

// Malformed text throws Error(kParseError) with the line number; well-formed
// text that violates a domain invariant throws the corresponding kind (e.g.
// kNonStochasticRow naming the row label).
Channel parse_channel_csv(std::string_view text);
Prior parse_prior_csv(std::string_view text);
GainFunction parse_gain_csv(std::string_view text);
Joint parse_joint_csv(std::string_view text);

// Exact "a/b" rendering; parse(to_csv(v)) == v.
std::string to_csv(const Channel& c);
std::string to_csv(const Prior& pi);
std::string to_csv(const GainFunction& g);
std::string to_csv(const Joint& j);

bool is_valid_label(std::string_view label);

// Throws Error(kInvalidArgument) when the file cannot be read.
std::string read_text_file(const std::string& path);

}  // namespace qifl

#endif  // QIFL_CSV_IO_HPP_
