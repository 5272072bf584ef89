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

#include "qifl/csv_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace qifl {

namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> cells;
};

[[noreturn]] void fail(std::size_t line, const std::string& message) {
  throw Error(ErrorKind::kParseError,
              "line " + std::to_string(line) + ": " + message);
}

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    auto end = text.find('\n');
    std::string_view raw = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{}
                                         : text.substr(end + 1);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (raw.empty()) continue;
    Line line{number, {}};
    std::size_t start = 0;
    while (true) {
      auto comma = raw.find(',', start);
      line.cells.emplace_back(raw.substr(start, comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

std::string label_at(const Line& line, std::size_t cell) {
  const std::string& s = line.cells[cell];
  if (!is_valid_label(s)) fail(line.number, "invalid label '" + s + "'");
  return s;
}

Rational number_at(const Line& line, std::size_t cell) {
  const std::string& s = line.cells[cell];
  auto r = Rational::parse(s);
  if (!r) fail(line.number, "invalid number '" + s + "'");
  return *r;
}

Labels labels_from(std::vector<std::string> names, std::size_t line) {
  try {
    return Labels(std::move(names));
  } catch (const Error& e) {
    fail(line, e.what());
  }
}

// Parses the shared "<kind>,<col>,...\n<row>,<v>,..." layout.
struct LabelledTable {
  Labels rows;
  Labels cols;
  Matrix cells;
};

LabelledTable parse_table(std::string_view text, std::string_view kind) {
  auto lines = split_lines(text);
  if (lines.empty()) fail(1, "empty " + std::string(kind) + " file");
  const Line& header = lines.front();
  if (header.cells.front() != kind) {
    fail(header.number, "header must start with '" + std::string(kind) + "'");
  }
  if (header.cells.size() < 2) fail(header.number, "header has no columns");
  std::vector<std::string> col_names;
  for (std::size_t i = 1; i < header.cells.size(); ++i) {
    col_names.push_back(label_at(header, i));
  }
  const std::size_t width = col_names.size();
  if (lines.size() < 2) fail(header.number, "no data rows");
  std::vector<std::string> row_names;
  Matrix m(lines.size() - 1, width);
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const Line& line = lines[r];
    if (line.cells.size() != width + 1) {
      fail(line.number, "ragged row: expected " + std::to_string(width + 1) +
                            " cells, got " + std::to_string(line.cells.size()));
    }
    row_names.push_back(label_at(line, 0));
    for (std::size_t c = 0; c < width; ++c) {
      m.at(r - 1, c) = number_at(line, c + 1);
    }
  }
  return {labels_from(std::move(row_names), lines.back().number),
          labels_from(std::move(col_names), header.number), std::move(m)};
}

std::string render_table(std::string_view kind, const Labels& rows,
                         const Labels& cols, const Matrix& m) {
  std::ostringstream out;
  out << kind;
  for (const auto& c : cols.names()) out << ',' << c;
  out << '\n';
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out << rows[r];
    for (const auto& v : m.row(r)) out << ',' << v.str();
    out << '\n';
  }
  return out.str();
}

}  // namespace

bool is_valid_label(std::string_view label) {
  if (label.empty()) return false;
  for (char c : label) {
    const bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
                    (c >= '0' && c <= '9') || c == '_' || c == '@' || c == '-';
    if (!ok) return false;
  }
  return true;
}

Channel parse_channel_csv(std::string_view text) {
  auto t = parse_table(text, "channel");
  return make_channel(std::move(t.rows), std::move(t.cols), std::move(t.cells));
}

GainFunction parse_gain_csv(std::string_view text) {
  auto t = parse_table(text, "gain");
  return GainFunction::make(std::move(t.rows), std::move(t.cols),
                            std::move(t.cells));
}

Joint parse_joint_csv(std::string_view text) {
  auto t = parse_table(text, "joint");
  return Joint::make(std::move(t.rows), std::move(t.cols), std::move(t.cells));
}

Prior parse_prior_csv(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.empty()) fail(1, "empty prior file");
  std::vector<std::string> names;
  std::vector<Rational> masses;
  for (const auto& line : lines) {
    if (line.cells.size() != 2) {
      fail(line.number, "prior lines are '<secret>,<mass>'");
    }
    names.push_back(label_at(line, 0));
    masses.push_back(number_at(line, 1));
  }
  return Prior::make(labels_from(std::move(names), lines.back().number),
                     std::move(masses));
}

std::string to_csv(const Channel& c) {
  return render_table("channel", c.secrets(), c.observations(), c.entries());
}

std::string to_csv(const GainFunction& g) {
  return render_table("gain", g.actions(), g.secrets(), g.gains());
}

std::string to_csv(const Joint& j) {
  return render_table("joint", j.row_labels(), j.col_labels(), j.entries());
}

std::string to_csv(const Prior& pi) {
  std::ostringstream out;
  for (std::size_t i = 0; i < pi.size(); ++i) {
    out << pi.support()[i] << ',' << pi.mass(i).str() << '\n';
  }
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kInvalidArgument, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace qifl
