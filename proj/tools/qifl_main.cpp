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

#include <cstdlib>
#include <iostream>

#include "qifl/cli.hpp"

int main(int argc, char** argv) {
  std::optional<std::string> seed;
  if (const char* env = std::getenv("QIF_SEED")) seed = env;
  const auto result = qifl::cli::run_command_line(
      std::vector<std::string>(argv + 1, argv + argc), seed);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
