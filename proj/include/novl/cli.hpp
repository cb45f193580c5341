// Copyright 2026 The novl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NOVL_CLI_HPP
#define NOVL_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "novl/query_engine.hpp"

namespace novl::cli {

enum ExitCode : int {
  kOk = 0,
  kIoError = 1,
  kUsage = 2,
  kCorruptIndex = 3,
  kMismatch = 4,
};

/// Runs the tool on `args` (program name excluded).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct VerifyOptions {
  std::size_t trials = 1000;
  std::uint64_t seed = 42;
  std::size_t max_pattern_len = 64;
  std::vector<std::string> forced_patterns;
};

struct VerifySummary {
  std::size_t trials = 0;
  std::size_t full_pass = 0;
  std::size_t full_fail = 0;
  std::size_t range_pass = 0;
  std::size_t range_fail = 0;
  std::string first_mismatch;

  bool ok() const { return full_fail == 0 && range_fail == 0; }
};

/// Random full-text and window queries checked against the brute-force oracle.
VerifySummary verify(const NOIndex& index, const VerifyOptions& options);

std::optional<std::string> decode_hex(std::string_view hex);
std::string encode_hex(std::string_view bytes);

}  // namespace novl::cli

#endif  // NOVL_CLI_HPP
