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

#ifndef NOVL_INDEX_FILE_HPP
#define NOVL_INDEX_FILE_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "novl/query_engine.hpp"

namespace novl {

// Layout (all integers 8-byte little-endian unless noted):
//   "NOVLIDX1" | version (1 byte) | flags (1 byte) | n
//   text (n bytes) | sa (n) | lcp (n)
//   levels | thresholds (levels) | ranks (levels x n)
//   sequence count | (s, e, pl) per sequence
//   group count | per group: pl, count, sequence ids by ascending x
//   checksum: byte sum of everything above, mod 2^64
inline constexpr std::string_view kIndexMagic = "NOVLIDX1";
inline constexpr std::uint8_t kIndexVersion = 1;
/// Grids are rebuilt from the stored sequences when loading.
inline constexpr std::uint8_t kFlagRebuildGrids = 0x01;

class CorruptIndex : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

std::string serialize_index(const NOIndex& index);
/// Throws CorruptIndex on any format violation.
NOIndex deserialize_index(std::string_view bytes);

/// Returns the number of bytes written. Throws IoError.
std::size_t save_index(const NOIndex& index, const std::filesystem::path& path);
NOIndex load_index(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);

}  // namespace novl

#endif  // NOVL_INDEX_FILE_HPP
