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

#include "novl/index_file.hpp"

#include <fstream>
#include <iterator>
#include <limits>
#include <numeric>
#include <vector>

namespace novl {
namespace {

class Writer {
 public:
  void bytes(std::string_view data) { out_.append(data); }
  void u8(std::uint8_t value) { out_.push_back(static_cast<char>(value)); }
  void u64(std::uint64_t value) {
    for (int b = 0; b < 8; ++b) out_.push_back(static_cast<char>((value >> (8 * b)) & 0xFFU));
  }
  void i64(Pos value) { u64(static_cast<std::uint64_t>(value)); }
  std::string take() { return std::move(out_); }
  const std::string& buffer() const { return out_; }

 private:
  std::string out_;
};

class Reader {
 public:
  explicit Reader(std::string_view data) : data_(data) {}

  std::string_view bytes(std::size_t count) {
    need(count);
    const auto view = data_.substr(at_, count);
    at_ += count;
    return view;
  }
  std::uint8_t u8() { return static_cast<std::uint8_t>(bytes(1)[0]); }
  std::uint64_t u64() {
    const auto raw = bytes(8);
    std::uint64_t value = 0;
    for (int b = 7; b >= 0; --b) value = (value << 8) | static_cast<unsigned char>(raw[b]);
    return value;
  }
  /// A count that must leave room for `unit` bytes per element.
  std::uint64_t count(std::size_t unit) {
    const auto value = u64();
    if (unit != 0 && value > (data_.size() - at_) / unit) throw CorruptIndex("count exceeds file");
    return value;
  }
  Pos position(Pos n) {
    const auto value = u64();
    if (value < 1 || value > static_cast<std::uint64_t>(n)) throw CorruptIndex("value out of range");
    return static_cast<Pos>(value);
  }
  bool done() const { return at_ == data_.size(); }

 private:
  void need(std::size_t count) const {
    if (count > data_.size() - at_) throw CorruptIndex("truncated index");
  }

  std::string_view data_;
  std::size_t at_ = 0;
};

std::uint64_t byte_sum(std::string_view data) {
  return std::accumulate(data.begin(), data.end(), std::uint64_t{0},
                         [](std::uint64_t acc, char c) {
                           return acc + static_cast<unsigned char>(c);
                         });
}

}  // namespace

std::string serialize_index(const NOIndex& index) {
  Writer w;
  const auto& suffix = index.suffix();
  w.bytes(kIndexMagic);
  w.u8(kIndexVersion);
  w.u8(kFlagRebuildGrids);
  w.i64(suffix.size());
  w.bytes(suffix.text());
  for (Pos y : suffix.sa()) w.i64(y);
  for (Pos h : suffix.lcp_values()) w.i64(h);

  const auto& renaming = index.renaming();
  w.u64(renaming.levels());
  for (Pos t : renaming.thresholds()) w.i64(t);
  for (std::size_t level = 0; level < renaming.levels(); ++level) {
    for (auto rank : renaming.ranks(level)) w.u64(rank);
  }

  w.u64(index.sequences().size());
  for (const auto& seq : index.sequences()) {
    w.i64(seq.s);
    w.i64(seq.e);
    w.i64(seq.pl);
  }

  w.u64(index.groups().size());
  for (const auto& group : index.groups()) {
    w.i64(group.pl);
    w.u64(group.by_x.size());
    for (auto id : group.by_x) w.u64(static_cast<std::uint64_t>(id));
  }
  w.u64(byte_sum(w.buffer()));
  return w.take();
}

NOIndex deserialize_index(std::string_view bytes) {
  if (bytes.size() < kIndexMagic.size() + 2 + 8 + 8) throw CorruptIndex("index too short");
  const auto body = bytes.substr(0, bytes.size() - 8);
  Reader tail(bytes.substr(bytes.size() - 8));
  if (tail.u64() != byte_sum(body)) throw CorruptIndex("checksum mismatch");

  Reader r(body);
  if (r.bytes(kIndexMagic.size()) != kIndexMagic) throw CorruptIndex("bad magic");
  if (r.u8() != kIndexVersion) throw CorruptIndex("unsupported version");
  const auto flags = r.u8();
  if ((flags & ~kFlagRebuildGrids) != 0) throw CorruptIndex("unknown flags");

  const auto n = static_cast<Pos>(r.count(1));
  if (n < 1) throw CorruptIndex("empty text");
  std::string text(r.bytes(static_cast<std::size_t>(n)));
  std::vector<Pos> sa(n);
  std::vector<Pos> lcp(n);
  for (auto& y : sa) y = static_cast<Pos>(r.u64());
  for (auto& h : lcp) h = static_cast<Pos>(r.u64());

  const auto levels = r.count(8 * static_cast<std::size_t>(n) + 8);
  std::vector<Pos> thresholds(levels);
  for (auto& t : thresholds) t = static_cast<Pos>(r.u64());
  std::vector<std::vector<std::uint32_t>> ranks(levels, std::vector<std::uint32_t>(n));
  for (auto& level : ranks) {
    for (auto& rank : level) {
      const auto value = r.u64();
      if (value > std::numeric_limits<std::uint32_t>::max()) throw CorruptIndex("rank too large");
      rank = static_cast<std::uint32_t>(value);
    }
  }

  const auto sequence_count = r.count(24);
  std::vector<PeriodSequence> sequences(sequence_count);
  for (auto& seq : sequences) {
    seq.s = r.position(n);
    seq.e = r.position(n);
    seq.pl = r.position(n);
  }

  const auto group_count = r.count(16);
  std::vector<std::pair<Pos, std::vector<std::int32_t>>> groups(group_count);
  for (auto& [pl, ids] : groups) {
    pl = r.position(n);
    ids.resize(r.count(8));
    for (auto& id : ids) {
      const auto value = r.u64();
      if (value >= sequence_count) throw CorruptIndex("sequence id out of range");
      id = static_cast<std::int32_t>(value);
    }
  }
  if (!r.done()) throw CorruptIndex("trailing bytes");

  try {
    auto suffix = SuffixIndex::from_parts(std::move(text), std::move(sa), std::move(lcp));
    auto renaming = RenamingTable::from_parts(suffix, std::move(thresholds), std::move(ranks));
    auto index = NOIndex::assemble(std::move(suffix), std::move(renaming), sequences);
    // Stored order must survive reassembly unchanged.
    for (std::size_t k = 0; k < sequences.size(); ++k) {
      const auto& got = index.sequences()[k];
      if (got.s != sequences[k].s || got.pl != sequences[k].pl) {
        throw CorruptIndex("sequences not in canonical order");
      }
    }
    if (index.groups().size() != groups.size()) throw CorruptIndex("group table mismatch");
    for (std::size_t g = 0; g < groups.size(); ++g) {
      if (index.groups()[g].pl != groups[g].first || index.groups()[g].by_x != groups[g].second) {
        throw CorruptIndex("group table mismatch");
      }
    }
    return index;
  } catch (const CorruptIndex&) {
    throw;
  } catch (const Error& e) {
    throw CorruptIndex(e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("cannot read " + path.string());
  return data;
}

std::size_t save_index(const NOIndex& index, const std::filesystem::path& path) {
  const auto bytes = serialize_index(index);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("cannot write " + path.string());
  return bytes.size();
}

NOIndex load_index(const std::filesystem::path& path) {
  return deserialize_index(read_file(path));
}

}  // namespace novl
