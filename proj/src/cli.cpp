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

#include "novl/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "novl/index_file.hpp"
#include "novl/oracle.hpp"

namespace novl::cli {
namespace {

std::string join(const std::vector<Pos>& values) {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < values.size(); ++k) os << (k ? "," : "") << values[k];
  os << ']';
  return os.str();
}

std::string describe(const IndexStats& stats) {
  std::ostringstream os;
  os << "n=" << stats.n << " runs=";
  if (stats.runs) {
    os << *stats.runs;
  } else {
    os << "unknown";
  }
  os << " sequences=" << stats.sequences << " max_degree=" << stats.max_degree
     << " levels=" << stats.levels << " groups=" << stats.groups
     << " estimated_bytes=" << stats.estimated_bytes;
  return os.str();
}

std::string read_text_input(const std::string& path) {
  auto text = read_file(path);
  if (text.empty()) throw Error("empty input: " + path);
  return text;
}

int cmd_build(const std::string& input, const std::string& output, std::ostream& out) {
  auto index = NOIndex::build(read_text_input(input));
  const auto written = save_index(index, output);
  const auto stats = index.stats();
  out << "n=" << stats.n << " runs=" << stats.runs.value_or(0)
      << " sequences=" << stats.sequences << " levels=" << stats.levels
      << " bytes=" << written << '\n';
  return kOk;
}

struct QueryArgs {
  std::string index;
  std::string pattern;
  std::string pattern_hex;
  std::vector<Pos> range;
  std::string format = "lines";
  bool count_only = false;
};

int cmd_query(const QueryArgs& args, std::ostream& out, std::ostream& err) {
  std::string pattern = args.pattern;
  if (!args.pattern_hex.empty()) {
    auto decoded = decode_hex(args.pattern_hex);
    if (!decoded) {
      err << "error: --pattern-hex is not valid hex\n";
      return kUsage;
    }
    pattern = std::move(*decoded);
  }
  if (pattern.empty()) {
    err << "error: empty pattern\n";
    return kUsage;
  }
  const auto index = load_index(args.index);
  QueryResult result;
  if (args.range.empty()) {
    result = index.query(pattern);
  } else {
    const Pos i = args.range[0];
    const Pos j = args.range[1];
    if (i < 1 || j > index.size() || i > j) {
      err << "error: bad range [" << i << ", " << j << "] for text of length " << index.size()
          << '\n';
      return kUsage;
    }
    result = index.query_range(pattern, i, j);
  }

  if (args.count_only) {
    out << result.occ_no() << '\n';
  } else if (args.format == "json") {
    nlohmann::ordered_json doc;
    doc["pattern_len"] = pattern.size();
    doc["range"] = args.range.empty() ? nlohmann::ordered_json(nullptr)
                                      : nlohmann::ordered_json(args.range);
    doc["count"] = result.occ_no();
    doc["starts"] = result.starts;
    out << doc.dump() << '\n';
  } else {
    for (Pos t : result.starts) out << t << '\n';
  }
  return kOk;
}

int cmd_verify(const std::string& input, const VerifyOptions& options, std::ostream& out,
               std::ostream& err) {
  const auto index = NOIndex::build(read_text_input(input));
  const auto summary = verify(index, options);
  out << "trials=" << summary.trials << " full_pass=" << summary.full_pass
      << " full_fail=" << summary.full_fail << " range_pass=" << summary.range_pass
      << " range_fail=" << summary.range_fail << '\n';
  if (!summary.ok()) {
    err << summary.first_mismatch << '\n';
    return kMismatch;
  }
  return kOk;
}

int cmd_stats(const std::string& input, std::ostream& out) {
  const auto index = NOIndex::build(read_text_input(input));
  out << describe(index.stats()) << '\n';
  return kOk;
}

int cmd_bench(const std::string& input, const std::string& patterns_path, std::size_t repeat,
              std::ostream& out) {
  const auto build_start = std::chrono::steady_clock::now();
  const auto index = NOIndex::build(read_text_input(input));
  const std::chrono::duration<double> build_time = std::chrono::steady_clock::now() - build_start;
  out << "# " << describe(index.stats()) << " build_s=" << std::fixed << std::setprecision(3)
      << build_time.count() << '\n';
  out << "pattern\tm\tclass\tocc\tocc_no\tmicros\tcandidates\temissions\n";

  std::istringstream lines(read_file(patterns_path));
  std::string pattern;
  while (std::getline(lines, pattern)) {
    if (!pattern.empty() && pattern.back() == '\r') pattern.pop_back();
    if (pattern.empty()) continue;
    const auto locus = index.suffix().locate(pattern);
    QueryResult result;
    std::vector<double> times;
    for (std::size_t k = 0; k < std::max<std::size_t>(repeat, 1); ++k) {
      const auto start = std::chrono::steady_clock::now();
      result = index.query(pattern);
      const std::chrono::duration<double, std::micro> took =
          std::chrono::steady_clock::now() - start;
      times.push_back(took.count());
    }
    std::nth_element(times.begin(), times.begin() + static_cast<std::ptrdiff_t>(times.size() / 2),
                     times.end());
    const auto& cls = result.stats.pattern;
    const std::string shown = pattern.size() > 24 ? pattern.substr(0, 21) + "..." : pattern;
    out << shown << '\t' << pattern.size() << '\t'
        << (cls.kind == PatternKind::kPeriodic ? "periodic" : "aperiodic") << '\t'
        << (locus ? locus->size() : 0) << '\t' << result.occ_no() << '\t' << std::setprecision(1)
        << times[times.size() / 2] << '\t' << result.stats.candidates << '\t'
        << result.stats.emissions << '\n';
  }
  return kOk;
}

}  // namespace

std::optional<std::string> decode_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) return std::nullopt;
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  };
  std::string bytes;
  for (std::size_t k = 0; k < hex.size(); k += 2) {
    const int hi = nibble(hex[k]);
    const int lo = nibble(hex[k + 1]);
    if (hi < 0 || lo < 0) return std::nullopt;
    bytes.push_back(static_cast<char>(hi * 16 + lo));
  }
  return bytes;
}

std::string encode_hex(std::string_view bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string hex;
  for (unsigned char c : bytes) {
    hex.push_back(kDigits[c >> 4]);
    hex.push_back(kDigits[c & 0xF]);
  }
  return hex;
}

VerifySummary verify(const NOIndex& index, const VerifyOptions& options) {
  VerifySummary summary;
  const std::string_view text = index.suffix().text();
  const Pos n = index.size();
  std::mt19937_64 rng(options.seed);
  auto uniform = [&](Pos lo, Pos hi) { return std::uniform_int_distribution<Pos>(lo, hi)(rng); };

  auto record = [&](bool full, const std::string& pattern, Pos i, Pos j,
                    const std::vector<Pos>& expected, const std::vector<Pos>& got) {
    const bool same = expected == got;
    auto& pass = full ? summary.full_pass : summary.range_pass;
    auto& fail = full ? summary.full_fail : summary.range_fail;
    if (same) {
      ++pass;
      return;
    }
    ++fail;
    if (!summary.first_mismatch.empty()) return;
    std::ostringstream os;
    const Pos shown_end = std::min(j, i + 63);
    os << "mismatch kind=" << (full ? "full" : "range") << " window=[" << i << "," << j << "]"
       << " text_hex[" << i << ".." << shown_end
       << "]=" << encode_hex(text.substr(i - 1, shown_end - i + 1))
       << " pattern_hex=" << encode_hex(pattern) << " expected=" << join(expected)
       << " got=" << join(got);
    summary.first_mismatch = os.str();
  };

  auto check = [&](const std::string& pattern, Pos i, Pos j) {
    const auto expected_full = oracle::naive_greedy(text, pattern);
    record(true, pattern, 1, n, expected_full, index.query(pattern).starts);
    const auto expected_range = oracle::naive_greedy(text, pattern, i, j);
    record(false, pattern, i, j, expected_range, index.query_range(pattern, i, j).starts);
  };

  for (const auto& pattern : options.forced_patterns) {
    if (pattern.empty()) continue;
    check(pattern, 1, n);
    for (int k = 0; k < 4; ++k) {
      const Pos i = uniform(1, n);
      check(pattern, i, uniform(i, n));
    }
  }

  const Pos max_len = std::max<Pos>(1, std::min<Pos>(static_cast<Pos>(options.max_pattern_len), n));
  for (std::size_t trial = 0; trial < options.trials; ++trial) {
    const Pos len = uniform(1, max_len);
    const Pos start = uniform(0, n - len);
    std::string pattern(text.substr(start, len));
    if (uniform(0, 9) == 0) {
      // Mutated pattern; usually, but not necessarily, absent from the text.
      for (int attempt = 0; attempt < 8; ++attempt) {
        pattern[uniform(0, len - 1)] = static_cast<char>(uniform(0, 255));
        if (oracle::naive_occurrences(text, pattern).empty()) break;
      }
    }
    const Pos i = uniform(1, n);
    check(pattern, i, uniform(i, n));
    ++summary.trials;
  }
  return summary;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Non-overlapping occurrence index", "novl"};
  app.require_subcommand(1);

  std::string build_input;
  std::string build_output;
  auto* build = app.add_subcommand("build", "Build an index file from a text file");
  build->add_option("--input", build_input, "Text file")->required();
  build->add_option("--output", build_output, "Index file to write")->required();

  QueryArgs query_args;
  auto* query = app.add_subcommand("query", "Report non-overlapping occurrences");
  query->add_option("--index", query_args.index, "Index file")->required();
  auto* literal = query->add_option("--pattern", query_args.pattern, "Pattern bytes");
  auto* hex = query->add_option("--pattern-hex", query_args.pattern_hex, "Pattern as hex");
  literal->excludes(hex);
  query->add_option("--range", query_args.range, "Window I J (1-based, inclusive)")
      ->expected(2);
  query->add_option("--format", query_args.format, "Output format")
      ->check(CLI::IsMember({"lines", "json"}));
  query->add_flag("--count-only", query_args.count_only, "Print only the count");

  std::string verify_input;
  VerifyOptions verify_options;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check random queries with the oracle");
  verify_cmd->add_option("--input", verify_input, "Text file")->required();
  verify_cmd->add_option("--trials", verify_options.trials, "Random trials");
  verify_cmd->add_option("--seed", verify_options.seed, "RNG seed");
  verify_cmd->add_option("--max-pattern-len", verify_options.max_pattern_len,
                         "Longest sampled pattern");
  verify_cmd->add_option("--include-pattern", verify_options.forced_patterns,
                         "Pattern always checked (repeatable)");

  std::string stats_input;
  auto* stats = app.add_subcommand("stats", "Print index statistics for a text file");
  stats->add_option("--input", stats_input, "Text file")->required();

  std::string bench_input;
  std::string bench_patterns;
  std::size_t bench_repeat = 5;
  auto* bench = app.add_subcommand("bench", "Time queries from a pattern file");
  bench->add_option("--input", bench_input, "Text file")->required();
  bench->add_option("--patterns", bench_patterns, "One pattern per line")->required();
  bench->add_option("--repeat", bench_repeat, "Timed repetitions per pattern");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (build->parsed()) return cmd_build(build_input, build_output, out);
    if (query->parsed()) {
      if (query_args.pattern.empty() && query_args.pattern_hex.empty()) {
        err << "error: one of --pattern or --pattern-hex is required\n";
        return kUsage;
      }
      return cmd_query(query_args, out, err);
    }
    if (verify_cmd->parsed()) return cmd_verify(verify_input, verify_options, out, err);
    if (stats->parsed()) return cmd_stats(stats_input, out);
    if (bench->parsed()) return cmd_bench(bench_input, bench_patterns, bench_repeat, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const CorruptIndex& e) {
    err << "error: corrupt index: " << e.what() << '\n';
    return kCorruptIndex;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace novl::cli
