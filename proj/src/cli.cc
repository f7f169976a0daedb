// Copyright 2026 The pfac-dna Authors
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

#include "pfac/cli.h"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "pfac/bench.h"
#include "pfac/datagen.h"
#include "pfac/error.h"
#include "pfac/layouts.h"
#include "pfac/matcher.h"
#include "pfac/text_io.h"

namespace pfac {

namespace {

constexpr int kUsageStatus = 2;

// Re-throws inner errors with the offending file named.
template <class Fn>
auto WithPath(const std::string& path, Fn fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    if (std::string_view(e.what()).find(path) != std::string_view::npos) throw;
    throw Error(e.code(), path + ": " + e.what());
  }
}

std::string ExitCodeHelp() {
  std::string help = "Exit status:\n  0  success\n  1  internal error\n"
                     "  2  command-line usage error\n";
  for (int i = 0; i <= static_cast<int>(ErrorCode::kMissingBaseline); ++i) {
    const auto code = static_cast<ErrorCode>(i);
    help += "  " + std::to_string(ExitStatus(code)) + "  " +
            std::string(ErrorCodeName(code)) + "\n";
  }
  return help;
}

// Opens --out; "-" means `out`.
class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (path == "-") return;
    file_.open(path, std::ios::binary | std::ios::trunc);
    if (!file_) {
      throw Error(ErrorCode::kWriteFailure,
                  "cannot open '" + path + "' for writing");
    }
    stream_ = &file_;
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

struct MatchArgs {
  std::string patterns;
  std::string text;
  std::string format = "plain";
  std::string mode = "longest";
  std::string layout = "merged+staged";
  std::size_t workers = 1;
  std::size_t chunk_bytes = kDefaultChunkBytes;
  std::string out = "-";
  bool header = false;
};

struct GenArgs {
  std::string kind;
  std::string preset;
  std::uint64_t seed = 42;
  std::optional<std::size_t> count;
  std::optional<std::size_t> length;
  std::optional<std::size_t> min_length;
  std::optional<std::size_t> max_length;
  std::optional<std::size_t> bytes;
  std::string out;
};

struct BenchArgs {
  std::vector<std::string> patterns{"ps1"};
  std::vector<std::string> data{"mini1"};
  std::string format = "plain";
  std::vector<std::string> variants;
  std::vector<std::size_t> workers;
  int reps = 3;
  int warmup = 1;
  std::string mode = "longest";
  std::uint64_t seed = 42;
  std::size_t chunk_bytes = kDefaultChunkBytes;
  std::size_t oracle_max_bytes = std::size_t{1} << 20;
  std::string baseline = "split+direct";
  std::string out = "-";
  std::string report;
};

struct InspectArgs {
  std::string patterns;
  bool dump_table = false;
  bool dump_failure = false;
};

MatchMode ParseMode(const std::string& mode) {
  return mode == "all" ? MatchMode::kAllMatches : MatchMode::kLongestOnly;
}

TextFormat ParseFormat(const std::string& format) {
  return format == "fasta" ? TextFormat::kFasta : TextFormat::kPlain;
}

std::string Label(const std::string& source) {
  if (!std::filesystem::exists(source)) return source;
  return std::filesystem::path(source).stem().string();
}

int CmdMatch(const MatchArgs& args, std::ostream& out) {
  const LayoutVariant variant = ParseLayoutVariant(args.layout);
  const PatternSet patterns =
      WithPath(args.patterns, [&] { return ReadPatterns(args.patterns); });
  const std::string text = WithPath(args.text, [&] {
    return ReadText({ParseFormat(args.format), args.text});
  });
  const EncodedTable table = EncodeTable(BuildTrie(patterns), variant);
  const ScanPolicy policy{ParseMode(args.mode), NonDnaPolicy::kBarrier};
  const std::vector<MatchRecord> matches = ScanPfacWithLayout(
      table, text, policy, args.workers, args.chunk_bytes);
  Output sink(args.out, out);
  WriteMatches(matches, sink.stream(), args.header);
  return 0;
}

int CmdGen(const GenArgs& args, std::ostream& out) {
  std::optional<GenSpec> spec;
  if (!args.preset.empty()) {
    spec = args.kind == "patterns" ? PatternPreset(args.preset, args.seed)
                                   : TextPreset(args.preset, args.seed);
    if (!spec) {
      std::string valid;
      for (const auto& name : args.kind == "patterns" ? PatternPresetNames()
                                                      : TextPresetNames()) {
        valid += (valid.empty() ? "" : ", ") + name;
      }
      throw Error(ErrorCode::kInvalidArgument, "unknown " + args.kind +
                                                   " preset '" + args.preset +
                                                   "'; valid: " + valid);
    }
  } else {
    spec = GenSpec{};
    spec->seed = args.seed;
  }
  if (args.kind == "patterns") {
    if (args.count) spec->pattern_count = *args.count;
    if (args.length) spec->min_length = spec->max_length = *args.length;
    if (args.min_length) spec->min_length = *args.min_length;
    if (args.max_length) spec->max_length = *args.max_length;
    const PatternSet patterns = GenPatterns(*spec);
    std::ostringstream buffer;
    WritePatterns(patterns, buffer);
    WriteFile(args.out, buffer.str());
  } else {
    if (args.bytes) spec->text_length = *args.bytes;
    WriteFile(args.out, GenText(*spec));
  }
  out << args.kind << ' ' << Describe(*spec) << " out=" << args.out << '\n';
  return 0;
}

int CmdBench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  BenchConfig config;
  const std::vector<std::string> variant_names =
      args.variants.empty()
          ? std::vector<std::string>{"split+direct",  "split+staged",
                                     "merged+direct", "merged+staged",
                                     "packed+direct", "packed+staged"}
          : args.variants;
  for (const auto& name : variant_names) {
    config.variants.push_back(ParseLayoutVariant(name));
  }
  const LayoutVariant baseline = ParseLayoutVariant(args.baseline);
  config.worker_counts = args.workers;
  if (config.worker_counts.empty()) {
    config.worker_counts = {1};
    if (DefaultWorkers() > 1) config.worker_counts.push_back(DefaultWorkers());
  }
  config.repetitions = args.reps;
  config.warmup_runs = args.warmup;
  config.mode = ParseMode(args.mode);
  config.chunk_bytes = args.chunk_bytes;
  config.oracle_max_bytes = args.oracle_max_bytes;
  for (const auto& source : args.patterns) {
    if (auto spec = PatternPreset(source, args.seed)) {
      config.pattern_sets.push_back({source, GenPatterns(*spec)});
    } else {
      config.pattern_sets.push_back(
          {Label(source), WithPath(source, [&] { return ReadPatterns(source); })});
    }
  }
  for (const auto& source : args.data) {
    if (auto spec = TextPreset(source, args.seed)) {
      config.data_sets.push_back({source, GenText(*spec)});
    } else {
      config.data_sets.push_back({Label(source), WithPath(source, [&] {
                                    return ReadText(
                                        {ParseFormat(args.format), source});
                                  })});
    }
  }
  const std::vector<BenchResult> results =
      RunBench(config, [&](const BenchResult& r) {
        err << "bench " << ToString(r.variant) << " workers=" << r.workers
            << ' ' << r.pattern_set << '/' << r.data_set
            << " median_s=" << FormatDecimal(r.median_seconds, 6) << '\n';
      });
  Output sink(args.out, out);
  WriteBenchCsv(results, sink.stream());
  if (!args.report.empty()) {
    const auto rows = CompareReport(results, baseline);
    Output report(args.report, out);
    WriteComparisonCsv(rows, report.stream());
  }
  return 0;
}

int CmdInspect(const InspectArgs& args, std::ostream& out) {
  const PatternSet patterns =
      WithPath(args.patterns, [&] { return ReadPatterns(args.patterns); });
  out << InspectReport(patterns, args.dump_table, args.dump_failure);
  return 0;
}

}  // namespace

std::size_t DefaultWorkers() {
  if (const char* env = std::getenv("PFAC_DNA_WORKERS")) {
    std::size_t value = 0;
    const char* end = env + std::char_traits<char>::length(env);
    const auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec == std::errc() && ptr == end && value > 0) return value;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string InspectReport(const PatternSet& patterns, bool dump_table,
                          bool dump_failure) {
  const TransitionTable table = BuildTrie(patterns);
  std::ostringstream out;
  out << "patterns=" << patterns.size() << " states=" << table.num_states()
      << '\n';
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    StateId state = kRootState;
    for (char ch : patterns.patterns()[i]) {
      state = table.cell(state, *EncodeSymbol(ch)).next_state;
    }
    out << "pattern " << i + 1 << ' ' << patterns.patterns()[i] << " state "
        << state << '\n';
  }
  if (dump_table) {
    out << "state\tA\tT\tC\tG\n";
    for (std::size_t s = 0; s < table.num_states(); ++s) {
      out << s;
      for (std::size_t sym = 0; sym < TransitionTable::kPitch; ++sym) {
        const TransitionCell& c =
            table.cell(static_cast<StateId>(s), static_cast<DnaSymbol>(sym));
        out << "\t(" << c.next_state << ',' << c.matched_pattern_id << ')';
      }
      out << '\n';
    }
  }
  if (dump_failure) {
    const FailureAutomaton automaton = BuildFailure(table);
    for (std::size_t s = 0; s < table.num_states(); ++s) {
      out << "state " << s << ": failure=" << automaton.failure[s]
          << " outputs={";
      const auto& ids = automaton.outputs[s];
      for (std::size_t i = 0; i < ids.size(); ++i) {
        out << (i ? "," : "") << ids[i];
      }
      out << "}\n";
    }
  }
  return out.str();
}

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Multi-pattern DNA matching with failure-less Aho-Corasick",
               "pfac-dna"};
  app.footer(ExitCodeHelp());
  app.require_subcommand(1);
  const std::vector<std::string> kModes{"longest", "all"};
  const std::vector<std::string> kFormats{"plain", "fasta"};

  MatchArgs match;
  match.workers = DefaultWorkers();
  auto* match_cmd = app.add_subcommand("match", "Report pattern occurrences");
  match_cmd->add_option("patterns", match.patterns, "Pattern file")->required();
  match_cmd->add_option("text", match.text, "Input text file")->required();
  match_cmd->add_option("--format", match.format, "Input text format")
      ->check(CLI::IsMember(kFormats))
      ->capture_default_str();
  match_cmd->add_option("--mode", match.mode, "Match mode")
      ->check(CLI::IsMember(kModes))
      ->capture_default_str();
  match_cmd
      ->add_option("--layout", match.layout,
                   "Table layout and input staging: " + ValidLayoutVariants())
      ->capture_default_str();
  match_cmd
      ->add_option("--workers", match.workers,
                   "Scan threads (default $PFAC_DNA_WORKERS or core count)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  match_cmd->add_option("--chunk-bytes", match.chunk_bytes,
                        "Staging chunk size")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  match_cmd->add_option("--out", match.out, "Output path, - for stdout")
      ->capture_default_str();
  match_cmd->add_flag("--header", match.header, "Emit a TSV header line");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate synthetic data");
  gen_cmd->add_option("kind", gen.kind, "patterns or text")
      ->required()
      ->check(CLI::IsMember({"patterns", "text"}));
  gen_cmd->add_option("preset", gen.preset,
                      "ps1..ps5 for patterns; ds1..ds5, mini1..mini5 for text");
  gen_cmd->add_option("--seed", gen.seed, "PRNG seed")->capture_default_str();
  gen_cmd->add_option("--count", gen.count, "Number of patterns");
  gen_cmd->add_option("--length", gen.length, "Fixed pattern length");
  gen_cmd->add_option("--min-length", gen.min_length, "Minimum pattern length");
  gen_cmd->add_option("--max-length", gen.max_length, "Maximum pattern length");
  gen_cmd->add_option("--bytes", gen.bytes, "Text length in bytes");
  gen_cmd->add_option("--out", gen.out, "Output file")->required();

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time layout variants");
  bench_cmd->add_option("--patterns", bench.patterns,
                        "Pattern presets or files")
      ->delimiter(',')
      ->capture_default_str();
  bench_cmd->add_option("--data", bench.data, "Text presets or files")
      ->delimiter(',')
      ->capture_default_str();
  bench_cmd->add_option("--format", bench.format, "Format of text files")
      ->check(CLI::IsMember(kFormats))
      ->capture_default_str();
  bench_cmd->add_option("--variants", bench.variants,
                        "Variants (default all): " + ValidLayoutVariants())
      ->delimiter(',');
  bench_cmd->add_option("--workers", bench.workers,
                        "Worker counts (default 1 and the core count)")
      ->delimiter(',');
  bench_cmd->add_option("--reps", bench.reps, "Timed repetitions (>= 3)")
      ->capture_default_str();
  bench_cmd->add_option("--warmup", bench.warmup, "Warmup runs (>= 1)")
      ->capture_default_str();
  bench_cmd->add_option("--mode", bench.mode, "Match mode")
      ->check(CLI::IsMember(kModes))
      ->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed, "Seed for presets")
      ->capture_default_str();
  bench_cmd->add_option("--chunk-bytes", bench.chunk_bytes,
                        "Staging chunk size")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench_cmd->add_option("--oracle-max-bytes", bench.oracle_max_bytes,
                        "Check match counts with the naive scanner up to this "
                        "text size (0 disables)")
      ->capture_default_str();
  bench_cmd->add_option("--baseline", bench.baseline,
                        "Baseline variant for --report")
      ->capture_default_str();
  bench_cmd->add_option("--out", bench.out, "CSV output, - for stdout")
      ->capture_default_str();
  bench_cmd->add_option("--report", bench.report,
                        "Write a baseline comparison CSV here");

  InspectArgs inspect;
  auto* inspect_cmd =
      app.add_subcommand("inspect", "Print the automaton built from patterns");
  inspect_cmd->add_option("patterns", inspect.patterns, "Pattern file")
      ->required();
  inspect_cmd->add_flag("--dump-table", inspect.dump_table,
                        "Print the transition table");
  inspect_cmd->add_flag("--dump-failure", inspect.dump_failure,
                        "Print failure links and output sets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e, out, err);
    return status == 0 ? 0 : kUsageStatus;
  }

  try {
    if (*match_cmd) return CmdMatch(match, out);
    if (*gen_cmd) return CmdGen(gen, out);
    if (*bench_cmd) return CmdBench(bench, out, err);
    if (*inspect_cmd) return CmdInspect(inspect, out);
  } catch (const Error& e) {
    err << "pfac-dna: error: " << e.what() << '\n';
    return ExitStatus(e.code());
  } catch (const std::exception& e) {
    err << "pfac-dna: internal error: " << e.what() << '\n';
    return 1;
  }
  return kUsageStatus;
}

}  // namespace pfac
