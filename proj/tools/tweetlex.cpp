// tweetlex: lexicon-based emotion and sentiment reports for tweet archives.
//
//   tweetlex analyze   --input tweets.jsonl --lexicon emolex.txt --out reports/
//   tweetlex subcorpus --mention narendramodi --input ... --lexicon ... --out dir/
//   tweetlex top       --what hashtags --n 40 --input ...

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "tweetlex/errors.hpp"
#include "tweetlex/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitIo = 2;
constexpr std::size_t kMaxPrintedDiagnostics = 20;

struct CommonArgs {
  std::string input = "-";
  std::string format = "jsonl";
  std::string lexicon;
  std::string stopwords;
  std::string gazetteer;
  std::string default_tz = "+05:30";
  std::string from;
  std::string to;
  unsigned threads = 1;
  bool quiet = false;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool lexicon_required) {
  cmd->add_option("--input", args.input, "Tweet file, or - for standard input")->required();
  cmd->add_option("--format", args.format, "Input format")
      ->check(CLI::IsMember({"jsonl", "csv"}))
      ->capture_default_str();
  auto* lex = cmd->add_option("--lexicon", args.lexicon, "EmoLex word-level file");
  if (lexicon_required) lex->required();
  cmd->add_option("--stopwords", args.stopwords, "Stopword list, one word per line");
  cmd->add_option("--gazetteer", args.gazetteer, "Location rules CSV (pattern,region,priority)");
  cmd->add_option("--default-tz", args.default_tz,
                  "Offset for timestamps without one; also the analysis timezone")
      ->capture_default_str();
  cmd->add_option("--from", args.from, "First local date to keep (YYYY-MM-DD)");
  cmd->add_option("--to", args.to, "Last local date to keep (YYYY-MM-DD)");
  cmd->add_option("--threads", args.threads, "Tagging workers")
      ->check(CLI::Range(1u, 1024u))
      ->capture_default_str();
  cmd->add_flag("--quiet", args.quiet, "Suppress progress output on stderr");
}

tweetlex::RunConfig to_config(const CommonArgs& args) {
  tweetlex::RunConfig config;
  config.input = args.input;
  config.format = *tweetlex::parse_input_format(args.format);
  config.lexicon = args.lexicon;
  config.stopwords = args.stopwords;
  config.gazetteer = args.gazetteer;
  config.threads = args.threads;

  const auto tz = tweetlex::parse_utc_offset(args.default_tz);
  if (!tz) throw tweetlex::LoadError(fmt::format("invalid --default-tz '{}'", args.default_tz));
  config.default_tz = *tz;
  if (!args.from.empty()) {
    config.from = tweetlex::parse_date(args.from);
    if (!config.from) throw tweetlex::LoadError(fmt::format("invalid --from '{}'", args.from));
  }
  if (!args.to.empty()) {
    config.to = tweetlex::parse_date(args.to);
    if (!config.to) throw tweetlex::LoadError(fmt::format("invalid --to '{}'", args.to));
  }

  if (!args.quiet) {
    config.on_diagnostic = [printed = std::size_t{0}](const tweetlex::Diagnostic& d) mutable {
      if (printed++ < kMaxPrintedDiagnostics) {
        std::cerr << fmt::format("line {}: skipped ({})\n", d.line, d.reason);
      } else if (printed == kMaxPrintedDiagnostics + 1) {
        std::cerr << "further skipped lines are counted in summary.json\n";
      }
    };
  }
  return config;
}

void report(const tweetlex::RunSummary& s, bool quiet) {
  if (quiet) return;
  const double rate = s.elapsed_seconds > 0 ? s.records_read / s.elapsed_seconds : 0.0;
  std::cerr << fmt::format(
      "read {} records: {} rejected, {} blank, {} tagged in {:.3f}s ({:.0f} records/s)\n",
      s.records_read, s.records_rejected, s.blanks_dropped, s.tweets_tagged, s.elapsed_seconds,
      rate);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lexicon-based emotion and sentiment analysis of tweet archives"};
  app.require_subcommand(1);

  CommonArgs analyze_args;
  std::string analyze_out;
  bool emit_tags = false;
  bool oracle = false;
  auto* analyze = app.add_subcommand("analyze", "Run the full pipeline and write all reports");
  add_common(analyze, analyze_args, true);
  analyze->add_option("--out", analyze_out, "Output directory")->required();
  analyze->add_flag("--emit-tags", emit_tags, "Also write tags.jsonl");
  analyze->add_flag("--oracle", oracle, "Use the slow single-threaded reference implementation");

  CommonArgs sub_args;
  std::string sub_out;
  std::string mention;
  auto* subcorpus = app.add_subcommand("subcorpus", "Daily series for tweets mentioning one user");
  add_common(subcorpus, sub_args, true);
  subcorpus->add_option("--mention", mention, "User handle, with or without '@'")->required();
  subcorpus->add_option("--out", sub_out, "Output directory")->required();

  CommonArgs top_args;
  std::string what;
  std::size_t n = 40;
  auto* top = app.add_subcommand("top", "Print the most frequent mentions or hashtags as CSV");
  add_common(top, top_args, false);
  top->add_option("--what", what, "mentions or hashtags")
      ->required()
      ->check(CLI::IsMember({"mentions", "hashtags"}));
  top->add_option("--n", n, "Number of entries")->check(CLI::PositiveNumber)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*analyze) {
      auto config = to_config(analyze_args);
      config.out_dir = analyze_out;
      config.emit_tags = emit_tags;
      config.oracle = oracle;
      report(tweetlex::run_analyze(config), analyze_args.quiet);
    } else if (*subcorpus) {
      auto config = to_config(sub_args);
      config.out_dir = sub_out;
      const auto summary = tweetlex::run_subcorpus(config, mention);
      report(summary, sub_args.quiet);
      if (!sub_args.quiet) {
        std::cerr << fmt::format("{} tweets mention @{}\n", summary.matched_tweets,
                                 summary.mention_filter.value_or(""));
      }
    } else if (*top) {
      const auto config = to_config(top_args);
      const auto kind =
          what == "mentions" ? tweetlex::EntityKind::mentions : tweetlex::EntityKind::hashtags;
      std::string out = "key,count\n";
      for (const auto& [key, count] : tweetlex::run_top(config, kind, n)) {
        out += fmt::format("{},{}\n", key, count);
      }
      std::fwrite(out.data(), 1, out.size(), stdout);
    }
  } catch (const tweetlex::LoadError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const tweetlex::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitOk;
}
