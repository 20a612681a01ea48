#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>

#include "fixtures.hpp"

namespace fs = std::filesystem;
using tweetlex::support::TempDir;

namespace {

const fs::path kThree = tweetlex::support::kGoldenDir / "three_tweets";

int run(const std::string& args) {
  const std::string cmd = std::string(TWEETLEX_CLI) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string common() {
  return "--input " + (kThree / "tweets.jsonl").string() + " --lexicon " +
         (kThree / "lexicon.txt").string() + " --stopwords " + (kThree / "stopwords.txt").string() +
         " --gazetteer " + (kThree / "gazetteer.csv").string();
}

}  // namespace

TEST(Cli, AnalyzeMatchesGolden) {
  TempDir dir;
  ASSERT_EQ(run("analyze " + common() + " --emit-tags --threads 4 --out " + (dir / "out").string()), 0);
  for (const auto& entry : fs::directory_iterator(kThree / "expected")) {
    const auto name = entry.path().filename();
    EXPECT_EQ(tweetlex::support::read_file(dir / "out" / name),
              tweetlex::support::read_file(entry.path()))
        << name;
  }
}

TEST(Cli, StandardInput) {
  TempDir dir;
  const std::string args = "analyze --input - --lexicon " + (kThree / "lexicon.txt").string() +
                           " --out " + (dir / "out").string() + " < " +
                           (kThree / "tweets.jsonl").string();
  EXPECT_EQ(run(args), 0);
  EXPECT_TRUE(fs::exists(dir / "out" / "summary.json"));
}

TEST(Cli, SubcorpusAndTop) {
  TempDir dir;
  EXPECT_EQ(run("subcorpus " + common() + " --mention arunjaitley --out " + (dir / "s").string()), 0);
  EXPECT_TRUE(fs::exists(dir / "s" / "daily.csv"));
  EXPECT_EQ(run("top --what hashtags --n 5 --input " + (kThree / "tweets.jsonl").string()), 0);
}

TEST(Cli, ExitCodes) {
  TempDir dir;
  const auto out = " --out " + (dir / "out").string();
  tweetlex::support::write_file(dir / "bad.txt", "glee\tjoy\t7\n");

  EXPECT_EQ(run("analyze --input x.jsonl" + out), 1);  // --lexicon missing
  EXPECT_EQ(run("frobnicate"), 1);
  EXPECT_EQ(run("analyze " + common() + " --default-tz IST" + out), 1);
  EXPECT_EQ(run("analyze " + common() + " --from 2017-13-01" + out), 1);
  EXPECT_EQ(run("analyze --input " + (kThree / "tweets.jsonl").string() + " --lexicon " +
                (dir / "bad.txt").string() + out),
            1);
  EXPECT_EQ(run("analyze --input " + (kThree / "tweets.jsonl").string() +
                " --lexicon /nonexistent/lexicon.txt" + out),
            2);
  EXPECT_EQ(run("analyze --input /nonexistent/tweets.jsonl --lexicon " +
                (kThree / "lexicon.txt").string() + out),
            2);
  tweetlex::support::write_file(dir / "file", "");
  EXPECT_EQ(run("analyze " + common() + " --out " + (dir / "file" / "sub").string()), 2);
  EXPECT_EQ(run("--help"), 0);
}
