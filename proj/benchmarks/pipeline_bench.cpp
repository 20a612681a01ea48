#include <benchmark/benchmark.h>

#include <set>
#include <sstream>

#include "corpus.hpp"
#include "fixtures.hpp"
#include "tweetlex/pipeline.hpp"

using namespace tweetlex;

namespace {

// A lexicon the size of the public EmoLex word list, with random words.
struct Workload {
  Resources res;
  std::vector<TweetRecord> records;

  Workload() {
    static const std::array<const char*, 10> cats = {"anger", "anticipation", "disgust", "fear", "joy",
                                                     "negative", "positive", "sadness", "surprise", "trust"};
    support::Rng rng(1);
    std::set<std::string> unique;
    while (unique.size() < 14182) {
      std::string w;
      const auto len = 4 + support::uniform(rng, 7);
      for (std::size_t i = 0; i < len; ++i) w.push_back(static_cast<char>('a' + support::uniform(rng, 26)));
      unique.insert(w);
    }
    std::string text;
    for (const auto& w : unique) {
      for (const char* c : cats) text += w + "\t" + c + "\t" + (support::uniform(rng, 8) == 0 ? "1" : "0") + "\n";
    }
    std::istringstream in(text);
    res.lexicon = Lexicon::parse(in);
    res.stopwords = Stopwords::load(support::kDataDir / "stopwords.txt");
    res.gazetteer = Gazetteer::load(support::kDataDir / "gazetteer.csv");
    const std::vector<std::string> vocabulary(unique.begin(), std::next(unique.begin(), 3000));
    records = support::make_random_corpus(2, 50000, vocabulary);
  }
};

const Workload& workload() {
  static const Workload w;
  return w;
}

void BM_Preprocess(benchmark::State& state) {
  const auto& w = workload();
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(preprocess(w.records[i], w.res.stopwords));
    i = (i + 1) % w.records.size();
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Preprocess);

void BM_PreprocessAndTag(benchmark::State& state) {
  const auto& w = workload();
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tag_tweet(preprocess(w.records[i], w.res.stopwords), w.res.lexicon));
    i = (i + 1) % w.records.size();
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_PreprocessAndTag);

void BM_AnalyzeRecords(benchmark::State& state) {
  const auto& w = workload();
  AnalyzeOptions opt;
  opt.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(analyze_records(w.records, w.res, opt));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(w.records.size()));
}
BENCHMARK(BM_AnalyzeRecords)->Arg(1)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
