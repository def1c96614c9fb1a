// Batch parsing throughput: OpenMP over sentences versus the serial reference.

#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "mmcg/batch.hpp"

namespace {

  constexpr char const* kLexicon =
      "le\tnp/n\nla\tnp/n\nmarché\tn\nbanque\tn\nfinancier\tn\\n\ncentrale\tn\\n\n"
      "de\t(n\\n)/np\nde\t((np\\s)\\(np\\s))/np\nparis\tnp\nlondres\tnp\n"
      "qu'\t(n\\n)/(s/dia1(box1(np)))\non\tnp\nil\tnp\nemprunte\t(np\\s)/np\noccupera\t(np\\s)/np\n"
      "ensuite\ts\\1 s\ndiverses\tnp/n\nfonctions\tn\n";

  // Clauses with stacked prepositional phrases, relative clauses and adverbs; attachment
  // ambiguity makes chart sizes grow quickly with length.
  std::vector<std::pair<std::size_t, std::string>> corpus(std::size_t n) {
    std::mt19937 rng(42);
    std::vector<std::string> const nps{"le marché", "la banque centrale", "diverses fonctions", "paris", "londres"};
    std::vector<std::pair<std::size_t, std::string>> out;
    for (std::size_t i = 0; i < n; ++i) {
      std::string s = "il occupera";
      if (rng() % 2) s += " ensuite";
      s += " " + nps[rng() % nps.size()];
      for (unsigned k = rng() % 6; k > 0; --k) s += " de " + nps[rng() % nps.size()];
      if (rng() % 3 == 0) s += " qu' on emprunte";
      out.emplace_back(i + 1, s);
    }
    return out;
  }

  template <auto Run>
  void batch(benchmark::State& state) {
    auto lex = mmcg::loadLexiconString(kLexicon);
    auto lines = corpus(static_cast<std::size_t>(state.range(0)));
    mmcg::ParseOptions opts;
    std::size_t parsed = 0;
    for (auto _ : state) {
      auto report = Run(lex, lines, opts);
      parsed = report.parsed();
      benchmark::DoNotOptimize(parsed);
    }
    state.counters["parsed"] = static_cast<double>(parsed);
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
  }

} // namespace

BENCHMARK(batch<mmcg::parseBatchSerial>)->Name("serial")->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(batch<mmcg::parseBatch>)->Name("openmp")->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
