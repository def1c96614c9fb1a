#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "mmcg/batch.hpp"
#include "testkit.hpp"

using namespace mmcg;

namespace {

  std::string const kLexicon = "le\tnp/n\nmarché\tn\nfinancier\tn\\n\nde\t(n\\n)/np\nparis\tnp\n"
                               "qu'\t(n\\n)/(s/dia1(box1(np)))\non\tnp\nemprunte\t(np\\s)/np\n"
                               "il\tnp\noccupera\t(np\\s)/np\nensuite\ts\\1 s\ndiverses\tnp/n\nfonctions\tn\n";

  std::vector<std::pair<std::size_t, std::string>> const kPaperLines{
      {1, "np\tle marché financier de paris"},
      {2, "n\\n\tqu' on emprunte"},
      {3, "il occupera ensuite diverses fonctions"},
      {4, "n\\n\tqu' il occupera ensuite"}};

  std::string tempFile(std::string const& content) {
    auto path = std::filesystem::temp_directory_path() / ("mmcg_batch_" + std::to_string(std::random_device{}()));
    std::ofstream(path) << content;
    return path.string();
  }

  std::string lastLine(std::string const& s) {
    auto t = s.substr(0, s.size() - 1);
    return t.substr(t.rfind('\n') + 1);
  }

} // namespace

TEST_CASE("coverage over the worked sentences") {
  auto lex = loadLexiconString(kLexicon);
  auto report = parseBatch(lex, kPaperLines, {});
  CHECK(report.parsed() == 4);
  CHECK(lastLine(report.format()) == "coverage: 4/4 = 100.00%");
}

TEST_CASE("one unparseable line") {
  std::string lexText = kLexicon;
  lexText.erase(lexText.find("emprunte"), std::string("emprunte\t(np\\s)/np\n").size());
  auto report = parseBatch(loadLexiconString(lexText), kPaperLines, {});
  CHECK(report.parsed() == 3);
  CHECK_FALSE(report.lines[1].ok);
  CHECK(report.lines[1].error.find("emprunte") != std::string::npos);
  auto text = report.format();
  CHECK(text.find("2\tFAIL\t") != std::string::npos);
  CHECK(lastLine(text) == "coverage: 3/4 = 75.00%");
}

TEST_CASE("empty file") {
  auto path = tempFile("");
  auto lines = readSentences(path);
  CHECK(lines.empty());
  auto report = parseBatch(loadLexiconString(kLexicon), lines, {});
  CHECK(report.format() == "coverage: 0/0 = 0.00%\n");
  std::filesystem::remove(path);
}

TEST_CASE("sentence files keep line numbers") {
  auto path = tempFile("il occupera ensuite diverses fonctions\n\n  \r\n# note\nle marché\r\n");
  auto lines = readSentences(path);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0].first == 1);
  CHECK(lines[1].first == 5);
  CHECK(lines[1].second == "le marché");
  std::filesystem::remove(path);
  CHECK_THROWS(readSentences(path));
}

TEST_CASE("bad goal prefix and budgets are per-line failures") {
  auto lex = loadLexiconString(kLexicon);
  ParseOptions opts;
  opts.limits.maxItems = 4;
  auto report = parseBatch(lex, {{1, "np/\tle marché"}, {2, "il occupera ensuite diverses fonctions"}}, opts);
  CHECK_FALSE(report.lines[0].ok);
  CHECK_FALSE(report.lines[0].error.empty());
  CHECK(report.lines[1].error == "budget exhausted");
}

TEST_CASE("parallel batch equals the serial reference") {
  auto const& lex = testkit::richLexicon();
  std::mt19937 rng(11);
  std::vector<std::pair<std::size_t, std::string>> lines;
  for (std::size_t i = 1; i <= 300; ++i) {
    auto rs = testkit::randomSentence(rng, 7);
    std::string text = printFormula(rs.goal) + "\t";
    for (auto const& w : rs.words) text += w + " ";
    lines.emplace_back(i, text);
  }
  ParseOptions opts;
  opts.limits.maxItems = 5000;
  auto par = parseBatch(lex, lines, opts);
  auto ser = parseBatchSerial(lex, lines, opts);
  CHECK(par.lines == ser.lines);
  CHECK(par.format() == ser.format());
  CHECK(par.parsed() > 0);
}
