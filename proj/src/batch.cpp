#include "mmcg/batch.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string_view>

namespace mmcg {

  namespace {

    BatchLine parseLine(Lexicon const& lex, std::size_t lineNo, std::string const& sentence,
                        ParseOptions const& opts) {
      BatchLine out;
      out.lineNo = lineNo;
      out.sentence = sentence;
      try {
        // "GOAL<TAB>words" overrides the batch goal for this line
        std::string_view text = sentence;
        ParseOptions local = opts;
        if (auto tab = text.find('\t'); tab != std::string_view::npos) {
          local.goal = parseFormula(text.substr(0, tab));
          text.remove_prefix(tab + 1);
        }
        auto words = tokenize(text);
        if (words.empty()) {
          out.error = "empty sentence";
          return out;
        }
        auto result = parse(lex, words, local);
        out.ok = result.success();
        out.goalCount = result.goals.size();
        out.chartSize = result.chart.size();
        if (!result.complete) out.error = "budget exhausted";
      } catch (std::exception const& e) {
        out.error = e.what();
      }
      return out;
    }

  } // namespace

  std::size_t BatchReport::parsed() const noexcept {
    std::size_t n = 0;
    for (auto const& l : lines) n += l.ok ? 1 : 0;
    return n;
  }

  std::string BatchReport::format() const {
    std::ostringstream out;
    for (auto const& l : lines) {
      out << l.lineNo << '\t' << (l.ok ? "OK" : "FAIL") << '\t' << l.sentence;
      if (!l.error.empty()) out << "\t(" << l.error << ')';
      out << '\n';
    }
    char pct[32];
    double p = total() ? 100.0 * static_cast<double>(parsed()) / static_cast<double>(total()) : 0.0;
    std::snprintf(pct, sizeof pct, "%.2f", p);
    out << "coverage: " << parsed() << '/' << total() << " = " << pct << "%\n";
    return out.str();
  }

  std::vector<std::pair<std::size_t, std::string>> readSentences(std::string const& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open sentence file '" + path + "'");
    std::vector<std::pair<std::size_t, std::string>> out;
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
      ++n;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      auto first = line.find_first_not_of(" \t");
      if (first == std::string::npos || line[first] == '#') continue;
      out.emplace_back(n, line);
    }
    return out;
  }

  BatchReport parseBatch(Lexicon const& lex, std::vector<std::pair<std::size_t, std::string>> const& sentences,
                         ParseOptions const& opts) {
    BatchReport report;
    report.lines.resize(sentences.size());
    auto const n = static_cast<long>(sentences.size());
    // sentence lengths vary wildly, so hand out lines one at a time
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < n; ++i) {
      auto const& [lineNo, text] = sentences[static_cast<std::size_t>(i)];
      report.lines[static_cast<std::size_t>(i)] = parseLine(lex, lineNo, text, opts);
    }
    return report;
  }

  BatchReport parseBatchSerial(Lexicon const& lex, std::vector<std::pair<std::size_t, std::string>> const& sentences,
                               ParseOptions const& opts) {
    BatchReport report;
    for (auto const& [lineNo, text] : sentences) report.lines.push_back(parseLine(lex, lineNo, text, opts));
    return report;
  }

} // namespace mmcg
