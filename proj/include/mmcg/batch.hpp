// Coverage runs over many sentences. Each sentence gets its own engine over the shared,
// read-only lexicon; parseBatch spreads them over OpenMP threads, parseBatchSerial is the
// single-threaded reference.

#ifndef MMCG_BATCH_HPP
#define MMCG_BATCH_HPP

#include <string>
#include <vector>

#include "mmcg/chart.hpp"
#include "mmcg/lexicon.hpp"

namespace mmcg {

  struct BatchLine {
    std::size_t lineNo;     // 1-based
    std::string sentence;
    bool ok = false;
    std::size_t goalCount = 0;
    std::size_t chartSize = 0;
    std::string error;      // unknown words, budget exhaustion, ...

    friend bool operator==(BatchLine const&, BatchLine const&) = default;
  };

  struct BatchReport {
    std::vector<BatchLine> lines;

    std::size_t parsed() const noexcept;
    std::size_t total() const noexcept { return lines.size(); }
    // OK/FAIL per line followed by "coverage: k/n = p%"
    std::string format() const;
  };

  // Non-empty lines of the file. Blank lines and '#' comments are skipped; line numbers are kept.
  // A line may start with "GOAL<TAB>" to parse that sentence against its own goal.
  std::vector<std::pair<std::size_t, std::string>> readSentences(std::string const& path);

  BatchReport parseBatch(Lexicon const& lex, std::vector<std::pair<std::size_t, std::string>> const& sentences,
                         ParseOptions const& opts);
  BatchReport parseBatchSerial(Lexicon const& lex, std::vector<std::pair<std::size_t, std::string>> const& sentences,
                               ParseOptions const& opts);

} // namespace mmcg

#endif // MMCG_BATCH_HPP
