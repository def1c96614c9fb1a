// Word to formula assignments loaded from TSV.

#ifndef MMCG_LEXICON_HPP
#define MMCG_LEXICON_HPP

#include <istream>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mmcg/formula.hpp"
#include "mmcg/item.hpp"
#include "mmcg/lambda.hpp"

namespace mmcg {

  struct LexEntry {
    std::string word;
    Formula formula;
    double weight = 0.0;
    Term semantics;
  };

  class LexiconError : public std::runtime_error {
  public:
    LexiconError(std::size_t line, std::string const& reason);
    std::size_t line() const noexcept { return line_; }
  private:
    std::size_t line_;
  };

  class UnknownWords : public std::runtime_error {
  public:
    explicit UnknownWords(std::vector<std::string> words);
    std::vector<std::string> const& words() const noexcept { return words_; }
  private:
    std::vector<std::string> words_;
  };

  class Lexicon {
  public:
    void add(LexEntry e);
    // Empty if the word is unknown.
    std::vector<LexEntry> const& lookup(std::string const& word) const;
    bool contains(std::string const& word) const { return entries_.contains(word); }
    std::size_t size() const noexcept;
    bool empty() const noexcept { return entries_.empty(); }
    std::map<std::string, std::vector<LexEntry>> const& entries() const noexcept { return entries_; }
    std::vector<Formula> formulas() const;

  private:
    std::map<std::string, std::vector<LexEntry>> entries_;
  };

  // word <TAB> formula [<TAB> weight [<TAB> lambda]]; '#' starts a comment line.
  Lexicon loadLexicon(std::istream& in);
  Lexicon loadLexiconString(std::string_view text);
  Lexicon loadLexiconFile(std::string const& path);

  std::vector<std::string> tokenize(std::string_view sentence);

  // Axioms <w_i, A_i, offset+i-1, offset+i, {}, []> for every entry of every word.
  std::vector<ChartItem> lexicalItems(Lexicon const& lex, std::vector<std::string> const& sentence, int offset = 0);

} // namespace mmcg

#endif // MMCG_LEXICON_HPP
