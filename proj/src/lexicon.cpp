#include "mmcg/lexicon.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

namespace mmcg {

  LexiconError::LexiconError(std::size_t line, std::string const& reason):
    std::runtime_error("lexicon line " + std::to_string(line) + ": " + reason), line_(line) {}

  namespace {

    std::string joinWords(std::vector<std::string> const& ws) {
      std::string out;
      for (auto const& w : ws) {
        if (!out.empty()) out += ", ";
        out += w;
      }
      return out;
    }

    std::string_view trim(std::string_view s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\r')) s.remove_prefix(1);
      while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) s.remove_suffix(1);
      return s;
    }

    std::vector<std::string_view> splitTabs(std::string_view line) {
      std::vector<std::string_view> out;
      std::size_t start = 0;
      for (;;) {
        auto tab = line.find('\t', start);
        out.push_back(trim(line.substr(start, tab == std::string_view::npos ? tab : tab - start)));
        if (tab == std::string_view::npos) return out;
        start = tab + 1;
      }
    }

  } // namespace

  UnknownWords::UnknownWords(std::vector<std::string> words):
    std::runtime_error("unknown words: " + joinWords(words)), words_(std::move(words)) {}

  void Lexicon::add(LexEntry e) {
    if (e.word.empty()) throw std::invalid_argument("lexical entry with empty word");
    auto key = e.word;
    entries_[key].push_back(std::move(e));
  }

  std::vector<LexEntry> const& Lexicon::lookup(std::string const& word) const {
    static std::vector<LexEntry> const none;
    auto it = entries_.find(word);
    return it == entries_.end() ? none : it->second;
  }

  std::size_t Lexicon::size() const noexcept {
    std::size_t n = 0;
    for (auto const& [_, v] : entries_) n += v.size();
    return n;
  }

  std::vector<Formula> Lexicon::formulas() const {
    std::vector<Formula> out;
    for (auto const& [_, v] : entries_)
      for (auto const& e : v) out.push_back(e.formula);
    return out;
  }

  Lexicon loadLexicon(std::istream& in) {
    Lexicon lex;
    std::string line;
    std::size_t lineNo = 0;
    while (std::getline(in, line)) {
      ++lineNo;
      auto body = trim(line);
      if (body.empty() || body.front() == '#') continue;
      auto cols = splitTabs(body);
      if (cols.size() < 2) throw LexiconError(lineNo, "expected word<TAB>formula");
      if (cols.size() > 4) throw LexiconError(lineNo, "too many columns");
      if (cols[0].empty()) throw LexiconError(lineNo, "empty word");
      std::string word(cols[0]);

      std::optional<Formula> f;
      try {
        f = parseFormula(cols[1]);
      } catch (FormulaSyntaxError const& e) {
        throw LexiconError(lineNo, e.what());
      }

      double weight = 0.0;
      if (cols.size() >= 3 && !cols[2].empty()) {
        auto s = cols[2];
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), weight);
        if (ec != std::errc() || ptr != s.data() + s.size())
          throw LexiconError(lineNo, "non-numeric weight '" + std::string(s) + "'");
      }

      Term sem = Term::constant(word);
      if (cols.size() == 4 && !cols[3].empty()) {
        try {
          sem = betaNormalize(parseTerm(cols[3]));
        } catch (TermSyntaxError const& e) {
          throw LexiconError(lineNo, e.what());
        } catch (ReductionBudgetExceeded const& e) {
          throw LexiconError(lineNo, e.what());
        }
      }
      lex.add(LexEntry{std::move(word), std::move(*f), weight, std::move(sem)});
    }
    return lex;
  }

  Lexicon loadLexiconString(std::string_view text) {
    std::istringstream in{std::string(text)};
    return loadLexicon(in);
  }

  Lexicon loadLexiconFile(std::string const& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open lexicon '" + path + "'");
    return loadLexicon(in);
  }

  std::vector<std::string> tokenize(std::string_view sentence) {
    std::vector<std::string> out;
    std::istringstream in{std::string(sentence)};
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
  }

  std::vector<ChartItem> lexicalItems(Lexicon const& lex, std::vector<std::string> const& sentence, int offset) {
    std::vector<std::string> unknown;
    for (auto const& w : sentence)
      if (!lex.contains(w) && std::find(unknown.begin(), unknown.end(), w) == unknown.end()) unknown.push_back(w);
    if (!unknown.empty()) throw UnknownWords(std::move(unknown));

    std::vector<ChartItem> items;
    int pos = offset;
    for (auto const& w : sentence) {
      for (auto const& e : lex.lookup(w))
        items.push_back(ChartItem{Antecedent::leaf(w), e.formula, pos, pos + 1, {}, {}, e.weight, e.semantics,
                                  Provenance{"lex", {}}, 0});
      ++pos;
    }
    return items;
  }

} // namespace mmcg
