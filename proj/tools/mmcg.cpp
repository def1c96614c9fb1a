// mmcg: parse sentences against a multimodal categorial lexicon.
//
//   mmcg parse --lexicon L.tsv --goal np "le marché financier de paris"
//   mmcg batch --lexicon L.tsv --goal s sentences.txt

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mmcg/batch.hpp"
#include "mmcg/chart.hpp"
#include "mmcg/lexicon.hpp"
#include "mmcg/proof.hpp"

namespace {

  constexpr int kParsed = 0;
  constexpr int kNoParse = 1;
  constexpr int kInputError = 2;

  struct ParseCmd {
    std::string lexicon;
    std::string goal = "s";
    std::string sentence;
    bool trace = false;
    bool json = false;
    bool semantics = false;
    bool keepAll = false;
    bool popAtVP = false;
    std::size_t itemBudget = mmcg::Limits{}.maxItems;
    std::uint64_t stepBudget = mmcg::Limits{}.maxSteps;
  };

  struct BatchCmd {
    std::string lexicon;
    std::string goal = "s";
    std::string file;
  };

  std::string weightText(double w) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", w);
    return buf;
  }

  int runParse(ParseCmd const& cmd) {
    auto lex = mmcg::loadLexiconFile(cmd.lexicon);
    mmcg::ParseOptions opts;
    opts.goal = mmcg::parseFormula(cmd.goal);
    opts.keepAllReadings = cmd.keepAll;
    opts.popAtVP = cmd.popAtVP;
    opts.limits.maxItems = cmd.itemBudget;
    opts.limits.maxSteps = cmd.stepBudget;
    auto words = mmcg::tokenize(cmd.sentence);
    if (words.empty()) throw std::invalid_argument("empty sentence");

    auto result = mmcg::parse(lex, words, opts);
    if (cmd.json) {
      std::cout << mmcg::parseResultToJson(result).dump(2) << '\n';
      return result.success() ? kParsed : kNoParse;
    }
    if (cmd.trace) {
      std::cout << "rules: " << result.rules.describe() << '\n';
      std::cout << mmcg::renderTrace(result.chart, result.rules.extract0);
    }
    if (!result.complete) std::cout << "budget exhausted after " << result.steps << " steps\n";
    if (!result.success()) {
      std::cout << "no parse\n";
      return kNoParse;
    }
    for (auto id : result.goals) {
      auto const& it = result.chart.item(id);
      std::cout << "goal " << id << ": " << mmcg::printFormula(it.formula) << ' ' << it.left << '-' << it.right
                << " weight " << weightText(it.weight);
      if (cmd.semantics) std::cout << "  " << mmcg::printTerm(it.semantics);
      std::cout << '\n';
    }
    return kParsed;
  }

  int runBatch(BatchCmd const& cmd) {
    auto lex = mmcg::loadLexiconFile(cmd.lexicon);
    mmcg::ParseOptions opts;
    opts.goal = mmcg::parseFormula(cmd.goal);
    auto report = mmcg::parseBatch(lex, mmcg::readSentences(cmd.file), opts);
    std::cout << report.format();
    return 0;
  }

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"chart parser for multimodal categorial grammar"};
  app.require_subcommand(1);

  ParseCmd pc;
  auto* parse = app.add_subcommand("parse", "parse one sentence");
  parse->add_option("--lexicon", pc.lexicon, "TSV lexicon")->required();
  parse->add_option("--goal", pc.goal, "goal formula")->capture_default_str();
  parse->add_flag("--trace", pc.trace, "print the active rules and the chart");
  parse->add_flag("--json", pc.json, "print the chart and derivations as JSON");
  parse->add_flag("--semantics", pc.semantics, "print goal semantics");
  parse->add_flag("--keep-all-readings", pc.keepAll, "keep same-key items with distinct semantics");
  parse->add_flag("--pop-at-vp", pc.popAtVP, "allow wpop below the sentence level");
  parse->add_option("--item-budget", pc.itemBudget)->check(CLI::PositiveNumber)->capture_default_str();
  parse->add_option("--step-budget", pc.stepBudget)->check(CLI::PositiveNumber)->capture_default_str();
  parse->add_option("sentence", pc.sentence, "whitespace-separated words")->required();

  BatchCmd bc;
  auto* batch = app.add_subcommand("batch", "coverage over a file of sentences");
  batch->add_option("--lexicon", bc.lexicon, "TSV lexicon")->required();
  batch->add_option("--goal", bc.goal, "goal formula")->capture_default_str();
  batch->add_option("file", bc.file, "one sentence per line")->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kInputError;
  }

  try {
    if (*parse) return runParse(pc);
    return runBatch(bc);
  } catch (mmcg::UnknownWords const& e) {
    std::cerr << "mmcg: " << e.what() << '\n';
  } catch (std::exception const& e) {
    std::cerr << "mmcg: " << e.what() << '\n';
  }
  return kInputError;
}
