#include "mmcg/proof.hpp"

#include <algorithm>
#include <sstream>

namespace mmcg {

  namespace {

    Derivation build(Chart const& chart, ItemId id, std::set<ItemId>& onPath) {
      if (!chart.contains(id)) throw CorruptChart("dangling premise id " + std::to_string(id));
      if (!onPath.insert(id).second) throw CorruptChart("cyclic provenance at item " + std::to_string(id));
      auto const& it = chart.item(id);
      Derivation d{id, it.provenance.rule, {}};
      auto const& ps = it.provenance.premises;
      // e_start with a licensor lists it first
      std::size_t first = it.provenance.rule == rule::EStart && ps.size() == 2 ? 1 : 0;
      for (std::size_t i = first; i < ps.size(); ++i) {
        d.children.push_back(build(chart, ps[i], onPath));
      }
      onPath.erase(id);
      return d;
    }

    void collect(Derivation const& d, std::set<ItemId>& out) {
      out.insert(d.id);
      for (auto const& c : d.children) collect(c, out);
    }

  } // namespace

  Derivation extractDerivation(Chart const& chart, ItemId goalId) {
    std::set<ItemId> onPath;
    return build(chart, goalId, onPath);
  }

  std::set<ItemId> derivationItems(Derivation const& d) {
    std::set<ItemId> out;
    collect(d, out);
    return out;
  }

  std::string justification(ChartItem const& it) {
    if (it.provenance.rule == rule::Lex) return "Lexicon";
    auto ids = it.provenance.premises;
    std::sort(ids.begin(), ids.end());
    std::string out = "From ";
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(ids[i]);
    }
    return out + " by " + it.provenance.rule;
  }

  namespace {
    // display columns, counting each UTF-8 sequence once
    std::size_t columns(std::string const& s) {
      std::size_t n = 0;
      for (unsigned char c : s) n += (c & 0xC0) != 0x80;
      return n;
    }
  } // namespace

  std::string renderTrace(Chart const& chart, bool triples) {
    std::vector<std::string> cells;
    cells.reserve(chart.size());
    std::size_t width = 10;
    for (auto const& it : chart.items()) {
      std::string c = "⟨" + printAntecedent(it.antecedent) + ", " + printFormula(it.formula) + ", " +
                      std::to_string(it.left) + ", " + std::to_string(it.right) + ", " + printExt(it.ext, triples) +
                      ", " + printStack(it.stack) + "⟩";
      width = std::max(width, columns(c));
      cells.push_back(std::move(c));
    }
    std::ostringstream out;
    auto pad = [&](std::string const& s) {
      out << s;
      for (std::size_t i = columns(s); i < width + 2; ++i) out << ' ';
    };
    out << "  id  ";
    pad("chart item");
    out << "justification\n";
    for (std::size_t i = 0; i < cells.size(); ++i) {
      auto const& it = chart.items()[i];
      std::string id = std::to_string(it.id);
      out << std::string(4 - std::min<std::size_t>(4, id.size()), ' ') << id << "  ";
      pad(cells[i]);
      out << justification(it) << '\n';
    }
    return out.str();
  }

  nlohmann::json derivationToJson(Derivation const& d) {
    nlohmann::json children = nlohmann::json::array();
    for (auto const& c : d.children) children.push_back(derivationToJson(c));
    return {{"id", d.id}, {"rule", d.rule}, {"children", std::move(children)}};
  }

  nlohmann::json itemToJson(ChartItem const& it) {
    nlohmann::json ext = nlohmann::json::array();
    for (auto const& t : it.ext)
      ext.push_back({{"licPos", t.licPos}, {"hypSite", t.hypSite}, {"formula", printFormula(t.hypFormula)},
                     {"mode", std::string(modeSuffix(t.mode))}});
    nlohmann::json stack = nlohmann::json::array();
    for (auto const& e : it.stack)
      stack.push_back({{"left", e.spanL}, {"right", e.spanR}, {"formula", printFormula(e.formula)}});
    return {{"id", it.id},
            {"formula", printFormula(it.formula)},
            {"left", it.left},
            {"right", it.right},
            {"ext", std::move(ext)},
            {"stack", std::move(stack)},
            {"weight", it.weight},
            {"sem", printTerm(it.semantics)},
            {"rule", it.provenance.rule},
            {"premises", it.provenance.premises}};
  }

  nlohmann::json parseResultToJson(ParseResult const& result) {
    nlohmann::json items = nlohmann::json::array();
    for (auto const& it : result.chart.items()) items.push_back(itemToJson(it));
    nlohmann::json derivations = nlohmann::json::array();
    for (auto g : result.goals) derivations.push_back(derivationToJson(extractDerivation(result.chart, g)));
    return {{"complete", result.complete},
            {"goal", printFormula(result.goal)},
            {"goals", result.goals},
            {"items", std::move(items)},
            {"derivations", std::move(derivations)}};
  }

} // namespace mmcg
