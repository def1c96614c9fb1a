#include "mmcg/item.hpp"

#include <algorithm>
#include <stdexcept>

namespace mmcg {

  struct Antecedent::Node {
    std::string word;
    Mode mode = Mode::Main;
    std::vector<Antecedent> kids;
  };

  Antecedent Antecedent::leaf(std::string word) {
    return Antecedent(std::make_shared<Node const>(Node{std::move(word), Mode::Main, {}}));
  }

  Antecedent Antecedent::node(Mode mode, Antecedent left, Antecedent right) {
    return Antecedent(std::make_shared<Node const>(Node{{}, mode, {std::move(left), std::move(right)}}));
  }

  bool Antecedent::isLeaf() const noexcept { return node_->kids.empty(); }
  std::string const& Antecedent::word() const { return node_->word; }
  Mode Antecedent::mode() const { return node_->mode; }
  Antecedent const& Antecedent::left() const { return node_->kids.at(0); }
  Antecedent const& Antecedent::right() const { return node_->kids.at(1); }

  namespace {

    void collectYield(Antecedent const& a, std::vector<std::string>& out) {
      if (a.isLeaf()) { out.push_back(a.word()); return; }
      collectYield(a.left(), out);
      collectYield(a.right(), out);
    }

    void printAnt(Antecedent const& a, std::string& out, bool nested) {
      if (a.isLeaf()) { out += a.word(); return; }
      if (nested) out += '(';
      printAnt(a.left(), out, true);
      out += "∘";
      out += modeSuffix(a.mode());
      printAnt(a.right(), out, true);
      if (nested) out += ')';
    }

  } // namespace

  std::vector<std::string> yieldOf(Antecedent const& a) {
    std::vector<std::string> out;
    collectYield(a, out);
    return out;
  }

  std::string printAntecedent(Antecedent const& a) {
    std::string out;
    printAnt(a, out, false);
    return out;
  }

  bool ExtractionSet::containsKey(ExtractionTag const& t) const noexcept {
    return std::any_of(tags_.begin(), tags_.end(), [&](auto const& x) { return x.sameKey(t); });
  }

  bool ExtractionSet::insert(ExtractionTag t) {
    if (containsKey(t)) return false;
    tags_.insert(std::upper_bound(tags_.begin(), tags_.end(), t), std::move(t));
    return true;
  }

  ExtractionSet ExtractionSet::without(ExtractionTag const& t) const {
    ExtractionSet r;
    for (auto const& x : tags_)
      if (!(x == t)) r.tags_.push_back(x);
    return r;
  }

  std::optional<ExtractionSet> disjointUnion(ExtractionSet const& a, ExtractionSet const& b) {
    ExtractionSet r = a;
    for (auto const& t : b)
      if (!r.insert(t)) return std::nullopt;
    return r;
  }

  WrapStack concat(WrapStack const& a, WrapStack const& b) {
    WrapStack r;
    r.reserve(a.size() + b.size());
    r.insert(r.end(), a.begin(), a.end());
    r.insert(r.end(), b.begin(), b.end());
    return r;
  }

  bool checkCoherence(ChartItem const& it) {
    return std::all_of(it.ext.begin(), it.ext.end(),
                       [&](ExtractionTag const& t) { return t.peripheral() || t.licPos <= it.left; });
  }

  bool checkRightPeriphery(ChartItem const& it) {
    return std::all_of(it.ext.begin(), it.ext.end(),
                       [&](ExtractionTag const& t) { return t.mode != Mode::M0 || t.hypSite == it.right; });
  }

  std::string printExt(ExtractionSet const& e, bool triples) {
    std::string out = "{";
    bool first = true;
    for (auto const& t : e) {
      if (!first) out += ',';
      first = false;
      out += std::to_string(t.licPos);
      if (triples) out += '-' + std::to_string(t.hypSite);
      out += '-';
      out += printFormula(t.hypFormula);
    }
    return out + "}";
  }

  std::string printStack(WrapStack const& s) {
    std::string out = "[";
    bool first = true;
    for (auto const& e : s) {
      if (!first) out += ',';
      first = false;
      out += std::to_string(e.spanL) + ',' + std::to_string(e.spanR) + '-' + printFormula(e.formula);
    }
    return out + "]";
  }

  std::string subsumptionKey(ChartItem const& it) {
    std::string k = printFormula(it.formula);
    k += '|';
    k += std::to_string(it.left) + ',' + std::to_string(it.right);
    k += '|';
    // hypSite is not part of the key: m1 discharge ignores it and m0 tags always sit at `right`
    for (auto const& t : it.ext) {
      k += std::to_string(t.licPos) + '-' + printFormula(t.hypFormula);
      k += modeSuffix(t.mode);
      k += ';';
    }
    k += '|';
    k += printStack(it.stack);
    return k;
  }

} // namespace mmcg
