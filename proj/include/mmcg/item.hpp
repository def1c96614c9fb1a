// Chart items: antecedent terms, extraction sets and wrap stacks.

#ifndef MMCG_ITEM_HPP
#define MMCG_ITEM_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mmcg/formula.hpp"
#include "mmcg/lambda.hpp"

namespace mmcg {

  // Binary tree of words with mode-annotated nodes.
  class Antecedent {
  public:
    static Antecedent leaf(std::string word);
    static Antecedent node(Mode mode, Antecedent left, Antecedent right);

    bool isLeaf() const noexcept;
    std::string const& word() const;
    Mode mode() const;
    Antecedent const& left() const;
    Antecedent const& right() const;

    struct Node;

  private:
    explicit Antecedent(std::shared_ptr<Node const> n): node_(std::move(n)) {}
    std::shared_ptr<Node const> node_;
  };

  // Left-to-right leaf sequence.
  std::vector<std::string> yieldOf(Antecedent const& a);
  // il∘((occupera∘1ensuite)∘(diverses∘fonctions))
  std::string printAntecedent(Antecedent const& a);

  // A pending hypothesis. `licPos` is the right edge of the licensor, `hypSite` the right edge of
  // the functor the hypothesis was fed to. Peripheral m0 hypotheses (leftward licensors, goal
  // withdrawal) have no licensor position yet and record licPos == hypSite.
  struct ExtractionTag {
    int licPos;
    int hypSite;
    Formula hypFormula;
    Mode mode;

    bool peripheral() const noexcept { return licPos == hypSite; }
    bool sameKey(ExtractionTag const& o) const noexcept {
      return licPos == o.licPos && mode == o.mode && hypFormula == o.hypFormula;
    }
    friend bool operator==(ExtractionTag const&, ExtractionTag const&) = default;
    friend auto operator<=>(ExtractionTag const& a, ExtractionTag const& b) noexcept {
      if (auto c = a.licPos <=> b.licPos; c != 0) return c;
      if (auto c = a.hypFormula <=> b.hypFormula; c != 0) return c;
      if (auto c = a.mode <=> b.mode; c != 0) return c;
      return a.hypSite <=> b.hypSite;
    }
  };

  // Set of tags, at most one per (licPos, hypFormula, mode). Kept sorted.
  class ExtractionSet {
  public:
    ExtractionSet() = default;

    bool empty() const noexcept { return tags_.empty(); }
    std::size_t size() const noexcept { return tags_.size(); }
    auto begin() const noexcept { return tags_.begin(); }
    auto end() const noexcept { return tags_.end(); }

    bool containsKey(ExtractionTag const& t) const noexcept;
    // false if a tag with the same key is present
    bool insert(ExtractionTag t);
    ExtractionSet without(ExtractionTag const& t) const;

    friend bool operator==(ExtractionSet const&, ExtractionSet const&) = default;

  private:
    std::vector<ExtractionTag> tags_;
  };

  // Defined only if the key sets are disjoint.
  std::optional<ExtractionSet> disjointUnion(ExtractionSet const& a, ExtractionSet const& b);

  struct WrapEntry {
    int spanL, spanR;
    Formula formula;   // X\1 X
    Term semantics;

    bool sameEntry(WrapEntry const& o) const noexcept {
      return spanL == o.spanL && spanR == o.spanR && formula == o.formula;
    }
  };

  // Front is the top of the stack.
  using WrapStack = std::vector<WrapEntry>;

  WrapStack concat(WrapStack const& a, WrapStack const& b);

  using ItemId = int;

  struct Provenance {
    std::string rule;                 // "lex" for lexical items
    std::vector<ItemId> premises;     // in the rule's premise order
  };

  struct ChartItem {
    Antecedent antecedent;
    Formula formula;
    int left = 0, right = 0;
    ExtractionSet ext;
    WrapStack stack;
    double weight = 0.0;
    Term semantics;
    Provenance provenance;
    ItemId id = 0;   // 0 while on the agenda
  };

  // Every licensor-anchored tag has licPos <= left.
  bool checkCoherence(ChartItem const& it);
  // Every m0 tag sits on the right periphery (hypSite == right).
  bool checkRightPeriphery(ChartItem const& it);

  // Canonical text of the don't-care-free part of an item: formula, span, ext, stack.
  std::string subsumptionKey(ChartItem const& it);

  std::string printExt(ExtractionSet const& e, bool triples);
  std::string printStack(WrapStack const& s);

} // namespace mmcg

#endif // MMCG_ITEM_HPP
