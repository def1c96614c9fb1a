// The agenda-driven deductive parsing engine.

#ifndef MMCG_CHART_HPP
#define MMCG_CHART_HPP

#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "mmcg/item.hpp"
#include "mmcg/lexicon.hpp"
#include "mmcg/rules.hpp"

namespace mmcg {

  enum class InsertOutcome { Added, Replaced, Rejected };

  // Chart residents (ids 1..n in insertion order) plus the FIFO agenda of pending items.
  //
  // Subsumption: an incoming item whose key (formula, span, ext, stack) is already present,
  // in the chart or on the agenda, is rejected unless it has strictly higher weight, in which
  // case it takes over the incumbent's slot. With `keepAllReadings` two items with the same key
  // coexist unless their semantics are alpha-equivalent.
  class Chart {
  public:
    explicit Chart(int leftmost = 0, int rightmost = 0, bool keepAllReadings = false);

    InsertOutcome insert(ChartItem item);

    bool agendaEmpty() const noexcept { return agenda_.empty(); }
    std::size_t agendaSize() const noexcept { return agenda_.size(); }

    // Moves the front of the agenda into the chart (or re-queues a replaced resident) and
    // returns the id whose consequences must be computed.
    ItemId promote();

    ChartItem const& item(ItemId id) const { return items_.at(static_cast<std::size_t>(id - 1)); }
    std::vector<ChartItem> const& items() const noexcept { return items_; }
    std::size_t size() const noexcept { return items_.size(); }
    bool contains(ItemId id) const noexcept { return id >= 1 && static_cast<std::size_t>(id) <= items_.size(); }

    // Residents starting / ending at a string position.
    std::vector<ItemId> const& startingAt(int pos) const;
    std::vector<ItemId> const& endingAt(int pos) const;

    int leftmost() const noexcept { return leftmost_; }
    int rightmost() const noexcept { return rightmost_; }

    // Items created so far, chart plus agenda.
    std::size_t totalItems() const noexcept { return items_.size() + pendingLive_; }

  private:
    struct Slot {
      bool inChart;
      std::size_t index;   // chart index (id - 1) or pending pool index
    };
    // pending pool index, or the id of a replaced resident to re-propagate
    using AgendaEntry = std::variant<std::size_t, ItemId>;

    ChartItem& slotItem(Slot const& s);

    int leftmost_, rightmost_;
    bool keepAll_;
    std::vector<ChartItem> items_;
    std::vector<std::optional<ChartItem>> pending_;
    std::size_t pendingLive_ = 0;
    std::deque<AgendaEntry> agenda_;
    std::unordered_map<std::string, std::vector<Slot>> keys_;
    std::vector<std::vector<ItemId>> byLeft_, byRight_;
  };

  struct Limits {
    std::size_t maxItems = 100000;
    std::uint64_t maxSteps = 10'000'000;
  };

  struct ParseResult {
    bool complete = true;          // false when a budget stopped the agenda
    std::vector<ItemId> goals;
    Chart chart;
    RuleSet rules;
    Formula goal;
    std::uint64_t steps = 0;
    std::size_t rejected = 0;
    std::size_t replaced = 0;

    bool success() const noexcept { return !goals.empty(); }
  };

  // Exhausts the agenda starting from the lexical items. Goal items are <_, goal, L, R, {}, []>
  // with L, R the outermost positions of the input.
  ParseResult run(std::vector<ChartItem> const& lexItems, RuleSet const& rules, Formula const& goal,
                  Limits const& limits = {}, bool keepAllReadings = false);

  struct ParseOptions {
    Formula goal = Formula::atom("s");
    bool keepAllReadings = false;
    bool popAtVP = false;
    Limits limits;
    int offset = 0;
    // Replaces the scanned rule set when given (popAtVP is still applied).
    std::optional<RuleSet> rules;
  };

  // Lexical lookup, trigger scanning and run(). Throws UnknownWords.
  ParseResult parse(Lexicon const& lex, std::vector<std::string> const& sentence, ParseOptions const& opts = {});

} // namespace mmcg

#endif // MMCG_CHART_HPP
