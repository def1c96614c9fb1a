#include "mmcg/chart.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace mmcg {

  Chart::Chart(int leftmost, int rightmost, bool keepAllReadings):
    leftmost_(leftmost), rightmost_(rightmost), keepAll_(keepAllReadings),
    byLeft_(static_cast<std::size_t>(rightmost + 1)), byRight_(static_cast<std::size_t>(rightmost + 1)) {}

  ChartItem& Chart::slotItem(Slot const& s) {
    return s.inChart ? items_[s.index] : *pending_[s.index];
  }

  InsertOutcome Chart::insert(ChartItem item) {
    auto& slots = keys_[subsumptionKey(item)];
    for (auto const& s : slots) {
      auto& existing = slotItem(s);
      if (keepAll_ && !alphaEqual(existing.semantics, item.semantics)) continue;
      if (item.weight <= existing.weight) return InsertOutcome::Rejected;
      if (s.inChart) {
        item.id = existing.id;
        existing = std::move(item);
        agenda_.emplace_back(existing.id);
      } else {
        existing = std::move(item);
      }
      return InsertOutcome::Replaced;
    }
    item.id = 0;
    slots.push_back(Slot{false, pending_.size()});
    pending_.emplace_back(std::move(item));
    agenda_.emplace_back(pending_.size() - 1);
    ++pendingLive_;
    return InsertOutcome::Added;
  }

  ItemId Chart::promote() {
    if (agenda_.empty()) throw std::logic_error("promote on empty agenda");
    auto entry = agenda_.front();
    agenda_.pop_front();
    if (auto const* id = std::get_if<ItemId>(&entry)) return *id;

    auto idx = std::get<std::size_t>(entry);
    ChartItem it = std::move(*pending_[idx]);
    pending_[idx].reset();
    --pendingLive_;
    it.id = static_cast<ItemId>(items_.size() + 1);
    auto& slots = keys_[subsumptionKey(it)];
    for (auto& s : slots)
      if (!s.inChart && s.index == idx) s = Slot{true, items_.size()};
    auto l = static_cast<std::size_t>(it.left), r = static_cast<std::size_t>(it.right);
    if (r >= byLeft_.size()) {
      byLeft_.resize(r + 1);
      byRight_.resize(r + 1);
    }
    byLeft_[l].push_back(it.id);
    byRight_[r].push_back(it.id);
    items_.push_back(std::move(it));
    return items_.back().id;
  }

  std::vector<ItemId> const& Chart::startingAt(int pos) const {
    static std::vector<ItemId> const none;
    if (pos < 0 || static_cast<std::size_t>(pos) >= byLeft_.size()) return none;
    return byLeft_[static_cast<std::size_t>(pos)];
  }

  std::vector<ItemId> const& Chart::endingAt(int pos) const {
    static std::vector<ItemId> const none;
    if (pos < 0 || static_cast<std::size_t>(pos) >= byRight_.size()) return none;
    return byRight_[static_cast<std::size_t>(pos)];
  }

  namespace {

    class Engine {
    public:
      Engine(RuleSet const& rules, Formula goal, Limits limits, int leftmost, int rightmost, bool keepAll):
        chart_(leftmost, rightmost, keepAll), rules_(rules), ctx_{rules_, vars_}, goal_(std::move(goal)),
        limits_(limits) {}

      ParseResult run(std::vector<ChartItem> const& lexItems) {
        for (auto const& it : lexItems) chart_.insert(it);
        while (!chart_.agendaEmpty()) {
          if (steps_ >= limits_.maxSteps || chart_.totalItems() > limits_.maxItems) {
            stopped_ = true;
            break;
          }
          ItemId id = chart_.promote();
          if (static_cast<std::size_t>(id) > registered_) {
            registered_ = static_cast<std::size_t>(id);
            registerItem(id);
          }
          consequences(chart_.item(id));
        }

        std::vector<ItemId> goals;
        for (auto const& it : chart_.items())
          if (it.formula == goal_ && it.left == chart_.leftmost() && it.right == chart_.rightmost() &&
              it.ext.empty() && it.stack.empty())
            goals.push_back(it.id);
        return ParseResult{!stopped_, std::move(goals), std::move(chart_), rules_, goal_, steps_, rejected_,
                           replaced_};
      }

    private:
      struct DemandRef {
        ItemId id;
        Formula product;
      };

      Chart chart_;
      RuleSet rules_;
      FreshVars vars_;
      RuleContext ctx_;
      Formula goal_;
      Limits limits_;
      std::uint64_t steps_ = 0;
      std::size_t rejected_ = 0, replaced_ = 0;
      bool stopped_ = false;
      std::size_t registered_ = 0;
      std::vector<ItemId> licensors_;
      // products that must start at / end at a position
      std::map<int, std::vector<DemandRef>> startDemands_, endDemands_;

      ChartItem const& at(ItemId id) const { return chart_.item(id); }

      void registerItem(ItemId id) {
        auto const& it = at(id);
        if (auto m = matchExtractionLicensor(it.formula); m && m->orientation == Orientation::Rightward)
          licensors_.push_back(id);
        if (rules_.product)
          for (auto const& d : productDemands(it)) {
            auto& bucket = d.side == ProductDemand::Side::Right ? startDemands_[d.position] : endDemands_[d.position];
            bucket.push_back(DemandRef{id, d.product});
          }
      }

      bool modeActive(Mode m) const { return m == Mode::M1 ? rules_.extract1 : rules_.extract0; }

      void emit(MaybeItem item) {
        ++steps_;
        if (!item) return;
        if (!checkCoherence(*item) || !checkRightPeriphery(*item)) {
          ++rejected_;
          return;
        }
        switch (chart_.insert(std::move(*item))) {
          case InsertOutcome::Added: break;
          case InsertOutcome::Replaced: ++replaced_; break;
          case InsertOutcome::Rejected: ++rejected_; break;
        }
      }

      // Computes every consequence of `x` (a copy: replacement may overwrite the resident) with
      // the items already in the chart.
      void consequences(ChartItem x) {
        int const L = x.left, R = x.right;
        auto const& fml = x.formula;

        // /E and \E
        if (fml.isSlash(Dir::Forward, Mode::Main))
          for (auto a : chart_.startingAt(R)) emit(ruleFE(ctx_, x, at(a)));
        for (auto f : chart_.endingAt(L)) emit(ruleFE(ctx_, at(f), x));
        for (auto f : chart_.startingAt(R)) emit(ruleBsE(ctx_, x, at(f)));
        if (fml.isSlash(Dir::Backward, Mode::Main))
          for (auto a : chart_.endingAt(L)) emit(ruleBsE(ctx_, at(a), x));

        if (rules_.extract1 || rules_.extract0) extraction(x);

        if (rules_.wrap) {
          for (auto adv : chart_.startingAt(R)) emit(ruleWr(ctx_, x, at(adv)));
          if (fml.isModifier(Mode::M1))
            for (auto h : chart_.endingAt(L)) emit(ruleWr(ctx_, at(h), x));
          emit(ruleWpop(ctx_, x));
        }

        if (rules_.product) products(x);

        if (rules_.lnr && fml.isModifier(Mode::Main)) {
          for (auto m2 : chart_.startingAt(R)) emit(ruleLnr(ctx_, x, at(m2)));
          for (auto m1 : chart_.endingAt(L)) emit(ruleLnr(ctx_, at(m1), x));
        }

        if (rules_.qspeech) quotedSpeech(x);
      }

      void extraction(ChartItem const& x) {
        int const L = x.left, R = x.right;
        auto lic = matchExtractionLicensor(x.formula);

        // e_start, x as the functor
        if (x.formula.isSlash(Dir::Forward, Mode::Main)) {
          for (auto l : licensors_) {
            auto const& li = at(l);
            if (li.right > L) continue;
            auto m = matchExtractionLicensor(li.formula);
            if (modeActive(m->mode)) emit(ruleEStart(ctx_, li, x, m->mode));
          }
          if (rules_.extract0)
            for (auto const& b : rules_.peripheralHyps) emit(ruleEStartPeripheral(ctx_, x, b));
        }
        // e_start, x as the licensor
        if (lic && lic->orientation == Orientation::Rightward && modeActive(lic->mode))
          for (int p = R; p <= chart_.rightmost(); ++p)
            for (auto f : chart_.startingAt(p)) emit(ruleEStart(ctx_, x, at(f), lic->mode));

        // e_end
        if (lic && lic->orientation == Orientation::Rightward && modeActive(lic->mode))
          for (auto y : chart_.startingAt(R)) emit(ruleEEnd(ctx_, x, at(y), lic->mode));
        if (!x.ext.empty() && x.stack.empty())
          for (auto l : chart_.endingAt(L)) {
            auto m = matchExtractionLicensor(at(l).formula);
            if (m && m->orientation == Orientation::Rightward && modeActive(m->mode))
              emit(ruleEEnd(ctx_, at(l), x, m->mode));
          }

        if (rules_.extract0) {
          if (!x.ext.empty() && x.stack.empty())
            for (auto l : chart_.startingAt(R)) emit(ruleEEndLeft(ctx_, x, at(l)));
          if (lic && lic->orientation == Orientation::Leftward)
            for (auto y : chart_.endingAt(L)) emit(ruleEEndLeft(ctx_, at(y), x));
        }

        if (rules_.withdrawGoal) emit(ruleWithdraw(ctx_, x, *rules_.withdrawGoal));
      }

      void products(ChartItem const& x) {
        int const L = x.left, R = x.right;
        auto demandsAt = [](std::map<int, std::vector<DemandRef>> const& m, int pos) -> std::vector<DemandRef> {
          auto it = m.find(pos);
          return it == m.end() ? std::vector<DemandRef>{} : it->second;
        };

        // x as the item waiting for a product
        for (auto const& d : productDemands(x)) {
          if (d.side == ProductDemand::Side::Right) {
            for (auto l : chart_.startingAt(d.position))
              for (auto r : chart_.startingAt(at(l).right)) emit(ruleProdI(ctx_, at(l), at(r), d.product));
          } else {
            for (auto r : chart_.endingAt(d.position))
              for (auto l : chart_.endingAt(at(r).left)) emit(ruleProdI(ctx_, at(l), at(r), d.product));
          }
        }
        // x as the left component
        for (auto r : chart_.startingAt(R)) {
          for (auto const& d : demandsAt(startDemands_, L)) emit(ruleProdI(ctx_, x, at(r), d.product));
          for (auto const& d : demandsAt(endDemands_, at(r).right)) emit(ruleProdI(ctx_, x, at(r), d.product));
        }
        // x as the right component
        for (auto l : chart_.endingAt(L)) {
          for (auto const& d : demandsAt(startDemands_, at(l).left)) emit(ruleProdI(ctx_, at(l), x, d.product));
          for (auto const& d : demandsAt(endDemands_, R)) emit(ruleProdI(ctx_, at(l), x, d.product));
        }

        if (x.formula.isSlash(Dir::Forward, Mode::Main))
          for (auto p : chart_.startingAt(R)) emit(ruleProdC(ctx_, x, at(p)));
        if (x.formula.isProduct()) {
          for (auto f : chart_.endingAt(L)) emit(ruleProdC(ctx_, at(f), x));
          emit(ruleProdE(ctx_, x));
        }
      }

      void quotedSpeech(ChartItem const& x) {
        int const L = x.left, R = x.right;
        // x as auxiliary, verb core, subject
        for (auto v : chart_.startingAt(R))
          for (auto s : chart_.startingAt(at(v).right)) emit(ruleQSpeech(ctx_, x, at(v), at(s)));
        for (auto a : chart_.endingAt(L))
          for (auto s : chart_.startingAt(R)) emit(ruleQSpeech(ctx_, at(a), x, at(s)));
        for (auto v : chart_.endingAt(L))
          for (auto a : chart_.endingAt(at(v).left)) emit(ruleQSpeech(ctx_, at(a), at(v), x));
      }
    };

  } // namespace

  ParseResult run(std::vector<ChartItem> const& lexItems, RuleSet const& rules, Formula const& goal,
                  Limits const& limits, bool keepAllReadings) {
    if (lexItems.empty()) throw std::invalid_argument("run: no lexical items");
    int leftmost = lexItems.front().left, rightmost = lexItems.front().right;
    for (auto const& it : lexItems) {
      leftmost = std::min(leftmost, it.left);
      rightmost = std::max(rightmost, it.right);
    }
    Engine engine(rules, goal, limits, leftmost, rightmost, keepAllReadings);
    return engine.run(lexItems);
  }

  ParseResult parse(Lexicon const& lex, std::vector<std::string> const& sentence, ParseOptions const& opts) {
    auto items = lexicalItems(lex, sentence, opts.offset);
    RuleSet rules;
    if (opts.rules) {
      rules = *opts.rules;
    } else {
      std::vector<Formula> formulas;
      for (auto const& it : items) formulas.push_back(it.formula);
      rules = scanTriggers(formulas, opts.goal);
    }
    rules.popAtVP = rules.popAtVP || opts.popAtVP;
    return run(items, rules, opts.goal, opts.limits, opts.keepAllReadings);
  }

} // namespace mmcg
