// Chart rule schemas and the trigger scanner that selects which of them are active.
//
// Every rule is a pure function from premise items to an optional conclusion. Conclusions carry
// the rule name and premise ids in provenance, a normalized semantic term and the summed weight.
// Coherence filtering and subsumption are the engine's business.

#ifndef MMCG_RULES_HPP
#define MMCG_RULES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mmcg/formula.hpp"
#include "mmcg/item.hpp"
#include "mmcg/lambda.hpp"

namespace mmcg {

  namespace rule {
    inline constexpr char const* Lex = "lex";
    inline constexpr char const* FE = "fE";
    inline constexpr char const* BsE = "bsE";
    inline constexpr char const* EStart = "e_start";
    inline constexpr char const* EEnd = "e_end";
    inline constexpr char const* EEndLeft = "e_end_left";
    inline constexpr char const* Withdraw = "withdraw";
    inline constexpr char const* Wr = "wr";
    inline constexpr char const* Wpop = "wpop";
    inline constexpr char const* ProdI = "prodI";
    inline constexpr char const* ProdC = "prodC";
    inline constexpr char const* ProdE = "prodE";
    inline constexpr char const* Lnr = "lnr";
    inline constexpr char const* QSpeech = "qspeech";
  } // namespace rule

  struct RuleSet {
    bool ab = true;
    bool extract1 = false;
    bool extract0 = false;
    bool wrap = false;
    bool product = false;
    bool lnr = false;
    bool qspeech = false;
    bool popAtVP = false;

    // Hypotheses B introduced without a licensor item: B of every leftward (Y/dia0 box0 B)\X
    // licensor and of a Y/dia0 box0 B goal.
    std::vector<Formula> peripheralHyps;
    // Set when the goal itself has the shape Y/dia0 box0 B.
    std::optional<Formula> withdrawGoal;
    // X of every (dia0 box0 X)\X argument subformula.
    std::vector<Formula> lnrTargets;

    // Additive (log-)weight per rule name; 0 when absent.
    std::map<std::string, double> ruleWeights;

    double weightOf(std::string const& name) const;
    // "ab extract1 wrap ..."
    std::string describe() const;
  };

  RuleSet scanTriggers(std::vector<Formula> const& lexFormulas, std::optional<Formula> const& goal = std::nullopt);

  // Per-parse state the rules need: hypothesis names and the rule weights.
  struct RuleContext {
    RuleSet const& rules;
    FreshVars& vars;
    std::size_t reductionBudget = kDefaultReductionBudget;
  };

  using MaybeItem = std::optional<ChartItem>;

  MaybeItem ruleFE(RuleContext& ctx, ChartItem const& f, ChartItem const& a);
  MaybeItem ruleBsE(RuleContext& ctx, ChartItem const& a, ChartItem const& f);
  MaybeItem ruleEStart(RuleContext& ctx, ChartItem const& lic, ChartItem const& f, Mode mode);
  // Introduces a right-peripheral m0 hypothesis B for a functor A/B.
  MaybeItem ruleEStartPeripheral(RuleContext& ctx, ChartItem const& f, Formula const& b);
  MaybeItem ruleEEnd(RuleContext& ctx, ChartItem const& lic, ChartItem const& y, Mode mode);
  MaybeItem ruleEEndLeft(RuleContext& ctx, ChartItem const& y, ChartItem const& lic);
  MaybeItem ruleWithdraw(RuleContext& ctx, ChartItem const& y, Formula const& goal);
  MaybeItem ruleWr(RuleContext& ctx, ChartItem const& x, ChartItem const& adv);
  MaybeItem ruleWpop(RuleContext& ctx, ChartItem const& it);
  MaybeItem ruleProdI(RuleContext& ctx, ChartItem const& l, ChartItem const& r, Formula const& demand);
  MaybeItem ruleProdC(RuleContext& ctx, ChartItem const& f, ChartItem const& p);
  MaybeItem ruleProdE(RuleContext& ctx, ChartItem const& p);
  MaybeItem ruleLnr(RuleContext& ctx, ChartItem const& m1, ChartItem const& m2);
  MaybeItem ruleQSpeech(RuleContext& ctx, ChartItem const& aux, ChartItem const& vcore, ChartItem const& subj);

  // Product arguments an item is waiting for, with the string position the product must start
  // at (Right) or end at (Left).
  struct ProductDemand {
    enum class Side : unsigned char { Left, Right } side;
    int position;
    Formula product;
  };
  std::vector<ProductDemand> productDemands(ChartItem const& it);

} // namespace mmcg

#endif // MMCG_RULES_HPP
