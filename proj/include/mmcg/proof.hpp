// Derivations recovered from chart back-pointers, trace tables and JSON export.

#ifndef MMCG_PROOF_HPP
#define MMCG_PROOF_HPP

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "mmcg/chart.hpp"

namespace mmcg {

  struct Derivation {
    ItemId id;
    std::string rule;
    std::vector<Derivation> children;
  };

  class CorruptChart : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
  };

  // The proof tree of `goalId`. The licensor premise of e_start is a trigger, not a proof
  // premise, and is left out; it appears in the tree where e_end discharges the hypothesis.
  Derivation extractDerivation(Chart const& chart, ItemId goalId);

  // Ids of every node of the tree.
  std::set<ItemId> derivationItems(Derivation const& d);

  // One row per chart item: id, <antecedent, formula, L, R, ext, stack>, justification.
  // `triples` prints extraction tags as K-J-B instead of K-B.
  std::string renderTrace(Chart const& chart, bool triples = false);

  // "From 1,3 by e_start" / "Lexicon"
  std::string justification(ChartItem const& it);

  nlohmann::json derivationToJson(Derivation const& d);
  nlohmann::json itemToJson(ChartItem const& it);
  // {"complete", "goal", "goals", "items"}
  nlohmann::json parseResultToJson(ParseResult const& result);

} // namespace mmcg

#endif // MMCG_PROOF_HPP
