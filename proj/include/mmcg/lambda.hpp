// Untyped lambda terms with pairing: the semantic side of every chart rule.

#ifndef MMCG_LAMBDA_HPP
#define MMCG_LAMBDA_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>

#include "mmcg/formula.hpp"

namespace mmcg {

  class TermSyntaxError : public std::runtime_error {
  public:
    TermSyntaxError(std::string const& msg, std::size_t offset);
    std::size_t offset() const noexcept { return offset_; }
  private:
    std::size_t offset_;
  };

  // Raised when normalization does not finish within its reduction budget.
  class ReductionBudgetExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
  };

  class Term {
  public:
    enum class Kind : unsigned char { Var, Const, App, Abs, Pair, Proj };

    static Term var(std::string name);
    static Term constant(std::string name);
    static Term app(Term fun, Term arg);
    static Term abs(std::string var, Term body);
    static Term pair(Term left, Term right);
    // index is 1 or 2
    static Term proj(int index, Term body);

    Kind kind() const noexcept;
    std::string const& name() const;   // Var, Const, Abs (bound variable)
    Term const& fun() const;           // App
    Term const& arg() const;           // App
    Term const& body() const;          // Abs, Proj
    Term const& left() const;          // Pair
    Term const& right() const;         // Pair
    int index() const;                 // Proj

    // Structural identity (no renaming).
    bool sameAs(Term const& other) const noexcept;

    struct Node;

  private:
    explicit Term(std::shared_ptr<Node const> n): node_(std::move(n)) {}
    std::shared_ptr<Node const> node_;
  };

  Term parseTerm(std::string_view text);
  std::string printTerm(Term const& t);

  std::set<std::string> freeVariables(Term const& t);
  bool isClosed(Term const& t);

  // Capture-avoiding t[x := value].
  Term substitute(Term const& t, std::string const& x, Term const& value);

  inline constexpr std::size_t kDefaultReductionBudget = 10000;

  // Leftmost-outermost beta and projection reduction to normal form.
  Term betaNormalize(Term const& t, std::size_t budget = kDefaultReductionBudget);

  bool alphaEqual(Term const& s, Term const& t);

  // `base`, or `base` with a numeric suffix, not occurring in `avoid`.
  std::string freshName(std::string const& base, std::set<std::string> const& avoid);

  // Hypothesis variables of one parse: one name per (position, formula, mode).
  class FreshVars {
  public:
    std::string const& name(int position, Formula const& formula, Mode mode = Mode::M1);

  private:
    std::map<std::tuple<int, Formula, Mode>, std::string> names_;
    std::set<std::string> used_;
  };

} // namespace mmcg

#endif // MMCG_LAMBDA_HPP
