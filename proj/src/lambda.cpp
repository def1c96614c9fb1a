#include "mmcg/lambda.hpp"

#include <cctype>
#include <vector>

namespace mmcg {

  TermSyntaxError::TermSyntaxError(std::string const& msg, std::size_t offset):
    std::runtime_error("lambda term syntax error at offset " + std::to_string(offset) + ": " + msg),
    offset_(offset) {}

  struct Term::Node {
    Kind kind;
    std::string name;
    int index = 0;
    std::vector<Term> kids;
  };

  Term Term::var(std::string name) {
    return Term(std::make_shared<Node const>(Node{Kind::Var, std::move(name), 0, {}}));
  }
  Term Term::constant(std::string name) {
    return Term(std::make_shared<Node const>(Node{Kind::Const, std::move(name), 0, {}}));
  }
  Term Term::app(Term fun, Term arg) {
    return Term(std::make_shared<Node const>(Node{Kind::App, {}, 0, {std::move(fun), std::move(arg)}}));
  }
  Term Term::abs(std::string var, Term body) {
    return Term(std::make_shared<Node const>(Node{Kind::Abs, std::move(var), 0, {std::move(body)}}));
  }
  Term Term::pair(Term left, Term right) {
    return Term(std::make_shared<Node const>(Node{Kind::Pair, {}, 0, {std::move(left), std::move(right)}}));
  }
  Term Term::proj(int index, Term body) {
    if (index != 1 && index != 2) throw std::invalid_argument("projection index must be 1 or 2");
    return Term(std::make_shared<Node const>(Node{Kind::Proj, {}, index, {std::move(body)}}));
  }

  Term::Kind Term::kind() const noexcept { return node_->kind; }
  std::string const& Term::name() const { return node_->name; }
  Term const& Term::fun() const { return node_->kids.at(0); }
  Term const& Term::arg() const { return node_->kids.at(1); }
  Term const& Term::body() const { return node_->kids.at(0); }
  Term const& Term::left() const { return node_->kids.at(0); }
  Term const& Term::right() const { return node_->kids.at(1); }
  int Term::index() const { return node_->index; }

  bool Term::sameAs(Term const& other) const noexcept {
    if (node_ == other.node_) return true;
    auto const& a = *node_;
    auto const& b = *other.node_;
    if (a.kind != b.kind || a.name != b.name || a.index != b.index || a.kids.size() != b.kids.size()) return false;
    for (std::size_t i = 0; i < a.kids.size(); ++i)
      if (!a.kids[i].sameAs(b.kids[i])) return false;
    return true;
  }

  // ---------------------------------------------------------------------------
  // Text syntax
  //
  //   term := "\" ident "." term | app
  //   app  := atom+
  //   atom := ident | "<" term "," term ">" | "pi1" atom | "pi2" atom | "(" term ")"

  namespace {

    bool isIdentChar(char c) {
      auto u = static_cast<unsigned char>(c);
      return std::isalnum(u) || c == '_' || c == '\'' || u >= 0x80;
    }

    class TermParser {
    public:
      explicit TermParser(std::string_view s): s_(s) {}

      Term parseAll() {
        auto t = parseTerm();
        skipWs();
        if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
        return t;
      }

    private:
      std::string_view s_;
      std::size_t pos_ = 0;
      std::vector<std::string> bound_;

      [[noreturn]] void fail(std::string const& msg) const { throw TermSyntaxError(msg, pos_); }

      void skipWs() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      }
      char peek() {
        skipWs();
        return pos_ < s_.size() ? s_[pos_] : '\0';
      }
      void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
      }

      std::string ident() {
        skipWs();
        std::size_t start = pos_;
        while (pos_ < s_.size() && isIdentChar(s_[pos_])) ++pos_;
        if (start == pos_) fail("expected identifier");
        return std::string(s_.substr(start, pos_ - start));
      }

      bool atAtomStart() {
        char c = peek();
        return c == '<' || c == '(' || (c != '\0' && isIdentChar(c));
      }

      Term parseTerm() {
        if (peek() == '\\') {
          ++pos_;
          auto v = ident();
          expect('.');
          bound_.push_back(v);
          auto body = parseTerm();
          bound_.pop_back();
          return Term::abs(std::move(v), std::move(body));
        }
        if (!atAtomStart()) fail(pos_ >= s_.size() ? "unexpected end of input" : "expected a term");
        auto t = parseAtom();
        while (atAtomStart()) t = Term::app(std::move(t), parseAtom());
        // a trailing abstraction extends as far right as possible
        if (peek() == '\\') t = Term::app(std::move(t), parseTerm());
        return t;
      }

      Term parseAtom() {
        char c = peek();
        if (c == '(') {
          ++pos_;
          auto t = parseTerm();
          expect(')');
          return t;
        }
        if (c == '<') {
          ++pos_;
          auto l = parseTerm();
          expect(',');
          auto r = parseTerm();
          expect('>');
          return Term::pair(std::move(l), std::move(r));
        }
        auto id = ident();
        if (id == "pi1" || id == "pi2") {
          if (!atAtomStart()) fail("projection needs an argument");
          return Term::proj(id == "pi1" ? 1 : 2, parseAtom());
        }
        for (auto it = bound_.rbegin(); it != bound_.rend(); ++it)
          if (*it == id) return Term::var(std::move(id));
        return Term::constant(std::move(id));
      }
    };

    void print(Term const& t, std::string& out, bool argPos) {
      using K = Term::Kind;
      switch (t.kind()) {
        case K::Var:
        case K::Const:
          out += t.name();
          return;
        case K::Abs:
          if (argPos) out += '(';
          out += '\\';
          out += t.name();
          out += ". ";
          print(t.body(), out, false);
          if (argPos) out += ')';
          return;
        case K::App: {
          if (argPos) out += '(';
          // the function position only needs parentheses for an abstraction
          bool funParen = t.fun().kind() == K::Abs;
          if (funParen) out += '(';
          print(t.fun(), out, false);
          if (funParen) out += ')';
          out += ' ';
          print(t.arg(), out, true);
          if (argPos) out += ')';
          return;
        }
        case K::Pair:
          out += '<';
          print(t.left(), out, false);
          out += ", ";
          print(t.right(), out, false);
          out += '>';
          return;
        case K::Proj:
          if (argPos) out += '(';
          out += t.index() == 1 ? "pi1 " : "pi2 ";
          print(t.body(), out, true);
          if (argPos) out += ')';
          return;
      }
    }

    void collectFree(Term const& t, std::vector<std::string>& bound, std::set<std::string>& out) {
      using K = Term::Kind;
      switch (t.kind()) {
        case K::Var:
          for (auto const& b : bound)
            if (b == t.name()) return;
          out.insert(t.name());
          return;
        case K::Const: return;
        case K::Abs:
          bound.push_back(t.name());
          collectFree(t.body(), bound, out);
          bound.pop_back();
          return;
        case K::App: collectFree(t.fun(), bound, out); collectFree(t.arg(), bound, out); return;
        case K::Pair: collectFree(t.left(), bound, out); collectFree(t.right(), bound, out); return;
        case K::Proj: collectFree(t.body(), bound, out); return;
      }
    }

    void collectAllNames(Term const& t, std::set<std::string>& out) {
      using K = Term::Kind;
      switch (t.kind()) {
        case K::Var: case K::Const: out.insert(t.name()); return;
        case K::Abs: out.insert(t.name()); collectAllNames(t.body(), out); return;
        case K::App: collectAllNames(t.fun(), out); collectAllNames(t.arg(), out); return;
        case K::Pair: collectAllNames(t.left(), out); collectAllNames(t.right(), out); return;
        case K::Proj: collectAllNames(t.body(), out); return;
      }
    }

    Term subst(Term const& t, std::string const& x, Term const& value, std::set<std::string> const& valueFree) {
      using K = Term::Kind;
      switch (t.kind()) {
        case K::Var: return t.name() == x ? value : t;
        case K::Const: return t;
        case K::App: return Term::app(subst(t.fun(), x, value, valueFree), subst(t.arg(), x, value, valueFree));
        case K::Pair: return Term::pair(subst(t.left(), x, value, valueFree), subst(t.right(), x, value, valueFree));
        case K::Proj: return Term::proj(t.index(), subst(t.body(), x, value, valueFree));
        case K::Abs: {
          if (t.name() == x) return t;
          if (!freeVariables(t.body()).contains(x)) return t;
          if (!valueFree.contains(t.name()))
            return Term::abs(t.name(), subst(t.body(), x, value, valueFree));
          std::set<std::string> avoid = valueFree;
          collectAllNames(t.body(), avoid);
          avoid.insert(x);
          auto renamed = freshName(t.name(), avoid);
          auto body = subst(t.body(), t.name(), Term::var(renamed), {renamed});
          return Term::abs(renamed, subst(body, x, value, valueFree));
        }
      }
      return t;
    }

    // One leftmost-outermost step; returns false if t is normal.
    bool step(Term const& t, Term& out) {
      using K = Term::Kind;
      switch (t.kind()) {
        case K::Var: case K::Const: return false;
        case K::App: {
          if (t.fun().kind() == K::Abs) {
            out = substitute(t.fun().body(), t.fun().name(), t.arg());
            return true;
          }
          Term r = t;
          if (step(t.fun(), r)) { out = Term::app(r, t.arg()); return true; }
          if (step(t.arg(), r)) { out = Term::app(t.fun(), r); return true; }
          return false;
        }
        case K::Proj: {
          if (t.body().kind() == K::Pair) {
            out = t.index() == 1 ? t.body().left() : t.body().right();
            return true;
          }
          Term r = t;
          if (step(t.body(), r)) { out = Term::proj(t.index(), r); return true; }
          return false;
        }
        case K::Abs: {
          Term r = t;
          if (step(t.body(), r)) { out = Term::abs(t.name(), r); return true; }
          return false;
        }
        case K::Pair: {
          Term r = t;
          if (step(t.left(), r)) { out = Term::pair(r, t.right()); return true; }
          if (step(t.right(), r)) { out = Term::pair(t.left(), r); return true; }
          return false;
        }
      }
      return false;
    }

    using Env = std::vector<std::string>;

    // de Bruijn-style comparison: bound variables compare by binder depth.
    bool alphaEq(Term const& s, Env& es, Term const& t, Env& et) {
      using K = Term::Kind;
      if (s.kind() != t.kind()) return false;
      switch (s.kind()) {
        case K::Const: return s.name() == t.name();
        case K::Var: {
          auto find = [](Env const& e, std::string const& n) -> long {
            for (long i = static_cast<long>(e.size()) - 1; i >= 0; --i)
              if (e[static_cast<std::size_t>(i)] == n) return static_cast<long>(e.size()) - 1 - i;
            return -1;
          };
          long a = find(es, s.name()), b = find(et, t.name());
          if (a != b) return false;
          return a >= 0 || s.name() == t.name();
        }
        case K::Abs: {
          es.push_back(s.name());
          et.push_back(t.name());
          bool r = alphaEq(s.body(), es, t.body(), et);
          es.pop_back();
          et.pop_back();
          return r;
        }
        case K::App: return alphaEq(s.fun(), es, t.fun(), et) && alphaEq(s.arg(), es, t.arg(), et);
        case K::Pair: return alphaEq(s.left(), es, t.left(), et) && alphaEq(s.right(), es, t.right(), et);
        case K::Proj: return s.index() == t.index() && alphaEq(s.body(), es, t.body(), et);
      }
      return false;
    }

    std::string sanitize(std::string const& text) {
      std::string out;
      for (char c : text) {
        auto u = static_cast<unsigned char>(c);
        if (std::isalnum(u)) out += c;
        else if (c == '/') out += "_f_";
        else if (c == '\\') out += "_b_";
        else if (c == '*') out += "_p_";
        else if (c == '(') out += "_l_";
        else if (c == ')') out += "_r_";
        else out += '_';
      }
      return out;
    }

  } // namespace

  Term parseTerm(std::string_view text) { return TermParser(text).parseAll(); }

  std::string printTerm(Term const& t) {
    std::string out;
    print(t, out, false);
    return out;
  }

  std::set<std::string> freeVariables(Term const& t) {
    std::set<std::string> out;
    std::vector<std::string> bound;
    collectFree(t, bound, out);
    return out;
  }

  bool isClosed(Term const& t) { return freeVariables(t).empty(); }

  Term substitute(Term const& t, std::string const& x, Term const& value) {
    return subst(t, x, value, freeVariables(value));
  }

  Term betaNormalize(Term const& t, std::size_t budget) {
    Term cur = t;
    for (std::size_t n = 0;; ++n) {
      Term next = cur;
      if (!step(cur, next)) return cur;
      if (n >= budget)
        throw ReductionBudgetExceeded("beta normalization exceeded " + std::to_string(budget) + " reductions on " +
                                      printTerm(t));
      cur = next;
    }
  }

  bool alphaEqual(Term const& s, Term const& t) {
    Env es, et;
    return alphaEq(s, es, t, et);
  }

  std::string freshName(std::string const& base, std::set<std::string> const& avoid) {
    if (!avoid.contains(base)) return base;
    for (std::size_t i = 1;; ++i) {
      auto cand = base + std::to_string(i);
      if (!avoid.contains(cand)) return cand;
    }
  }

  std::string const& FreshVars::name(int position, Formula const& formula, Mode mode) {
    auto key = std::make_tuple(position, formula, mode);
    if (auto it = names_.find(key); it != names_.end()) return it->second;
    std::string base = "h_" + std::to_string(position) + "_" + sanitize(printFormula(formula));
    if (mode == Mode::M0) base += "_m0";
    auto n = base;
    for (int i = 2; used_.contains(n); ++i) n = base + "_" + std::to_string(i);
    used_.insert(n);
    return names_.emplace(key, n).first->second;
  }

} // namespace mmcg
