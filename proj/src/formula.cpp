#include "mmcg/formula.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace mmcg {

  std::string_view modeSuffix(Mode m) {
    switch (m) {
      case Mode::Main: return "";
      case Mode::M0: return "0";
      case Mode::M1: return "1";
    }
    return "";
  }

  FormulaSyntaxError::FormulaSyntaxError(std::string const& msg, std::size_t offset):
    std::runtime_error("formula syntax error at offset " + std::to_string(offset) + ": " + msg),
    offset_(offset) {}

  struct Formula::Node {
    Kind kind = Kind::Atom;
    Mode mode = Mode::Main;
    Dir dir = Dir::Forward;
    std::string name, feature;
    std::vector<Formula> kids;
    std::size_t hash = 0;
    std::size_t depth = 0;
  };

  namespace {

    std::size_t mix(std::size_t h, std::size_t v) {
      return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    }

  } // namespace

  // Builds the node and fills in the cached hash and depth.
  static std::shared_ptr<Formula::Node const> finish(Formula::Node n, std::vector<std::size_t> const& kidHashes,
                                                     std::size_t kidDepth) {
    std::size_t h = mix(static_cast<std::size_t>(n.kind), static_cast<std::size_t>(n.mode) * 7 + static_cast<std::size_t>(n.dir));
    h = mix(h, std::hash<std::string>{}(n.name));
    h = mix(h, std::hash<std::string>{}(n.feature));
    for (auto k : kidHashes) h = mix(h, k);
    n.hash = h;
    n.depth = kidDepth + 1;
    return std::make_shared<Formula::Node const>(std::move(n));
  }

  Formula Formula::atom(std::string name, std::string feature) {
    Node n{};
    n.kind = Kind::Atom;
    n.name = std::move(name);
    n.feature = std::move(feature);
    return Formula(finish(std::move(n), {}, 0));
  }

  Formula Formula::slash(Dir dir, Mode mode, Formula result, Formula argument) {
    Node n{};
    n.kind = Kind::Slash;
    n.mode = mode;
    n.dir = dir;
    std::vector<std::size_t> hs{result.hash(), argument.hash()};
    auto d = std::max(result.depth(), argument.depth());
    n.kids = {std::move(result), std::move(argument)};
    return Formula(finish(std::move(n), hs, d));
  }

  Formula Formula::fwd(Formula result, Formula argument, Mode mode) {
    return slash(Dir::Forward, mode, std::move(result), std::move(argument));
  }

  Formula Formula::bwd(Formula argument, Formula result, Mode mode) {
    return slash(Dir::Backward, mode, std::move(result), std::move(argument));
  }

  Formula Formula::product(Mode mode, Formula left, Formula right) {
    Node n{};
    n.kind = Kind::Product;
    n.mode = mode;
    std::vector<std::size_t> hs{left.hash(), right.hash()};
    auto d = std::max(left.depth(), right.depth());
    n.kids = {std::move(left), std::move(right)};
    return Formula(finish(std::move(n), hs, d));
  }

  Formula Formula::dia(Mode mode, Formula body) {
    Node n{};
    n.kind = Kind::Dia;
    n.mode = mode;
    std::vector<std::size_t> hs{body.hash()};
    auto d = body.depth();
    n.kids = {std::move(body)};
    return Formula(finish(std::move(n), hs, d));
  }

  Formula Formula::box(Mode mode, Formula body) {
    Node n{};
    n.kind = Kind::Box;
    n.mode = mode;
    std::vector<std::size_t> hs{body.hash()};
    auto d = body.depth();
    n.kids = {std::move(body)};
    return Formula(finish(std::move(n), hs, d));
  }

  Formula Formula::diaBox(Mode mode, Formula body) {
    return dia(mode, box(mode, std::move(body)));
  }

  Formula::Kind Formula::kind() const noexcept { return node_->kind; }

  std::string const& Formula::name() const {
    if (!isAtom()) throw std::logic_error("Formula::name on non-atom");
    return node_->name;
  }
  std::string const& Formula::feature() const {
    if (!isAtom()) throw std::logic_error("Formula::feature on non-atom");
    return node_->feature;
  }

  Mode Formula::mode() const { return node_->mode; }
  Dir Formula::dir() const { return node_->dir; }

  Formula const& Formula::result() const {
    if (!isSlash()) throw std::logic_error("Formula::result on non-slash");
    return node_->kids[0];
  }
  Formula const& Formula::argument() const {
    if (!isSlash()) throw std::logic_error("Formula::argument on non-slash");
    return node_->kids[1];
  }
  Formula const& Formula::left() const {
    if (!isProduct()) throw std::logic_error("Formula::left on non-product");
    return node_->kids[0];
  }
  Formula const& Formula::right() const {
    if (!isProduct()) throw std::logic_error("Formula::right on non-product");
    return node_->kids[1];
  }
  Formula const& Formula::body() const {
    if (kind() != Kind::Dia && kind() != Kind::Box) throw std::logic_error("Formula::body on non-unary");
    return node_->kids[0];
  }

  bool Formula::isSlash(Dir d, Mode m) const noexcept {
    return kind() == Kind::Slash && node_->dir == d && node_->mode == m;
  }

  bool Formula::isModifier(Mode m) const noexcept {
    return isSlash(Dir::Backward, m) && result() == argument();
  }

  std::optional<Formula> Formula::diaBoxBody(Mode m) const {
    if (kind() != Kind::Dia || mode() != m) return std::nullopt;
    auto const& inner = body();
    if (inner.kind() != Kind::Box || inner.mode() != m) return std::nullopt;
    return inner.body();
  }

  std::size_t Formula::depth() const noexcept { return node_->depth; }
  std::size_t Formula::hash() const noexcept { return node_->hash; }

  std::strong_ordering operator<=>(Formula const& a, Formula const& b) noexcept {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    auto const& x = *a.node_;
    auto const& y = *b.node_;
    if (auto c = x.kind <=> y.kind; c != 0) return c;
    if (auto c = x.mode <=> y.mode; c != 0) return c;
    if (auto c = x.dir <=> y.dir; c != 0) return c;
    if (auto c = x.name <=> y.name; c != 0) return c;
    if (auto c = x.feature <=> y.feature; c != 0) return c;
    for (std::size_t i = 0; i < x.kids.size(); ++i)
      if (auto c = x.kids[i] <=> y.kids[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  bool operator==(Formula const& a, Formula const& b) noexcept {
    if (a.node_ == b.node_) return true;
    if (a.node_->hash != b.node_->hash) return false;
    return (a <=> b) == 0;
  }

  // ---------------------------------------------------------------------------
  // Text syntax
  //
  //   formula := slash
  //   slash   := prod (("/"|"\") mode? prod)?
  //   prod    := unary ("*" mode? unary)?
  //   unary   := ("dia"|"box") mode "(" formula ")" | atom | "(" formula ")"
  //   atom    := lowercase ident ("_" ident)?

  namespace {

    bool isIdentStart(char c) { return c >= 'a' && c <= 'z'; }
    bool isIdentChar(char c) {
      return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
    }

    class FormulaParser {
    public:
      explicit FormulaParser(std::string_view s): s_(s) {}

      Formula parseAll() {
        auto f = parseSlash();
        skipWs();
        if (pos_ != s_.size()) {
          if (s_[pos_] == ')') fail("unbalanced parentheses");
          if (s_[pos_] == '/' || s_[pos_] == '\\' || s_[pos_] == '*')
            fail("chained binary connective requires parentheses");
          fail(std::string("unexpected '") + s_[pos_] + "'");
        }
        return f;
      }

    private:
      std::string_view s_;
      std::size_t pos_ = 0;

      [[noreturn]] void fail(std::string const& msg) const { throw FormulaSyntaxError(msg, pos_); }

      void skipWs() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      }

      char peek() {
        skipWs();
        return pos_ < s_.size() ? s_[pos_] : '\0';
      }

      std::optional<Mode> optMode() {
        char c = peek();
        if (c == '0') { ++pos_; return Mode::M0; }
        if (c == '1') { ++pos_; return Mode::M1; }
        if (c >= '2' && c <= '9') fail(std::string("unknown mode digit '") + c + "'");
        return std::nullopt;
      }

      Formula parseSlash() {
        auto lhs = parseProd();
        char c = peek();
        if (c != '/' && c != '\\') return lhs;
        ++pos_;
        Mode m = optMode().value_or(Mode::Main);
        auto rhs = parseProd();
        return c == '/' ? Formula::fwd(std::move(lhs), std::move(rhs), m)
                        : Formula::bwd(std::move(lhs), std::move(rhs), m);
      }

      Formula parseProd() {
        auto lhs = parseUnary();
        if (peek() != '*') return lhs;
        ++pos_;
        Mode m = optMode().value_or(Mode::Main);
        auto rhs = parseUnary();
        return Formula::product(m, std::move(lhs), std::move(rhs));
      }

      std::string ident() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && isIdentChar(s_[pos_])) ++pos_;
        return std::string(s_.substr(start, pos_ - start));
      }

      Formula parseUnary() {
        char c = peek();
        if (c == '(') {
          std::size_t open = pos_;
          ++pos_;
          auto f = parseSlash();
          if (peek() != ')') {
            if (pos_ >= s_.size()) { pos_ = open; fail("unbalanced parentheses"); }
            if (s_[pos_] == '/' || s_[pos_] == '\\' || s_[pos_] == '*')
              fail("chained binary connective requires parentheses");
            fail("expected ')'");
          }
          ++pos_;
          return f;
        }
        if (c == '\0') fail("unexpected end of input");
        if (!isIdentStart(c)) fail(std::string("unexpected '") + c + "'");
        std::size_t start = pos_;
        auto word = ident();
        bool unaryOp = word.size() == 4 && (word.starts_with("dia") || word.starts_with("box"));
        if ((word == "dia" || word == "box") || (unaryOp && peek() == '(')) {
          bool isDia = word.starts_with("dia");
          Mode m;
          if (word.size() == 3) {
            auto om = optMode();
            if (!om) fail("dia/box require a mode digit");
            m = *om;
          } else {
            char d = word[3];
            if (d == '0') m = Mode::M0;
            else if (d == '1') m = Mode::M1;
            else { pos_ = start + 3; fail(std::string("unknown mode digit '") + d + "'"); }
          }
          if (peek() != '(') fail("expected '(' after dia/box");
          ++pos_;
          auto body = parseSlash();
          if (peek() != ')') fail(pos_ >= s_.size() ? "unbalanced parentheses" : "expected ')'");
          ++pos_;
          return isDia ? Formula::dia(m, std::move(body)) : Formula::box(m, std::move(body));
        }
        std::string feature;
        if (pos_ < s_.size() && s_[pos_] == '_') {
          ++pos_;
          feature = ident();
          if (feature.empty()) fail("empty atom feature");
        }
        return Formula::atom(std::move(word), std::move(feature));
      }
    };

    enum class Ctx { Top, SlashArg, ProdArg };

    void print(Formula const& f, Ctx ctx, std::string& out) {
      using K = Formula::Kind;
      auto opMode = [&](char op, Mode m) {
        out += op;
        out += modeSuffix(m);
      };
      // after a mode digit the next token may start with a letter
      auto sepIfNeeded = [&](Mode m, std::size_t at) {
        if (m != Mode::Main && at < out.size() && isIdentChar(out[at])) out.insert(at, " ");
      };
      switch (f.kind()) {
        case K::Atom:
          out += f.name();
          if (!f.feature().empty()) { out += '_'; out += f.feature(); }
          return;
        case K::Dia:
        case K::Box:
          out += f.kind() == K::Dia ? "dia" : "box";
          out += modeSuffix(f.mode());
          out += '(';
          print(f.body(), Ctx::Top, out);
          out += ')';
          return;
        case K::Product: {
          bool paren = ctx == Ctx::ProdArg;
          if (paren) out += '(';
          print(f.left(), Ctx::ProdArg, out);
          opMode('*', f.mode());
          auto at = out.size();
          print(f.right(), Ctx::ProdArg, out);
          sepIfNeeded(f.mode(), at);
          if (paren) out += ')';
          return;
        }
        case K::Slash: {
          bool paren = ctx != Ctx::Top;
          if (paren) out += '(';
          auto const& lhs = f.dir() == Dir::Forward ? f.result() : f.argument();
          auto const& rhs = f.dir() == Dir::Forward ? f.argument() : f.result();
          print(lhs, Ctx::SlashArg, out);
          opMode(f.dir() == Dir::Forward ? '/' : '\\', f.mode());
          auto at = out.size();
          print(rhs, Ctx::SlashArg, out);
          sepIfNeeded(f.mode(), at);
          if (paren) out += ')';
          return;
        }
      }
    }

  } // namespace

  Formula parseFormula(std::string_view text) {
    return FormulaParser(text).parseAll();
  }

  std::string printFormula(Formula const& f) {
    std::string out;
    print(f, Ctx::Top, out);
    return out;
  }

  std::optional<Licensor> matchExtractionLicensor(Formula const& f) {
    if (!f.isSlash() || f.mode() != Mode::Main) return std::nullopt;
    // the abstraction Y/dia_m box_m B sits in argument position
    auto const& abs = f.argument();
    if (!abs.isSlash(Dir::Forward, Mode::Main)) return std::nullopt;
    if (f.dir() == Dir::Forward) {
      for (Mode m : {Mode::M1, Mode::M0})
        if (auto b = abs.argument().diaBoxBody(m))
          return Licensor{m, abs.result(), *b, f.result(), Orientation::Rightward};
      return std::nullopt;
    }
    if (auto b = abs.argument().diaBoxBody(Mode::M0))
      return Licensor{Mode::M0, abs.result(), *b, f.result(), Orientation::Leftward};
    return std::nullopt;
  }

} // namespace mmcg
