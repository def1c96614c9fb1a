// Formulas of multimodal categorial grammar and their text syntax.

#ifndef MMCG_FORMULA_HPP
#define MMCG_FORMULA_HPP

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mmcg {

  // The unannotated mode, mode 0 and mode 1.
  enum class Mode : unsigned char { Main, M0, M1 };

  // "" for Main, "0" / "1" otherwise.
  std::string_view modeSuffix(Mode m);

  enum class Dir : unsigned char { Forward, Backward };

  class FormulaSyntaxError : public std::runtime_error {
  public:
    FormulaSyntaxError(std::string const& msg, std::size_t offset);
    std::size_t offset() const noexcept { return offset_; }
  private:
    std::size_t offset_;
  };

  // Immutable formula tree, shared by value.
  //
  // Slash(Forward, m, A, B) renders A/B, Slash(Backward, m, A, B) renders B\A:
  // `result` and `argument` keep their roles independently of direction.
  class Formula {
  public:
    enum class Kind : unsigned char { Atom, Slash, Product, Dia, Box };

    static Formula atom(std::string name, std::string feature = {});
    static Formula slash(Dir dir, Mode mode, Formula result, Formula argument);
    static Formula fwd(Formula result, Formula argument, Mode mode = Mode::Main);
    static Formula bwd(Formula argument, Formula result, Mode mode = Mode::Main);
    static Formula product(Mode mode, Formula left, Formula right);
    static Formula dia(Mode mode, Formula body);
    static Formula box(Mode mode, Formula body);
    // dia_m(box_m(body))
    static Formula diaBox(Mode mode, Formula body);

    Kind kind() const noexcept;
    bool isAtom() const noexcept { return kind() == Kind::Atom; }
    bool isSlash() const noexcept { return kind() == Kind::Slash; }
    bool isProduct() const noexcept { return kind() == Kind::Product; }

    // Atom accessors.
    std::string const& name() const;
    std::string const& feature() const;

    Mode mode() const;
    Dir dir() const;
    Formula const& result() const;    // Slash
    Formula const& argument() const;  // Slash
    Formula const& left() const;      // Product
    Formula const& right() const;     // Product
    Formula const& body() const;      // Dia, Box

    bool isSlash(Dir d, Mode m) const noexcept;
    // Slash(Backward, m, X, X)
    bool isModifier(Mode m) const noexcept;
    // If this is Dia(m, Box(m, B)), returns B.
    std::optional<Formula> diaBoxBody(Mode m) const;

    std::size_t depth() const noexcept;
    std::size_t hash() const noexcept;

    friend bool operator==(Formula const& a, Formula const& b) noexcept;
    friend std::strong_ordering operator<=>(Formula const& a, Formula const& b) noexcept;

    template <typename F>
    void forEachSubformula(F&& f) const {
      f(*this);
      switch (kind()) {
        case Kind::Atom: break;
        case Kind::Slash: result().forEachSubformula(f); argument().forEachSubformula(f); break;
        case Kind::Product: left().forEachSubformula(f); right().forEachSubformula(f); break;
        case Kind::Dia: case Kind::Box: body().forEachSubformula(f); break;
      }
    }

    struct Node;

  private:
    explicit Formula(std::shared_ptr<Node const> n): node_(std::move(n)) {}
    std::shared_ptr<Node const> node_;
  };

  Formula parseFormula(std::string_view text);
  std::string printFormula(Formula const& f);

  enum class Orientation : unsigned char { Rightward, Leftward };

  // Decomposition of an extraction licensor.
  //   Rightward:  X/(Y/dia_m box_m B), m in {0, 1}
  //   Leftward:   (Y/dia0 box0 B)\X
  struct Licensor {
    Mode mode;
    Formula y, b, x;
    Orientation orientation;
  };

  std::optional<Licensor> matchExtractionLicensor(Formula const& f);

} // namespace mmcg

template <>
struct std::hash<mmcg::Formula> {
  std::size_t operator()(mmcg::Formula const& f) const noexcept { return f.hash(); }
};

#endif // MMCG_FORMULA_HPP
