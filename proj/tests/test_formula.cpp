#include <doctest.h>

#include <random>

#include "mmcg/formula.hpp"
#include "testkit.hpp"

using namespace mmcg;

namespace {
  Formula F(char const* s) { return parseFormula(s); }
  Formula atom(char const* s) { return Formula::atom(s); }
}

TEST_CASE("atoms and features") {
  CHECK(F("np") == atom("np"));
  auto ppart = F("s_ppart");
  CHECK(ppart.name() == "s");
  CHECK(ppart.feature() == "ppart");
  CHECK_FALSE(ppart == atom("s"));
  CHECK(printFormula(ppart) == "s_ppart");
}

TEST_CASE("relativizer type") {
  auto rel = F("(n\\n)/(s/dia1(box1(np)))");
  auto expected = Formula::fwd(Formula::bwd(atom("n"), atom("n")),
                               Formula::fwd(atom("s"), Formula::dia(Mode::M1, Formula::box(Mode::M1, atom("np")))));
  CHECK(rel == expected);
  CHECK(printFormula(rel) == "(n\\n)/(s/dia1(box1(np)))");
}

TEST_CASE("moded slashes and products") {
  auto adv = F("s \\1 s");
  CHECK(adv == Formula::slash(Dir::Backward, Mode::M1, atom("s"), atom("s")));
  CHECK(adv.isModifier(Mode::M1));
  CHECK_FALSE(adv.isModifier(Mode::Main));
  CHECK(printFormula(adv) == "s\\1 s");
  CHECK(printFormula(F("s\\1(np\\s_ppart)")) == "s\\1(np\\s_ppart)");

  CHECK(printFormula(Formula::product(Mode::Main, atom("np"), atom("pp"))) == "np*pp");
  CHECK(F("np *0 pp") == Formula::product(Mode::M0, atom("np"), atom("pp")));
  CHECK(printFormula(F("np*0 pp")) == "np*0 pp");
  // products bind tighter than slashes, so no parentheses are needed around them
  auto et = F("((np*pp)\\(np*dia0(box0(pp))))/(np*pp)");
  CHECK(printFormula(et) == "(np*pp\\np*dia0(box0(pp)))/np*pp");
  CHECK(parseFormula(printFormula(et)) == et);
}

TEST_CASE("precedence: product binds tighter than slashes") {
  CHECK(F("np*pp/n") == Formula::fwd(Formula::product(Mode::Main, atom("np"), atom("pp")), atom("n")));
  CHECK(printFormula(Formula::product(Mode::Main, Formula::fwd(atom("np"), atom("n")), atom("pp"))) == "(np/n)*pp");
}

TEST_CASE("whitespace is insignificant") {
  CHECK(F("  ( n \\ n ) / ( s / dia1 ( box1 ( np ) ) ) ") == F("(n\\n)/(s/dia1(box1(np)))"));
}

TEST_CASE("syntax errors") {
  CHECK_THROWS_AS(F(""), FormulaSyntaxError);
  CHECK_THROWS_AS(F("np/"), FormulaSyntaxError);
  CHECK_THROWS_AS(F("(np/n"), FormulaSyntaxError);
  CHECK_THROWS_AS(F("np/n)"), FormulaSyntaxError);
  CHECK_THROWS_AS(F("Np"), FormulaSyntaxError);
  // chained binary operators need parentheses
  CHECK_THROWS_AS(F("a/b/c"), FormulaSyntaxError);
  CHECK_THROWS_AS(F("a*b*c"), FormulaSyntaxError);
  // dia and box need a mode
  CHECK_THROWS_AS(F("dia(np)"), FormulaSyntaxError);

  try {
    F("s\\2 s");
    FAIL("accepted mode 2");
  } catch (FormulaSyntaxError const& e) {
    CHECK(std::string(e.what()).find("mode") != std::string::npos);
    CHECK(e.offset() == 2);
  }
  try {
    F("np / / n");
    FAIL("accepted");
  } catch (FormulaSyntaxError const& e) {
    CHECK(e.offset() == 5);
  }
}

TEST_CASE("extraction licensors") {
  auto m = matchExtractionLicensor(F("(n\\n)/(s/dia1(box1(np)))"));
  REQUIRE(m);
  CHECK(m->mode == Mode::M1);
  CHECK(m->y == atom("s"));
  CHECK(m->b == atom("np"));
  CHECK(m->x == F("n\\n"));
  CHECK(m->orientation == Orientation::Rightward);

  CHECK_FALSE(matchExtractionLicensor(atom("np")));
  CHECK_FALSE(matchExtractionLicensor(F("(np\\s)/np")));
  CHECK_FALSE(matchExtractionLicensor(F("np*pp")));
  // modes of dia and box must agree
  CHECK_FALSE(matchExtractionLicensor(F("x/(s/dia1(box0(np)))")));

  auto left = matchExtractionLicensor(F("((s/dia0(box0(np)))\\s)"));
  REQUIRE(left);
  CHECK(left->mode == Mode::M0);
  CHECK(left->y == atom("s"));
  CHECK(left->b == atom("np"));
  CHECK(left->x == atom("s"));
  CHECK(left->orientation == Orientation::Leftward);
  // leftward licensors exist for mode 0 only
  CHECK_FALSE(matchExtractionLicensor(F("(s/dia1(box1(np)))\\s")));

  auto m0 = matchExtractionLicensor(F("s/(s/dia0(box0(np)))"));
  REQUIRE(m0);
  CHECK(m0->mode == Mode::M0);
}

TEST_CASE("equality and ordering are total and structural") {
  std::mt19937 rng(7);
  for (int i = 0; i < 500; ++i) {
    auto a = testkit::randomFormula(rng, 4, true);
    auto b = testkit::randomFormula(rng, 4, true);
    CHECK(a == a);
    CHECK((a == b) == (printFormula(a) == printFormula(b)));
    CHECK((a == b) == ((a <=> b) == 0));
    if (a == b) CHECK(std::hash<Formula>{}(a) == std::hash<Formula>{}(b));
  }
}

TEST_CASE("round trip on generated formulas") {
  std::mt19937 rng(2024);
  for (int i = 0; i < 2000; ++i) {
    auto f = testkit::randomFormula(rng, 6, true);
    auto text = printFormula(f);
    INFO(text);
    REQUIRE(parseFormula(text) == f);
    if (matchExtractionLicensor(f)) CHECK(f.isSlash());
  }
}
