#include <doctest.h>

#include "mmcg/proof.hpp"
#include "testkit.hpp"

using namespace mmcg;
using namespace mmcg::testkit;

namespace {

  // (id, [children ids])
  std::string shape(Derivation const& d) {
    std::string out = std::to_string(d.id);
    if (d.children.empty()) return out;
    out += '(';
    for (std::size_t i = 0; i < d.children.size(); ++i) {
      if (i) out += ',';
      out += shape(d.children[i]);
    }
    return out + ')';
  }

} // namespace

TEST_CASE("derivation of the AB example skips the non-contributing items") {
  auto r = parseFixture(market());
  auto d = extractDerivation(r.chart, 11);
  CHECK(derivationItems(d) == std::set<ItemId>{1, 2, 3, 4, 5, 7, 8, 10, 11});
  CHECK(shape(d) == "11(1,10(7(2,3),8(4,5)))");
  CHECK(d.rule == "fE");

  auto leaf = extractDerivation(r.chart, 3);
  CHECK(leaf.children.empty());
  CHECK(leaf.rule == "lex");
}

TEST_CASE("derivation of the head-wrap example") {
  auto r = parseFixture(adverb());
  auto d = extractDerivation(r.chart, 10);
  CHECK(shape(d) == "10(9(1,8(6(2,3),7(4,5))))");
}

TEST_CASE("the e_start licensor is not a proof premise") {
  auto r = parseFixture(relative());
  auto d = extractDerivation(r.chart, 6);
  CHECK(shape(d) == "6(1,5(2,4(3)))");
}

TEST_CASE("corrupt provenance is reported") {
  Chart chart(0, 2);
  auto a = item("a", "np", 0, 1);
  auto b = item("b", "np\\s", 1, 2);
  b.provenance = Provenance{rule::BsE, {1, 7}};
  chart.insert(a);
  chart.insert(b);
  chart.promote();
  chart.promote();
  CHECK_THROWS_AS(extractDerivation(chart, 2), CorruptChart);
  CHECK_THROWS_AS(extractDerivation(chart, 9), CorruptChart);

  Chart cyclic(0, 1);
  auto c = item("c", "np", 0, 1);
  c.provenance = Provenance{rule::Wpop, {1}};
  cyclic.insert(c);
  cyclic.promote();
  CHECK_THROWS_AS(extractDerivation(cyclic, 1), CorruptChart);
}

TEST_CASE("yield") {
  auto r = parseFixture(adverb());
  CHECK(yieldOf(r.chart.item(9).antecedent) ==
        std::vector<std::string>{"il", "occupera", "ensuite", "diverses", "fonctions"});
  CHECK(yieldOf(Antecedent::leaf("w")) == std::vector<std::string>{"w"});
  auto rel = parseFixture(relative());
  CHECK(yieldOf(rel.chart.item(6).antecedent) == std::vector<std::string>{"qu'", "on", "emprunte"});
}

TEST_CASE("antecedent notation") {
  auto n = Antecedent::node(Mode::M0, Antecedent::leaf("a"),
                            Antecedent::node(Mode::Main, Antecedent::leaf("b"), Antecedent::leaf("c")));
  CHECK(printAntecedent(n) == "a∘0(b∘c)");
}

TEST_CASE("trace tables") {
  auto r = parseFixture(market());
  auto text = renderTrace(r.chart);
  auto lines = std::count(text.begin(), text.end(), '\n');
  CHECK(lines == 12);
  CHECK(text.find("⟨le∘marché, np, 0, 2, {}, []⟩") != std::string::npos);
  CHECK(text.find("From 1,10 by fE") != std::string::npos);

  auto rel = renderTrace(parseFixture(relative()).chart);
  CHECK(rel.find("⟨on∘emprunte, s, 3, 5, {3-np}, []⟩") != std::string::npos);
  CHECK(renderTrace(parseFixture(relative()).chart, true).find("{3-5-np}") != std::string::npos);

  auto wrap = renderTrace(parseFixture(adverb()).chart);
  CHECK(wrap.find("⟨occupera∘1ensuite, (np\\s)/np, 1, 3, {}, [2,3-s\\1 s]⟩") != std::string::npos);

  // header only
  auto empty = renderTrace(Chart{});
  CHECK(std::count(empty.begin(), empty.end(), '\n') == 1);
}

TEST_CASE("trace rows line up") {
  auto text = renderTrace(parseFixture(adverb()).chart);
  std::vector<std::size_t> cols;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto eol = text.find('\n', pos);
    auto line = text.substr(pos, eol - pos);
    auto j = line.rfind("  ");
    std::size_t width = 0;
    for (std::size_t i = 0; i <= j + 1; ++i) width += (static_cast<unsigned char>(line[i]) & 0xC0) != 0x80;
    cols.push_back(width);
    pos = eol + 1;
  }
  for (auto c : cols) CHECK(c == cols.front());
}

TEST_CASE("json export") {
  auto r = parseFixture(relative());
  auto j = parseResultToJson(r);
  CHECK(j["complete"] == true);
  CHECK(j["goal"] == "n\\n");
  CHECK(j["goals"] == nlohmann::json::array({6}));
  REQUIRE(j["items"].size() == 6);
  auto const& it = j["items"][3];
  std::set<std::string> keys;
  for (auto const& [k, _] : it.items()) keys.insert(k);
  CHECK(keys == std::set<std::string>{"id", "formula", "left", "right", "ext", "stack", "weight", "sem", "rule",
                                      "premises"});
  CHECK(it["id"] == 4);
  CHECK(it["formula"] == "np\\s");
  CHECK(it["rule"] == "e_start");
  CHECK(it["premises"] == nlohmann::json::array({1, 3}));
  CHECK(it["ext"][0]["licPos"] == 3);
  CHECK(it["ext"][0]["formula"] == "np");
  CHECK(it["sem"] == "\\x. borrow x h_3_np");

  auto const& d = j["derivations"][0];
  CHECK(d["id"] == 6);
  CHECK(d["rule"] == "e_end");
  CHECK(d["children"].size() == 2);

  auto wrap = parseResultToJson(parseFixture(adverb()));
  auto const& st = wrap["items"][5]["stack"][0];
  CHECK(st["left"] == 2);
  CHECK(st["right"] == 3);
  CHECK(st["formula"] == "s\\1 s");
}
