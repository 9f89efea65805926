#include <fstream>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "monact/constructions.hpp"
#include "monact/enumeration.hpp"
#include "monact/fixtures.hpp"
#include "monact/io.hpp"
#include "monact/report.hpp"

using namespace monact;
using testing::error_kind;

namespace {

std::string read(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string source_path(const std::string& rel) {
  return std::string(MONACT_SOURCE_DIR) + "/" + rel;
}

Workspace s2_only() {
  Workspace ws;
  ws.add_monoid(parse_monoid_file(print_monoid("S2", fixtures::s2())));
  return ws;
}

}  // namespace

TEST_CASE("the S2 file parses to S2") {
  auto nm = parse_monoid_file(read(source_path("fixtures/S2.monoid")));
  CHECK(nm.name == "S2");
  CHECK(nm.monoid == fixtures::s2());
}

TEST_CASE("embedded fixtures equal the shipped files") {
  for (auto const& [name, text] : fixtures::files()) {
    CHECK(read(source_path("fixtures/" + std::string(name))) == text);
  }
}

TEST_CASE("monoid parse errors") {
  std::string missing_zero = "monoid M\nelements: 1 0\none: 1\ntable:\n1 0\n0 0\n";
  try {
    parse_monoid_file(missing_zero);
    FAIL("expected a syntax error");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ErrorKind::SyntaxError);
    CHECK(e.line() == 4);
  }
  std::string arity = "monoid M\nelements: 1 0\none: 1\nzero: 0\ntable:\n1 0\n0\n";
  try {
    parse_monoid_file(arity);
    FAIL("expected a syntax error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 7);
  }
  CHECK(error_kind([] { parse_monoid_file("monoid M\nelements: 1 0\none: 1\nzero: 1\ntable:\n1 0\n0 0\n"); }) ==
        ErrorKind::ZeroEqualsOne);
  CHECK(error_kind([] { parse_monoid_file("monoid M\nelements: 1 0\none: 1\nzero: q\ntable:\n1 0\n0 0\n"); }) ==
        ErrorKind::SyntaxError);
  CHECK(error_kind([] { parse_monoid_file(""); }) == ErrorKind::SyntaxError);
}

TEST_CASE("comments and blank lines are skipped") {
  std::string text = "# S2 again\nmonoid S2\n\nelements: 1 0\none: 1\nzero: 0\ntable:\n1 0\n# row two\n0 0\n";
  CHECK(parse_monoid_file(text).monoid == fixtures::s2());
}

TEST_CASE("act files") {
  Workspace ws = s2_only();
  auto w = parse_act_file(read(source_path("fixtures/ActW.act")), ws);
  CHECK(w.name == "ActW");
  CHECK(w.act == fixtures::act_w());

  std::string two_zeros = "act Z over S2 category act0\nelements: p q\nzero: p\ntable:\np q\np q\n";
  CHECK(error_kind([&] { parse_act_file(two_zeros, ws); }) == ErrorKind::ZeroSetNotSingleton);
  std::string missing = "act Z over Nope category acto\nelements: p\ntable:\np\np\n";
  CHECK(error_kind([&] { parse_act_file(missing, ws); }) == ErrorKind::UnknownMonoid);
  std::string no_zero = "act Z over S2 category act0\nelements: p\ntable:\np\np\n";
  CHECK(error_kind([&] { parse_act_file(no_zero, ws); }) == ErrorKind::SyntaxError);
  std::string stray_zero = "act Z over S2 category acto\nelements: p\nzero: p\ntable:\np\np\n";
  CHECK(error_kind([&] { parse_act_file(stray_zero, ws); }) == ErrorKind::SyntaxError);
  std::string bad_cat = "act Z over S2 category other\nelements: p\ntable:\np\np\n";
  CHECK(error_kind([&] { parse_act_file(bad_cat, ws); }) == ErrorKind::SyntaxError);
}

TEST_CASE("workspace lookups") {
  Workspace ws = fixtures::workspace();
  CHECK(ws.monoids().size() == 2);
  CHECK(ws.acts().size() == 5);
  CHECK(error_kind([&] { ws.act("Nope"); }) == ErrorKind::UnknownAct);
  CHECK(error_kind([&] { ws.monoid("Nope"); }) == ErrorKind::UnknownMonoid);
  CHECK(error_kind([&] { load_into(ws, print_monoid("S2", fixtures::s2())); }) ==
        ErrorKind::DuplicateLabel);
}

TEST_CASE("print then parse is the identity") {
  Workspace ws = fixtures::workspace();
  for (auto const& [name, nm] : ws.monoids()) {
    CHECK(parse_monoid_file(print_monoid(name, nm.monoid)).monoid == nm.monoid);
  }
  for (auto const& [name, na] : ws.acts()) {
    auto back = parse_act_file(print_act(name, na.monoid_name, na.act), ws);
    CHECK(back.name == name);
    CHECK(back.act == na.act);
  }
  // Every enumerated monoid and act, in both categories, including ∅.
  for (auto const& m : enumerate_monoids_with_zero_up_to(3)) {
    Workspace local;
    local.add_monoid(parse_monoid_file(print_monoid("M", m)));
    CHECK(local.monoid("M") == m);
    for (Category cat : {Category::ActO, Category::Act0}) {
      for (auto const& a : enumerate_acts(m, 3, cat)) {
        CHECK(parse_act_file(print_act("A", "M", a), local).act == a);
      }
    }
  }
}

TEST_CASE("shipped files print back byte for byte") {
  Workspace ws = fixtures::workspace();
  CHECK(print_monoid("S2", ws.monoid("S2")) == read(source_path("fixtures/S2.monoid")));
  CHECK(print_act("ActW", "S2", ws.act("ActW").act) == read(source_path("fixtures/ActW.act")));
}

TEST_CASE("analyze reports") {
  Act w = fixtures::act_w();
  Json o = analyze_report("ActW", w, Category::ActO);
  CHECK(o["indecomposable"] == true);
  CHECK(o["decomposition"]["components"] == 1);
  Json z = analyze_report("ActW", w, Category::Act0);
  CHECK(z["decomposition"]["components"] == 2);

  Json t = analyze_report("θ", theta_act(fixtures::s2(), Category::Act0), Category::Act0);
  CHECK(t["cyclic"] == "θ");
  CHECK(t["hollow"] == true);
  CHECK_FALSE(t["projective"].is_null());

  Json b = analyze_report("ActB", fixtures::act_b(), Category::ActO);
  CHECK(b["substantial_summand"]["substantial"] == Json::array({"θA", "a"}));
  CHECK(b["substantial_summand"]["discrete_zeros"] == Json::array({"θS"}));

  std::vector<std::string> keys;
  for (auto const& [k, v] : o.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"schema", "act", "category", "size", "zero_set",
                                         "cyclic", "locally_cyclic", "hollow", "indecomposable",
                                         "decomposition", "projective", "substantial_summand"});
  CHECK(o.dump() == analyze_report("ActW", w, Category::ActO).dump());
}

TEST_CASE("DOT output") {
  CHECK(cayley_dot("ActA", fixtures::act_a()) == read(source_path("tests/golden/ActA.dot")));
  CHECK(cayley_dot("ActW", fixtures::act_w()) == read(source_path("tests/golden/ActW.dot")));
  CHECK(cayley_dot("T", theta_act(fixtures::s2(), Category::ActO)) ==
        "digraph \"T\" {\n  \"θ\";\n}\n");
}

TEST_CASE("cover and classifier JSON") {
  Json c = cover_report("ActA", fixtures::act_a(), Category::ActO, 4);
  CHECK(c["cover"]["idempotents"] == Json::array({"1"}));
  CHECK(c["cover"]["domain_size"] == 2);
  Json none = cover_report("ActA", fixtures::act_a(), Category::ActO, 1);
  CHECK(none["cover"].is_null());
}
