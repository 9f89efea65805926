#include "doctest.h"
#include "helpers.hpp"
#include "monact/classifiers.hpp"
#include "monact/constructions.hpp"
#include "monact/core.hpp"
#include "monact/enumeration.hpp"
#include "monact/fixtures.hpp"
#include "monact/structure.hpp"

using namespace monact;

TEST_CASE("cyclic acts over S2") {
  auto acts = cyclic_acts(fixtures::s2(), Category::ActO);
  REQUIRE(acts.size() == 2);
  bool has_s = false;
  bool has_theta = false;
  for (auto const& a : acts) {
    has_s = has_s || is_isomorphic(a, regular_act(fixtures::s2(), Category::ActO));
    has_theta = has_theta || a.size() == 1;
  }
  CHECK(has_s);
  CHECK(has_theta);
}

TEST_CASE("cyclic acts are exactly the cyclic enumerated acts") {
  for (auto const& m : enumerate_monoids_with_zero_up_to(3)) {
    std::size_t expected = 0;
    for (auto const& a : enumerate_acts(m, m.size(), Category::ActO)) {
      expected += !a.empty() && is_cyclic(a) ? 1 : 0;
    }
    CHECK(cyclic_acts(m, Category::ActO).size() == expected);
  }
}

TEST_CASE("perfectness verdicts") {
  for (auto const& m : {fixtures::s2(), fixtures::g0()}) {
    auto p = is_left_perfect(m, 4);
    CHECK(p.verdict == Verdict::HoldsWithinBounds);
    CHECK(p.witnesses.empty());
    CHECK(p.bounds.at("act_size") == 4);
    CHECK(is_left_0perfect(m, 4).verdict == Verdict::HoldsWithinBounds);
  }
}

TEST_CASE("chain lengths") {
  CHECK(longest_cyclic_chain(fixtures::act_w()) == 2);
  CHECK(longest_cyclic_chain(theta_act(fixtures::s2(), Category::ActO)) == 1);
  auto r = acc_cyclic_subacts_report(fixtures::s2(), 3);
  CHECK(r.verdict == Verdict::Holds);
  CHECK_FALSE(r.chain_profile.empty());
}

TEST_CASE("steadiness verdicts") {
  auto s = is_left_steady(fixtures::s2(), 5);
  CHECK(s.verdict == Verdict::HoldsWithinBounds);
  auto z = is_left_0steady(fixtures::s2(), 5);
  CHECK(z.verdict == Verdict::HoldsWithinBounds);
  CHECK(z.positive() == acc_cyclic_subacts_report(fixtures::s2(), 5).positive());
  CHECK(is_left_0steady(fixtures::g0(), 4).verdict == Verdict::HoldsWithinBounds);
  CHECK_FALSE(is_hollow(fixtures::act_w(), Category::Act0));
}

TEST_CASE("verdict names") {
  CHECK(to_string(Verdict::Holds) == "holds");
  CHECK(to_string(Verdict::Fails) == "fails");
  CHECK(to_string(Verdict::HoldsWithinBounds) == "holds-within-bounds");
}

TEST_CASE("failing sweeps carry rechecked witnesses") {
  // A deliberately wrong property: "every act is cyclic".
  Monoid s2 = fixtures::s2();
  auto acts = enumerate_acts(s2, 3, Category::ActO);
  auto r = sweep(s2, "everything_cyclic", {{"act_size", 3}}, acts,
                 [](const Act& a) -> std::optional<std::string> {
                   if (a.empty() || is_cyclic(a)) return std::nullopt;
                   return "locally_cyclic_not_cyclic";
                 });
  CHECK(r.verdict == Verdict::Fails);
  CHECK_FALSE(r.positive());
  REQUIRE_FALSE(r.witnesses.empty());
  CHECK(r.witnesses.front().reason == "locally_cyclic_not_cyclic");
  // Not locally cyclic either, so the recheck of that reason rejects it.
  CHECK_FALSE(witnesses_recheck(r));

  auto hollow = sweep(s2, "hollow_is_cyclic_fake", {}, {fixtures::act_w()},
                      [](const Act&) -> std::optional<std::string> {
                        return "hollow_not_cyclic";
                      });
  CHECK(hollow.verdict == Verdict::Fails);
  CHECK_FALSE(witnesses_recheck(hollow));

  auto none = sweep(s2, "nothing", {}, acts,
                    [](const Act&) -> std::optional<std::string> { return std::nullopt; });
  CHECK(none.verdict == Verdict::HoldsWithinBounds);
  CHECK(witnesses_recheck(none));
}

TEST_CASE("0-perfect monoids pass every perfectness sub-check") {
  for (auto const& m : enumerate_monoids_with_zero_up_to(3)) {
    auto z = is_left_0perfect(m, 3);
    auto p = is_left_perfect(m, 3);
    if (z.positive()) CHECK(p.positive());
    CHECK(z.verdict == p.verdict);
  }
}
