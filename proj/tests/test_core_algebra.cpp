#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "monact/constructions.hpp"
#include "monact/core.hpp"
#include "monact/enumeration.hpp"
#include "monact/fixtures.hpp"
#include "oracles.hpp"

using namespace monact;
using testing::act_from;
using testing::error_kind;

TEST_CASE("monoid validation accepts S2") {
  Monoid s2 = Monoid::validate({"1", "0"}, {{0, 1}, {1, 1}}, 0, 1);
  CHECK(s2.size() == 2);
  CHECK(s2.mul(0, 1) == 1);
  CHECK(s2 == fixtures::s2());
}

TEST_CASE("monoid validation errors") {
  CHECK(error_kind([] { Monoid::validate({"1"}, {{0}}, 0, 0); }) ==
        ErrorKind::ZeroEqualsOne);
  CHECK(error_kind([] { Monoid::validate({"1", "1"}, {{0, 1}, {1, 1}}, 0, 1); }) ==
        ErrorKind::DuplicateLabel);
  CHECK(error_kind([] { Monoid::validate({"1", "0"}, {{0, 1}}, 0, 1); }) ==
        ErrorKind::BadTable);
  CHECK(error_kind([] { Monoid::validate({"1", "0"}, {{0, 1}, {1, 2}}, 0, 1); }) ==
        ErrorKind::BadTable);
  // 1 is not a left identity for 0 here.
  CHECK(error_kind([] { Monoid::validate({"1", "0"}, {{1, 1}, {1, 1}}, 0, 1); }) ==
        ErrorKind::BadIdentity);
  CHECK(error_kind([] {
          Monoid::validate({"1", "0", "e"}, {{0, 1, 2}, {1, 1, 2}, {2, 1, 2}}, 0, 1);
        }) == ErrorKind::BadZero);
  // a·a = b, a·b = a, b·b = 0: (a·a)·b = 0 but a·(a·b) = b.
  CHECK(error_kind([] {
          Monoid::validate({"1", "0", "a", "b"},
                           {{0, 1, 2, 3}, {1, 1, 1, 1}, {2, 1, 3, 2}, {3, 1, 1, 1}},
                           0, 1);
        }) == ErrorKind::NotAssociative);
}

TEST_CASE("three-element tables with identity and zero are associative") {
  // Only e·e is free, so no non-associative 3-element candidate exists.
  for (Elem v = 0; v < 3; ++v) {
    CHECK_NOTHROW(Monoid::validate({"1", "0", "e"}, {{0, 1, 2}, {1, 1, 1}, {2, 1, v}}, 0, 1));
  }
}

TEST_CASE("act validation") {
  Monoid s2 = fixtures::s2();
  CHECK(error_kind([&] { act_from(s2, {"x", "y"}, {{"y", "x"}, {"x", "x"}}, Category::ActO); }) ==
        ErrorKind::UnitLawViolated);
  Monoid e = testing::monoid_e();
  // e·x = y, e·y = x breaks e(ex) = (ee)x.
  CHECK(error_kind([&] {
          act_from(e, {"z", "x", "y"}, {{"z", "x", "y"}, {"z", "z", "z"}, {"z", "y", "x"}},
                   Category::ActO);
        }) == ErrorKind::NotCompatible);
  CHECK(error_kind([&] { act_from(s2, {"p", "q"}, {{"p", "q"}, {"p", "q"}}, Category::Act0); }) ==
        ErrorKind::ZeroSetNotSingleton);
  CHECK(error_kind([&] { Act::validate(s2, {}, {{}, {}}, Category::Act0); }) ==
        ErrorKind::EmptyAct0);
  CHECK(error_kind([&] {
          Act::validate(s2, {"θ", "a"}, {{0, 1}, {0, 0}}, Category::Act0, Elem{1});
        }) == ErrorKind::BadDesignatedZero);
  CHECK(Act::validate(s2, {"θ", "a"}, {{0, 1}, {0, 0}}, Category::Act0).theta() == 0);
}

TEST_CASE("zero_set examples") {
  CHECK(zero_set(fixtures::act_b()).members() == std::vector<Elem>{0, 2});
  CHECK(zero_set(regular_act(fixtures::s2(), Category::ActO)).members() ==
        std::vector<Elem>{1});
  CHECK(zero_set(fixtures::act_w()).members() == std::vector<Elem>{0});
}

TEST_CASE("hom counts from the non-faithfulness example") {
  Act a1 = fixtures::act_a1();
  Act a2 = fixtures::act_a2();
  CHECK(enumerate_homs(a1, a2).size() == 2);
  Act f1 = functor_F_obj(a1).act;
  Act f2 = functor_F_obj(a2).act;
  CHECK(enumerate_homs(f1, f2, Category::Act0).size() == 1);
}

TEST_CASE("theta is initial in Act0") {
  for (auto const& m : enumerate_monoids_with_zero_up_to(3)) {
    Act theta = theta_act(m, Category::Act0);
    for (auto const& x : enumerate_acts(m, 3, Category::Act0)) {
      CHECK(count_homs(theta, x) == 1);
    }
  }
}

TEST_CASE("homs out of the empty act") {
  Act empty = Act::empty(fixtures::s2());
  CHECK(count_homs(empty, fixtures::act_w()) == 1);
  CHECK(count_homs(empty, empty) == 1);
  CHECK(count_homs(fixtures::act_a(), empty) == 0);
}

TEST_CASE("hom enumeration errors") {
  Act a = fixtures::act_a();
  Act g = regular_act(fixtures::g0(), Category::ActO);
  CHECK(error_kind([&] { enumerate_homs(a, g); }) == ErrorKind::MonoidMismatch);
  CHECK(error_kind([&] { enumerate_homs(a, a.in_category(Category::Act0)); }) ==
        ErrorKind::CategoryMismatch);
  CHECK(error_kind([&] { ActHom::make(a, a, {1, 1}); }) == ErrorKind::NotAHom);
}

TEST_CASE("hom enumeration is lexicographic") {
  Act w = fixtures::act_w();
  auto homs = enumerate_homs(w, w);
  for (std::size_t i = 1; i < homs.size(); ++i) {
    CHECK(homs[i - 1].map() < homs[i].map());
  }
}

TEST_CASE("isomorphism examples") {
  Act a = fixtures::act_a();
  auto id = is_isomorphic(a, a);
  REQUIRE(id);
  CHECK(id->map() == std::vector<Elem>{0, 1});
  Act s = regular_act(fixtures::s2(), Category::ActO);
  auto iso = is_isomorphic(s, a);
  REQUIRE(iso);
  // 1 -> a, 0 -> θ
  CHECK(iso->map() == std::vector<Elem>{1, 0});
  CHECK_FALSE(is_isomorphic(a, fixtures::act_a2()));
}

TEST_CASE("subact generation") {
  Act w = fixtures::act_w();
  Elem a[] = {1};
  CHECK(subact_generated(w, a).members() == std::vector<Elem>{0, 1});
  std::vector<Elem> all{0, 1, 2};
  CHECK(subact_generated(w, all).size() == 3);
  Act b = fixtures::act_b();
  Elem ts[] = {2};
  CHECK(subact_generated(b, ts).members() == std::vector<Elem>{2});
  std::vector<Elem> none;
  CHECK(error_kind([&] { subact_generated(w.in_category(Category::Act0), none); }) ==
        ErrorKind::EmptyGeneratorInAct0);
  CHECK(subact_generated(w, none).empty());
}

TEST_CASE("all_subacts examples") {
  CHECK(all_subacts(fixtures::act_a().in_category(Category::Act0)).size() == 2);
  CHECK(all_subacts(fixtures::act_a()).size() == 3);  // with ∅
  auto w0 = all_subacts(fixtures::act_w().in_category(Category::Act0));
  CHECK(w0.size() == 4);
  CHECK(all_subacts(theta_act(fixtures::s2(), Category::Act0)).size() == 1);
  CHECK(error_kind([&] { Subact::of(fixtures::act_w(), {1}); }) == ErrorKind::NotASubact);
}

TEST_CASE("rees quotient examples") {
  Act w = fixtures::act_w();
  auto [total, pi] = rees_quotient(w, Subact::of(w, {0, 1, 2}));
  CHECK(total.size() == 1);
  Act b = fixtures::act_b();
  auto [fb, pb] = rees_quotient(b, zero_set(b));
  CHECK(fb.size() == 2);
  CHECK(is_isomorphic(fb, fixtures::act_a()));
  auto [q, pq] = rees_quotient(w, Subact::of(w, {0, 1}));
  CHECK(q.size() == 2);
  Elem cls = pq(1);
  CHECK(pq(0) == cls);
  CHECK(q.act(fixtures::s2().zero(), pq(2)) == cls);
  CHECK(error_kind([&] { rees_quotient(w, Subact::of(fixtures::act_a(), {0})); }) ==
        ErrorKind::NotASubact);
}

TEST_CASE("congruence quotient labels") {
  Act w = fixtures::act_w();
  auto rho = ActCongruence::make(w, {0, 0, 1});
  auto [q, pi] = rho.quotient();
  CHECK(q.label(0) == "[θ,a]");
  CHECK(q.label(1) == "b");
  // In ActB, a and θS are sent to different zeros by 0.
  CHECK(error_kind([] { ActCongruence::make(fixtures::act_b(), {0, 1, 1}); }) ==
        ErrorKind::NotCompatible);
}

TEST_CASE("subact and hom enumeration agree with brute force") {
  for (auto const& m : enumerate_monoids_with_zero_up_to(3)) {
    for (Category cat : {Category::ActO, Category::Act0}) {
      auto acts = enumerate_acts(m, 3, cat);
      for (auto const& a : acts) {
        auto t = oracle::table_of(a);
        std::set<oracle::Mask> expected;
        for (auto mask : oracle::subacts(t, cat)) expected.insert(mask);
        std::set<oracle::Mask> got;
        for (auto const& sub : all_subacts(a)) {
          oracle::Mask mask = 0;
          for (Elem x : sub.members()) mask |= oracle::Mask{1} << x;
          got.insert(mask);
        }
        CHECK(got == expected);
        for (auto const& b : acts) {
          auto homs = enumerate_homs(a, b);
          auto brute = oracle::homs(t, oracle::table_of(b), cat);
          REQUIRE(homs.size() == brute.size());
          for (std::size_t i = 0; i < homs.size(); ++i) {
            CHECK(homs[i].map() == brute[i]);
          }
        }
      }
    }
  }
}
