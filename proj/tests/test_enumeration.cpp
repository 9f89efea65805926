#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "monact/classifiers.hpp"
#include "monact/core.hpp"
#include "monact/enumeration.hpp"
#include "monact/fixtures.hpp"
#include "oracles.hpp"

using namespace monact;
using testing::error_kind;

TEST_CASE("monoid enumeration bounds") {
  CHECK(error_kind([] { enumerate_monoids_with_zero(1); }) == ErrorKind::ZeroEqualsOne);
  CHECK(error_kind([] { enumerate_monoids_with_zero(7); }) == ErrorKind::BoundTooLarge);
  auto two = enumerate_monoids_with_zero(2);
  REQUIRE(two.size() == 1);
  CHECK(two[0].same_structure(fixtures::s2()));
}

TEST_CASE("monoid counts match the brute-force oracle") {
  for (std::size_t n = 2; n <= 4; ++n) {
    CHECK(enumerate_monoids_with_zero(n).size() == oracle::monoid_count(n));
  }
}

TEST_CASE("frozen monoid counts") {
  CHECK(enumerate_monoids_with_zero(3).size() == 3);
  CHECK(enumerate_monoids_with_zero(4).size() == 15);
  CHECK(enumerate_monoids_with_zero(5).size() == 112);
}

TEST_CASE("enumerated monoids are pairwise non-isomorphic and canonical") {
  auto ms = enumerate_monoids_with_zero(4);
  std::set<CanonicalForm> forms;
  for (auto const& m : ms) {
    CHECK(m.label(m.one()) == "1");
    CHECK(m.label(m.zero()) == "0");
    forms.insert(canonical_form(m));
  }
  CHECK(forms.size() == ms.size());
}

TEST_CASE("act enumeration small cases") {
  Monoid s2 = fixtures::s2();
  auto one = enumerate_acts(s2, 1, Category::Act0);
  REQUIRE(one.size() == 1);
  CHECK(one[0].size() == 1);
  std::size_t two = 0;
  for (auto const& a : enumerate_acts(s2, 2, Category::Act0)) {
    two += a.size() == 2 ? 1 : 0;
  }
  CHECK(two == 1);  // only ActA: 0a = a would make a second zero
  bool has_b = false;
  bool has_w = false;
  for (auto const& a : enumerate_acts(s2, 3, Category::ActO)) {
    has_b = has_b || is_isomorphic(a, fixtures::act_b());
    has_w = has_w || is_isomorphic(a, fixtures::act_w());
  }
  CHECK(has_b);
  CHECK(has_w);
  auto zero = enumerate_acts(s2, 0, Category::ActO);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].empty());
}

TEST_CASE("act counts match unpruned brute force") {
  for (auto const& m : enumerate_monoids_with_zero_up_to(3)) {
    for (Category cat : {Category::ActO, Category::Act0}) {
      for (std::size_t n = 0; n <= 3; ++n) {
        std::size_t count = 0;
        for_each_act(m, n, cat, [&](const Act&) {
          ++count;
          return true;
        });
        CHECK(count == oracle::acts_up_to_iso(m, n, cat).size());
      }
    }
  }
}

TEST_CASE("frozen act counts over S2") {
  Monoid s2 = fixtures::s2();
  std::vector<std::size_t> acto;
  std::vector<std::size_t> act0;
  for (std::size_t n = 0; n <= 5; ++n) {
    std::size_t o = 0;
    std::size_t z = 0;
    for_each_act(s2, n, Category::ActO, [&](const Act&) { return ++o, true; });
    for_each_act(s2, n, Category::Act0, [&](const Act&) { return ++z, true; });
    acto.push_back(o);
    act0.push_back(z);
  }
  // An S2-act is a set with an idempotent self-map, so the ActO counts are
  // partition numbers and Act0 admits a single fibre.
  CHECK(acto == std::vector<std::size_t>{1, 1, 2, 3, 5, 7});
  CHECK(act0 == std::vector<std::size_t>{0, 1, 1, 1, 1, 1});
  for (std::size_t n = 0; n <= 5; ++n) {
    CHECK(acto[n] == oracle::acts_up_to_iso(s2, n, Category::ActO).size());
    CHECK(act0[n] == oracle::acts_up_to_iso(s2, n, Category::Act0).size());
  }
}

TEST_CASE("enumerated acts are valid and deterministic") {
  Monoid m = testing::monoid_e();
  auto first = enumerate_acts(m, 4, Category::Act0);
  auto second = enumerate_acts(m, 4, Category::Act0);
  REQUIRE(first.size() == second.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(first[i] == second[i]);
    auto const& a = first[i];
    std::vector<std::vector<Elem>> rows(m.size());
    for (Elem s = 0; s < m.size(); ++s)
      for (Elem x = 0; x < a.size(); ++x) rows[s].push_back(a.act(s, x));
    CHECK_NOTHROW(Act::validate(m, a.labels(), rows, Category::Act0));
    CHECK(a.theta() == 0);
  }
}

TEST_CASE("streaming stops when the visitor says so") {
  std::size_t seen = 0;
  for_each_act(fixtures::g0(), 3, Category::ActO, [&](const Act&) { return ++seen < 2; });
  CHECK(seen == 2);
}

TEST_CASE("canonical forms decide isomorphism") {
  std::mt19937 rng(7);
  for (auto const& m : enumerate_monoids_with_zero_up_to(3)) {
    auto acts = enumerate_acts(m, 4, Category::ActO);
    for (auto const& a : acts) {
      // Relabel by a random permutation; the canonical form must not move.
      std::vector<Elem> perm(a.size());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<std::string> labels(a.size());
      std::vector<std::vector<Elem>> rows(m.size(), std::vector<Elem>(a.size()));
      for (Elem x = 0; x < a.size(); ++x) {
        labels[perm[x]] = a.label(x);
        for (Elem s = 0; s < m.size(); ++s) rows[s][perm[x]] = perm[a.act(s, x)];
      }
      Act b = Act::validate(m, labels, rows, Category::ActO);
      CHECK(canonical_form(a) == canonical_form(b));
      CHECK(is_isomorphic(a, b));
    }
    for (std::size_t i = 0; i < acts.size(); ++i) {
      for (std::size_t j = i + 1; j < acts.size(); ++j) {
        CHECK(canonical_form(acts[i]) != canonical_form(acts[j]));
        CHECK_FALSE(is_isomorphic(acts[i], acts[j]));
      }
    }
  }
}

TEST_CASE("left congruences") {
  auto s2 = enumerate_left_congruences(fixtures::s2());
  CHECK(s2.size() == 2);
  for (auto const& m : enumerate_monoids_with_zero_up_to(4)) {
    auto cs = enumerate_left_congruences(m);
    CHECK(cs.size() == oracle::left_congruence_count(m));
    bool equality = false;
    bool total = false;
    for (auto const& c : cs) {
      equality = equality || c.block_count() == m.size();
      total = total || c.block_count() == 1;
    }
    CHECK(equality);
    CHECK(total);
  }
}
