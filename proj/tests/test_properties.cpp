#include "doctest.h"
#include "helpers.hpp"
#include "monact/constructions.hpp"
#include "monact/core.hpp"
#include "monact/enumeration.hpp"
#include "monact/fixtures.hpp"
#include "monact/structure.hpp"

using namespace monact;

namespace {

std::vector<Act> nonempty(const Monoid& m, std::size_t size, Category cat) {
  std::vector<Act> out;
  for (auto& a : enumerate_acts(m, size, cat)) {
    if (!a.empty()) out.push_back(std::move(a));
  }
  return out;
}

}  // namespace

TEST_CASE("zero sets are subacts fixed pointwise") {
  for (auto const& m : enumerate_monoids_with_zero_up_to(3)) {
    for (auto const& a : nonempty(m, 4, Category::ActO)) {
      Subact z = zero_set(a);
      CHECK_FALSE(z.empty());
      for (Elem x : z.members())
        for (Elem s = 0; s < m.size(); ++s) CHECK(a.act(s, x) == x);
    }
  }
}

TEST_CASE("subacts are closed under union and nonempty intersection") {
  for (auto const& m : enumerate_monoids_with_zero_up_to(3)) {
    for (auto const& a : nonempty(m, 4, Category::ActO)) {
      auto subs = all_subacts(a);
      for (auto const& b : subs) {
        for (auto const& c : subs) {
          ElemSet u(a.size());
          ElemSet i(a.size());
          bool any = false;
          for (Elem x = 0; x < a.size(); ++x) {
            u[x] = b.contains(x) || c.contains(x);
            i[x] = b.contains(x) && c.contains(x);
            any = any || i[x];
          }
          CHECK_NOTHROW(Subact::make(a, u));
          if (any) CHECK_NOTHROW(Subact::make(a, i));
        }
      }
    }
  }
}

TEST_CASE("Act0 homs are the ActO homs between acts with one zero") {
  for (auto const& m : enumerate_monoids_with_zero_up_to(3)) {
    auto acts = nonempty(m, 3, Category::Act0);
    for (auto const& a : acts) {
      for (auto const& b : acts) {
        auto zero = enumerate_homs(a, b);
        auto all = enumerate_homs(a.in_category(Category::ActO), b.in_category(Category::ActO));
        REQUIRE(zero.size() == all.size());
        for (std::size_t i = 0; i < zero.size(); ++i) CHECK(zero[i].map() == all[i].map());
      }
    }
  }
}

TEST_CASE("homs that kill a subact factor uniquely through the Rees quotient") {
  for (auto const& m : enumerate_monoids_with_zero_up_to(3)) {
    auto acts = nonempty(m, 3, Category::ActO);
    for (auto const& a : acts) {
      for (auto const& b : all_subacts(a)) {
        if (b.empty()) continue;
        auto [q, pi] = rees_quotient(a, b);
        CHECK(q.size() == a.size() - b.size() + 1);
        for (auto const& t : acts) {
          for (auto const& f : enumerate_homs(a, t)) {
            auto members = b.members();
            bool kills = true;
            for (Elem x : members) kills = kills && f(x) == f(members.front());
            if (!kills) continue;
            std::size_t through = 0;
            for (auto const& g : enumerate_homs(q, t)) {
              through += pi.then(g) == f ? 1 : 0;
            }
            CHECK(through == 1);
          }
        }
      }
    }
  }
}

TEST_CASE("coproducts have the universal property") {
  for (auto const& m : enumerate_monoids_with_zero_up_to(3)) {
    for (Category cat : {Category::ActO, Category::Act0}) {
      auto small = nonempty(m, 2, cat);
      auto targets = nonempty(m, 3, cat);
      for (std::size_t i = 0; i < small.size(); ++i) {
        for (std::size_t j = i; j < small.size(); ++j) {
          auto [c, tag] = coproduct(cat, {small[i], small[j]});
          for (auto const& t : targets) {
            for (auto const& f : enumerate_homs(small[i], t)) {
              for (auto const& g : enumerate_homs(small[j], t)) {
                std::size_t mediating = 0;
                for (auto const& h : enumerate_homs(c, t)) {
                  mediating += tag.injections[0].then(h) == f && tag.injections[1].then(h) == g;
                }
                CHECK(mediating == 1);
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("F collapses exactly the zero set and is idempotent") {
  for (auto const& m : enumerate_monoids_with_zero_up_to(3)) {
    for (auto const& a : nonempty(m, 4, Category::ActO)) {
      auto fa = functor_F_obj(a);
      CHECK(fa.act.size() == a.size() - zero_set(a).size() + 1);
      CHECK(fa.act.zero_count() == 1);
      auto ffa = functor_F_obj(fa.act.in_category(Category::ActO));
      CHECK(is_isomorphic(ffa.act, fa.act));
      if (a.zero_count() == 1) {
        CHECK(is_isomorphic(fa.act, a.in_category(Category::Act0)));
        CHECK(fa.projection.is_injective());
      }
    }
  }
}

TEST_CASE("Act0 compactness within bounds matches hollowness") {
  for (auto const& m : enumerate_monoids_with_zero_up_to(3)) {
    for (auto const& a : nonempty(m, 4, Category::Act0)) {
      bool compact = is_compact_bounded(a, Category::Act0, 3, 4);
      CHECK(compact == is_hollow(a, Category::Act0));
    }
  }
}

TEST_CASE("ActO compactness within bounds matches indecomposability") {
  for (auto const& m : enumerate_monoids_with_zero_up_to(3)) {
    for (auto const& a : nonempty(m, 3, Category::ActO)) {
      bool compact = is_compact_bounded(a, Category::ActO, 2, 3);
      CHECK(compact == is_indecomposable(a, Category::ActO));
    }
  }
}

TEST_CASE("hollow acts are cyclic over finite monoids") {
  for (auto const& m : enumerate_monoids_with_zero_up_to(3)) {
    for (Category cat : {Category::ActO, Category::Act0}) {
      for (auto const& a : nonempty(m, 4, cat)) {
        if (is_hollow(a, cat)) CHECK(is_cyclic(a));
      }
    }
  }
}
