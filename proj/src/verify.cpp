#include "monact/verify.hpp"

#include <functional>
#include <optional>
#include <sstream>

#include "monact/act.hpp"
#include "monact/classifiers.hpp"
#include "monact/constructions.hpp"
#include "monact/core.hpp"
#include "monact/enumeration.hpp"
#include "monact/fixtures.hpp"
#include "monact/io.hpp"
#include "monact/projectivity.hpp"
#include "monact/structure.hpp"

namespace monact {

namespace {

struct Universe {
  struct Entry {
    Monoid monoid;
    std::vector<Act> acto;  // nonempty
    std::vector<Act> act0;
  };
  std::vector<Entry> entries;
  std::size_t act_count = 0;
};

Universe build_universe(const SweepBounds& bounds) {
  Universe u;
  for (auto const& m : enumerate_monoids_with_zero_up_to(bounds.monoid_size)) {
    Universe::Entry e{m, {}, {}};
    for (auto& a : enumerate_acts(m, bounds.act_size, Category::ActO)) {
      if (!a.empty()) {
        e.acto.push_back(std::move(a));
      }
    }
    e.act0 = enumerate_acts(m, bounds.act_size, Category::Act0);
    u.act_count += e.acto.size() + e.act0.size();
    u.entries.push_back(std::move(e));
  }
  return u;
}

std::string describe(const Act& a) {
  std::string text = print_act("A", "S", a);
  for (auto& c : text) {
    if (c == '\n') {
      c = ';';
    }
  }
  std::string monoid = print_monoid("S", a.monoid());
  for (auto& c : monoid) {
    if (c == '\n') {
      c = ';';
    }
  }
  return monoid + " " + text;
}

CheckResult pass(std::string name, std::string detail) {
  return {std::move(name), true, std::move(detail)};
}

CheckResult fail(std::string name, std::string detail) {
  return {std::move(name), false, std::move(detail)};
}

// Runs `property` on every act of the universe in the given category; the
// first reason returned is reported as the failure.
CheckResult for_all_acts(
    const std::string& name, const SweepBounds& bounds, Category category,
    const std::function<std::optional<std::string>(const Act&)>& property) {
  Universe u = build_universe(bounds);
  std::size_t checked = 0;
  for (auto const& e : u.entries) {
    auto const& acts = category == Category::ActO ? e.acto : e.act0;
    for (auto const& a : acts) {
      if (auto reason = property(a)) {
        return fail(name, *reason + " at " + describe(a));
      }
      ++checked;
    }
  }
  return pass(name, std::to_string(checked) + " acts over " +
                        std::to_string(u.entries.size()) + " monoids");
}

}  // namespace

CheckResult check_f_not_faithful() {
  Act a1 = fixtures::act_a1();
  Act a2 = fixtures::act_a2();
  std::size_t before = count_homs(a1, a2);
  std::size_t after =
      count_homs(functor_F_obj(a1).act, functor_F_obj(a2).act);
  std::string detail = "hom counts " + std::to_string(before) + " -> " +
                       std::to_string(after);
  auto homs = enumerate_homs(a1, a2);
  bool collapse = homs.size() == 2 &&
                  functor_F_mor(homs[0]) == functor_F_mor(homs[1]);
  if (before == 2 && after == 1 && collapse) {
    return pass("F_not_faithful", detail);
  }
  return fail("F_not_faithful", detail);
}

CheckResult check_f_not_left_exact() {
  Act b = fixtures::act_b();
  std::size_t lhs = functor_F_obj(product(Category::ActO, {b, b})).act.size();
  Act fb = functor_F_obj(b).act;
  std::size_t rhs = product(Category::Act0, {fb, fb}).size();
  std::string detail =
      "sizes " + std::to_string(lhs) + " vs " + std::to_string(rhs);
  if (lhs == 6 && rhs == 4 && is_isomorphic(fb, fixtures::act_a().in_category(Category::Act0))) {
    return pass("F_not_left_exact", detail);
  }
  return fail("F_not_left_exact", detail);
}

CheckResult check_reflection(const SweepBounds& bounds) {
  Universe u = build_universe(bounds);
  std::size_t homs = 0;
  for (auto const& e : u.entries) {
    for (auto const& a : e.acto) {
      auto fa = functor_F_obj(a);
      for (auto const& x : e.act0) {
        Act x_view = x.in_category(Category::ActO);
        for (auto const& f : enumerate_homs(a, x_view)) {
          std::size_t matches = 0;
          for (auto const& g : enumerate_homs(fa.act, x)) {
            bool commutes = true;
            for (Elem y = 0; y < a.size() && commutes; ++y) {
              commutes = g(fa.projection(y)) == f(y);
            }
            matches += commutes ? 1 : 0;
          }
          ActHom g = reflection_factorization(f);
          bool agrees = true;
          for (Elem y = 0; y < a.size() && agrees; ++y) {
            agrees = g(fa.projection(y)) == f(y);
          }
          if (matches != 1 || !agrees) {
            return fail("F_reflection", std::to_string(matches) +
                                            " factorizations at " + describe(a));
          }
          ++homs;
        }
      }
    }
  }
  return pass("F_reflection", std::to_string(homs) + " homs factor uniquely");
}

CheckResult check_coproduct_preservation(const SweepBounds& bounds) {
  SweepBounds members = bounds;
  members.act_size = bounds.family_act_size;
  Universe u = build_universe(members);
  std::size_t families = 0;
  for (auto const& e : u.entries) {
    std::vector<std::size_t> pick;
    std::optional<CheckResult> failure;
    std::function<void(std::size_t)> extend = [&](std::size_t start) {
      if (failure) {
        return;
      }
      if (!pick.empty()) {
        std::vector<Act> family;
        std::vector<Act> images;
        for (std::size_t i : pick) {
          family.push_back(e.acto[i]);
          images.push_back(functor_F_obj(e.acto[i]).act);
        }
        Act lhs = functor_F_obj(coproduct(e.monoid, Category::ActO, family).first).act;
        Act rhs = coproduct(e.monoid, Category::Act0, images).first;
        if (!is_isomorphic(lhs, rhs)) {
          failure = fail("F_preserves_coproducts",
                         "family starting with " + describe(family.front()));
          return;
        }
        ++families;
      }
      if (pick.size() == bounds.family_size) {
        return;
      }
      for (std::size_t i = start; i < e.acto.size(); ++i) {
        pick.push_back(i);
        extend(i);
        pick.pop_back();
      }
    };
    extend(0);
    if (failure) {
      return *failure;
    }
  }
  return pass("F_preserves_coproducts",
              std::to_string(families) + " families");
}

CheckResult check_projective_preservation(const SweepBounds& bounds) {
  std::size_t projective = 0;
  auto result = for_all_acts(
      "F_preserves_projectives", bounds, Category::ActO,
      [&](const Act& p) -> std::optional<std::string> {
        if (!is_projective(p, Category::ActO)) {
          return std::nullopt;
        }
        ++projective;
        if (!is_projective(functor_F_obj(p).act, Category::Act0)) {
          return "F(P) not projective";
        }
        return std::nullopt;
      });
  if (result.passed) {
    result.detail = std::to_string(projective) + " projective acts; " + result.detail;
  }
  return result;
}

CheckResult check_cover_preservation(const SweepBounds& bounds) {
  std::size_t covers = 0;
  auto result = for_all_acts(
      "F_preserves_projective_covers", bounds, Category::ActO,
      [&](const Act& a) -> std::optional<std::string> {
        std::optional<std::string> problem;
        for_each_projective_cover(
            a, Category::ActO, sufficient_cover_bound(a, Category::ActO),
            [&](const ProjectiveCover& pc) {
              ++covers;
              ActHom const& f = pc.cover.epi;
              auto fp = functor_F_obj(f.source());
              auto fa = functor_F_obj(a);
              ActHom ff = functor_F_mor(f);
              if (!is_projective(fp.act, Category::Act0)) {
                problem = "F(P) not projective";
              } else if (!(ff.target() == fa.act)) {
                problem = "F(f) does not land in F(A)";
              } else if (!is_cover(ff)) {
                problem = "F(f) is not a cover";
              }
              return !problem;
            });
        return problem;
      });
  if (result.passed) {
    result.detail = std::to_string(covers) + " covers; " + result.detail;
  }
  return result;
}

CheckResult check_unique_zero(const SweepBounds& bounds) {
  return for_all_acts("unique_zero", bounds, Category::ActO,
                      [](const Act& a) -> std::optional<std::string> {
                        if (is_cyclic(a) && a.zero_count() != 1) {
                          return "cyclic act with several zeros";
                        }
                        return std::nullopt;
                      });
}

CheckResult check_locally_cyclic_is_cyclic(const SweepBounds& bounds) {
  return for_all_acts("locally_cyclic_is_cyclic", bounds, Category::ActO,
                      [](const Act& a) -> std::optional<std::string> {
                        if (is_locally_cyclic(a) != is_cyclic(a).has_value()) {
                          return "locally cyclic and cyclic disagree";
                        }
                        return std::nullopt;
                      });
}

CheckResult check_hollow_indecomposable(const SweepBounds& bounds) {
  auto in_acto = for_all_acts(
      "hollow_indecomposable", bounds, Category::ActO,
      [](const Act& a) -> std::optional<std::string> {
        if (!is_hollow(a, Category::ActO)) {
          return std::nullopt;
        }
        if (!is_indecomposable(a, Category::ActO)) {
          return "hollow but decomposable in acto";
        }
        if (a.zero_count() == 1 && !is_indecomposable(a, Category::Act0)) {
          return "hollow but decomposable in act0";
        }
        return std::nullopt;
      });
  if (!in_acto.passed) {
    return in_acto;
  }
  auto in_act0 = for_all_acts(
      "hollow_indecomposable", bounds, Category::Act0,
      [](const Act& a) -> std::optional<std::string> {
        if (is_hollow(a, Category::Act0) &&
            !is_indecomposable(a, Category::Act0)) {
          return "hollow but decomposable in act0";
        }
        return std::nullopt;
      });
  if (in_act0.passed) {
    in_act0.detail = in_acto.detail + " (acto); " + in_act0.detail + " (act0)";
  }
  return in_act0;
}

CheckResult check_hollow_lemma(const SweepBounds& bounds) {
  std::size_t applicable = 0;
  auto result = for_all_acts(
      "hollow_lemma", bounds, Category::ActO,
      [&](const Act& a) -> std::optional<std::string> {
        if (!is_superfluous(a, zero_set(a))) {
          return std::nullopt;
        }
        ++applicable;
        bool lhs = is_hollow(a, Category::ActO);
        bool rhs = is_hollow(functor_F_obj(a).act, Category::Act0);
        if (lhs != rhs) {
          return "A hollow is " + std::string(lhs ? "true" : "false") +
                 " but F(A) hollow is " + (rhs ? "true" : "false");
        }
        return std::nullopt;
      });
  if (result.passed) {
    result.detail = std::to_string(applicable) + " acts with 0A superfluous; " +
                    result.detail;
  }
  return result;
}

CheckResult check_preimage_cyclic(const SweepBounds& bounds) {
  return for_all_acts(
      "preim_cyclic", bounds, Category::ActO,
      [](const Act& a) -> std::optional<std::string> {
        Act fa = functor_F_obj(a).act;
        if (fa.size() < 2 || !is_cyclic(fa)) {
          return std::nullopt;
        }
        if (!is_cyclic(substantial_summand(a).substantial.as_act())) {
          return "F(A) cyclic but the substantial summand is not";
        }
        return std::nullopt;
      });
}

CheckResult check_substantial_summands(const SweepBounds& bounds) {
  return for_all_acts(
      "substantial_summands", bounds, Category::ActO,
      [](const Act& a) -> std::optional<std::string> {
        Subact zeros = zero_set(a);
        Monoid const& m = a.monoid();
        for (Elem z : zeros.members()) {
          for (Elem s = 0; s < m.size(); ++s) {
            if (a.act(s, z) != z) {
              return "a zero element is moved";
            }
          }
        }
        auto sub = substantial_summand(a);  // checks the reconstruction iso
        ActHom const& iso = sub.reconstruction;
        if (!iso.is_injective() || !iso.is_surjective()) {
          return "reconstruction is not bijective";
        }
        Act core = sub.substantial.as_act();
        if (core.size() > 1) {
          for (auto const& c : decompose(core, Category::ActO).components) {
            if (c.size() == 1) {
              return "substantial summand still has a θ summand";
            }
          }
        }
        if (is_indecomposable(a, Category::ActO)) {
          if (!sub.discrete_zeros.empty() || sub.substantial.size() != a.size()) {
            return "indecomposable act is not its own substantial summand";
          }
          if (!is_superfluous(a, zeros)) {
            return "indecomposable act with 0A not superfluous";
          }
        }
        return std::nullopt;
      });
}

CheckResult check_indecomposability_examples() {
  Act w = fixtures::act_w();
  std::size_t in_acto = decompose(w, Category::ActO).components.size();
  std::size_t in_act0 = decompose(w, Category::Act0).components.size();
  bool fw_is_w = functor_F_obj(w).act.size() == w.size();
  Act theta = theta_act(w.monoid(), Category::ActO);
  std::vector<std::string> detail;
  bool ok = in_acto == 1 && in_act0 == 2 && fw_is_w;
  // Indecomposable A in Act0 plus discrete zeros: decomposable, F(B) ≅ A.
  Act a = fixtures::act_a();
  for (std::size_t zeros = 1; zeros <= 3; ++zeros) {
    std::vector<Act> parts{a};
    for (std::size_t i = 0; i < zeros; ++i) {
      parts.push_back(theta);
    }
    Act b = coproduct(Category::ActO, parts).first;
    Act fb = functor_F_obj(b).act;
    ok = ok && decompose(b, Category::ActO).components.size() == zeros + 1 &&
         is_indecomposable(fb, Category::Act0) &&
         is_isomorphic(fb, a.in_category(Category::Act0)).has_value();
  }
  std::string text = "ActW components acto=" + std::to_string(in_acto) +
                     " act0=" + std::to_string(in_act0);
  return ok ? pass("indecomposability_examples", text)
            : fail("indecomposability_examples", text);
}

CheckResult check_non_projective_preimage() {
  std::string detail;
  bool ok = true;
  for (auto const& m : {fixtures::s2(), fixtures::g0()}) {
    Act s = regular_act(m, Category::ActO);
    Act fa = functor_F_obj(coproduct(Category::ActO, {s, s}).first).act;
    bool o = is_projective(fa.in_category(Category::ActO), Category::ActO).has_value();
    bool z = is_projective(fa, Category::Act0).has_value();
    ok = ok && !o && z;
    detail += (detail.empty() ? "" : "; ") + std::string("|S|=") +
              std::to_string(m.size()) + " acto=" + (o ? "projective" : "not") +
              " act0=" + (z ? "projective" : "not");
  }
  return ok ? pass("non_projective_preimage", detail)
            : fail("non_projective_preimage", detail);
}

CheckResult check_char_0perfect(std::size_t monoid_size, std::size_t act_size) {
  std::size_t count = 0;
  for (auto const& m : enumerate_monoids_with_zero_up_to(monoid_size)) {
    auto perfect = is_left_perfect(m, act_size);
    auto zero_perfect = is_left_0perfect(m, act_size);
    if (perfect.verdict != Verdict::HoldsWithinBounds ||
        zero_perfect.verdict != Verdict::HoldsWithinBounds) {
      std::string why = !perfect.witnesses.empty()
                            ? perfect.witnesses.front().reason + " at " +
                                  describe(perfect.witnesses.front().act)
                            : zero_perfect.witnesses.front().reason + " at " +
                                  describe(zero_perfect.witnesses.front().act);
      return fail("char_0perfect", why);
    }
    ++count;
  }
  return pass("char_0perfect", std::to_string(count) +
                                   " monoids left perfect and left 0-perfect");
}

CheckResult check_char_0steady(std::size_t monoid_size, std::size_t act_size) {
  std::size_t count = 0;
  for (auto const& m : enumerate_monoids_with_zero_up_to(monoid_size)) {
    auto steady = is_left_steady(m, act_size);
    auto zero_steady = is_left_0steady(m, act_size);
    auto acc = acc_cyclic_subacts_report(m, act_size);
    if (steady.verdict != Verdict::HoldsWithinBounds ||
        zero_steady.verdict != Verdict::HoldsWithinBounds ||
        acc.verdict != Verdict::Holds) {
      std::string why = "verdicts " + std::string(to_string(steady.verdict)) +
                        "/" + std::string(to_string(zero_steady.verdict)) +
                        "/" + std::string(to_string(acc.verdict));
      for (auto const* r : {&steady, &zero_steady}) {
        if (!r->witnesses.empty()) {
          why += " at " + describe(r->witnesses.front().act);
          break;
        }
      }
      return fail("char_0steady", why);
    }
    ++count;
  }
  return pass("char_0steady",
              std::to_string(count) + " monoids: no hollow non-cyclic act");
}

std::vector<CheckResult> verify_paper(const VerifyBounds& bounds) {
  std::vector<CheckResult> out;
  out.push_back(check_f_not_faithful());
  out.push_back(check_f_not_left_exact());
  out.push_back(check_reflection(bounds.sweep));
  out.push_back(check_coproduct_preservation(bounds.sweep));
  out.push_back(check_projective_preservation(bounds.sweep));
  out.push_back(check_cover_preservation(bounds.sweep));
  out.push_back(check_unique_zero(bounds.sweep));
  out.push_back(check_locally_cyclic_is_cyclic(bounds.sweep));
  out.push_back(check_hollow_indecomposable(bounds.sweep));
  out.push_back(check_hollow_lemma(bounds.sweep));
  out.push_back(check_preimage_cyclic(bounds.sweep));
  out.push_back(check_substantial_summands(bounds.sweep));
  out.push_back(check_indecomposability_examples());
  out.push_back(check_non_projective_preimage());
  out.push_back(
      check_char_0perfect(bounds.perfect_monoid_size, bounds.perfect_act_size));
  out.push_back(
      check_char_0steady(bounds.steady_monoid_size, bounds.steady_act_size));
  return out;
}

}  // namespace monact
