#include "monact/classifiers.hpp"

#include <algorithm>
#include <set>

#include "monact/core.hpp"
#include "monact/enumeration.hpp"
#include "monact/projectivity.hpp"
#include "monact/structure.hpp"

namespace monact {

namespace {

constexpr std::string_view kNoCover = "no_projective_cover";
constexpr std::string_view kLocallyCyclic = "locally_cyclic_not_cyclic";
constexpr std::string_view kHollow = "hollow_not_cyclic";

std::vector<Act> nonempty_acts(const Monoid& monoid, std::size_t bound,
                               Category category) {
  std::vector<Act> out;
  for (auto& a : enumerate_acts(monoid, bound, category)) {
    if (!a.empty()) {
      out.push_back(std::move(a));
    }
  }
  return out;
}

std::optional<std::string> cover_check(const Act& a, Category category) {
  std::size_t bound = sufficient_cover_bound(a, category);
  if (projective_cover(a, category, bound)) {
    return std::nullopt;
  }
  return std::string(kNoCover) + ": none with domain size <= " +
         std::to_string(bound);
}

std::optional<std::string> locally_cyclic_check(const Act& a) {
  if (is_locally_cyclic(a) && !is_cyclic(a)) {
    return std::string(kLocallyCyclic);
  }
  return std::nullopt;
}

std::optional<std::string> hollow_check(const Act& a) {
  if (is_hollow(a) && !is_cyclic(a)) {
    return std::string(kHollow);
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::HoldsWithinBounds: return "holds-within-bounds";
  }
  return "unknown";
}

std::vector<Act> cyclic_acts(const Monoid& monoid, Category category) {
  std::set<CanonicalForm> seen;
  std::vector<Act> out;
  for (auto const& rho : enumerate_left_congruences(monoid)) {
    Act quotient = rho.quotient().first.in_category(category);
    if (seen.insert(canonical_form(quotient)).second) {
      out.push_back(std::move(quotient));
    }
  }
  return out;
}

ClassifierReport sweep(
    const Monoid& monoid, std::string property,
    std::map<std::string, std::size_t> bounds, const std::vector<Act>& acts,
    const std::function<std::optional<std::string>(const Act&)>& check) {
  ClassifierReport report{monoid, std::move(property),
                          Verdict::HoldsWithinBounds, std::move(bounds), {}, {}};
  for (auto const& a : acts) {
    if (auto reason = check(a)) {
      report.witnesses.push_back({std::move(*reason), a});
    }
  }
  if (!report.witnesses.empty()) {
    report.verdict = Verdict::Fails;
  }
  return report;
}

ClassifierReport is_left_perfect(const Monoid& monoid,
                                 std::size_t act_size_bound) {
  std::map<std::string, std::size_t> bounds{{"act_size", act_size_bound}};
  auto cyclic = cyclic_acts(monoid, Category::ActO);
  auto report = sweep(monoid, "left_perfect", bounds, cyclic, [](const Act& a) {
    return cover_check(a, Category::ActO);
  });
  auto local = sweep(monoid, "left_perfect", bounds,
                     nonempty_acts(monoid, act_size_bound, Category::ActO),
                     locally_cyclic_check);
  for (auto& w : local.witnesses) {
    report.witnesses.push_back(std::move(w));
  }
  if (!report.witnesses.empty()) {
    report.verdict = Verdict::Fails;
  }
  return report;
}

ClassifierReport is_left_0perfect(const Monoid& monoid,
                                  std::size_t act_size_bound) {
  return sweep(monoid, "left_0perfect", {{"act_size", act_size_bound}},
               nonempty_acts(monoid, act_size_bound, Category::Act0),
               [](const Act& a) { return cover_check(a, Category::Act0); });
}

std::size_t longest_cyclic_chain(const Act& a) {
  std::vector<ElemSet> cyclic;
  {
    std::set<ElemSet> seen;
    for (Elem x = 0; x < a.size(); ++x) {
      ElemSet mask = cyclic_subact(a, x).mask();
      if (seen.insert(mask).second) {
        cyclic.push_back(std::move(mask));
      }
    }
  }
  auto count = [](const ElemSet& s) {
    std::size_t c = 0;
    for (bool b : s) {
      c += b ? 1 : 0;
    }
    return c;
  };
  auto below = [](const ElemSet& x, const ElemSet& y) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] && !y[i]) {
        return false;
      }
    }
    return x != y;
  };
  // Longest path in the strict inclusion order, processed by size.
  std::sort(cyclic.begin(), cyclic.end(),
            [&](const ElemSet& x, const ElemSet& y) { return count(x) < count(y); });
  std::vector<std::size_t> longest(cyclic.size(), 1);
  std::size_t best = 0;
  for (std::size_t i = 0; i < cyclic.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (below(cyclic[j], cyclic[i])) {
        longest[i] = std::max(longest[i], longest[j] + 1);
      }
    }
    best = std::max(best, longest[i]);
  }
  return best;
}

ClassifierReport acc_cyclic_subacts_report(const Monoid& monoid,
                                           std::size_t act_size_bound) {
  ClassifierReport report{monoid, "acc_cyclic_subacts", Verdict::Holds,
                          {{"act_size", act_size_bound}}, {}, {}};
  for (Category cat : {Category::ActO, Category::Act0}) {
    for (auto const& a : nonempty_acts(monoid, act_size_bound, cat)) {
      ++report.chain_profile[longest_cyclic_chain(a)];
    }
  }
  // Chains of cyclic subacts strictly grow in size and |Sa| <= |S|.
  if (!report.chain_profile.empty() &&
      report.chain_profile.rbegin()->first > monoid.size()) {
    report.verdict = Verdict::Fails;
  }
  return report;
}

ClassifierReport is_left_steady(const Monoid& monoid,
                                std::size_t act_size_bound) {
  return sweep(monoid, "left_steady", {{"act_size", act_size_bound}},
               nonempty_acts(monoid, act_size_bound, Category::ActO),
               hollow_check);
}

ClassifierReport is_left_0steady(const Monoid& monoid,
                                 std::size_t act_size_bound) {
  return sweep(monoid, "left_0steady", {{"act_size", act_size_bound}},
               nonempty_acts(monoid, act_size_bound, Category::Act0),
               hollow_check);
}

bool witnesses_recheck(const ClassifierReport& report) {
  for (auto const& w : report.witnesses) {
    std::string_view reason = w.reason;
    bool confirmed = false;
    if (reason.starts_with(kNoCover)) {
      confirmed = cover_check(w.act, w.act.category()).has_value();
    } else if (reason.starts_with(kLocallyCyclic)) {
      confirmed = locally_cyclic_check(w.act).has_value();
    } else if (reason.starts_with(kHollow)) {
      confirmed = hollow_check(w.act).has_value();
    }
    if (!confirmed) {
      return false;
    }
  }
  return true;
}

}  // namespace monact
