#include "monact/core.hpp"

#include <algorithm>
#include <set>

#include "monact/error.hpp"

namespace monact {

namespace {

constexpr Elem kUnset = static_cast<Elem>(-1);

// Backtracking over source elements in index order. Fixing x -> y forces
// sx -> sy for every s, so each choice maps the whole cyclic subact Sx.
class HomSearch {
 public:
  HomSearch(const Act& a, const Act& b, bool injective,
            const std::vector<std::vector<std::size_t>>* inv_a,
            const std::vector<std::vector<std::size_t>>* inv_b)
      : a_(a),
        b_(b),
        injective_(injective),
        inv_a_(inv_a),
        inv_b_(inv_b),
        map_(a.size(), kUnset),
        used_(b.size(), false) {}

  // Returns false when the visitor asked to stop.
  bool run(const std::function<bool(const std::vector<Elem>&)>& visit) {
    if (a_.category() == Category::Act0) {
      std::vector<Elem> trail;
      if (!assign(a_.theta(), b_.theta(), trail)) {
        return true;
      }
    }
    return search(0, visit);
  }

 private:
  bool assign(Elem x, Elem y, std::vector<Elem>& trail) {
    Monoid const& m = a_.monoid();
    for (Elem s = 0; s < m.size(); ++s) {
      Elem sx = a_.act(s, x);
      Elem sy = b_.act(s, y);
      if (map_[sx] != kUnset) {
        if (map_[sx] != sy) {
          undo(trail);
          return false;
        }
        continue;
      }
      if (injective_) {
        if (used_[sy] || (*inv_a_)[sx] != (*inv_b_)[sy]) {
          undo(trail);
          return false;
        }
        used_[sy] = true;
      }
      map_[sx] = sy;
      trail.push_back(sx);
    }
    return true;
  }

  void undo(std::vector<Elem>& trail) {
    for (Elem x : trail) {
      if (injective_) {
        used_[map_[x]] = false;
      }
      map_[x] = kUnset;
    }
    trail.clear();
  }

  bool search(Elem from,
              const std::function<bool(const std::vector<Elem>&)>& visit) {
    Elem x = from;
    while (x < a_.size() && map_[x] != kUnset) {
      ++x;
    }
    if (x == a_.size()) {
      return visit(map_);
    }
    for (Elem y = 0; y < b_.size(); ++y) {
      std::vector<Elem> trail;
      if (!assign(x, y, trail)) {
        continue;
      }
      bool keep_going = search(x + 1, visit);
      undo(trail);
      if (!keep_going) {
        return false;
      }
    }
    return true;
  }

  const Act& a_;
  const Act& b_;
  bool injective_;
  const std::vector<std::vector<std::size_t>>* inv_a_;
  const std::vector<std::vector<std::size_t>>* inv_b_;
  std::vector<Elem> map_;
  std::vector<bool> used_;
};

void require_compatible(const Act& a, const Act& b) {
  require_same_monoid(a, b);
  if (a.category() != b.category()) {
    throw Error(ErrorKind::CategoryMismatch,
                "homs between " + std::string(to_string(a.category())) +
                    " and " + std::string(to_string(b.category())));
  }
}

}  // namespace

Subact zero_set(const Act& a) {
  ElemSet mask(a.size(), false);
  for (Elem x = 0; x < a.size(); ++x) {
    mask[a.act(a.monoid().zero(), x)] = true;
  }
  return Subact::make(a, std::move(mask));
}

void for_each_hom(const Act& a,
                  const Act& b,
                  const std::function<bool(const std::vector<Elem>&)>& visit) {
  require_compatible(a, b);
  if (b.empty() && !a.empty()) {
    return;
  }
  HomSearch(a, b, false, nullptr, nullptr).run(visit);
}

std::vector<ActHom> enumerate_homs(const Act& a, const Act& b) {
  std::vector<ActHom> out;
  for_each_hom(a, b, [&](const std::vector<Elem>& map) {
    out.push_back(HomBuilder::trusted(a, b, map));
    return true;
  });
  return out;
}

std::vector<ActHom> enumerate_homs(const Act& a, const Act& b,
                                   Category category) {
  return enumerate_homs(a.in_category(category), b.in_category(category));
}

std::size_t count_homs(const Act& a, const Act& b) {
  std::size_t count = 0;
  for_each_hom(a, b, [&](const std::vector<Elem>&) {
    ++count;
    return true;
  });
  return count;
}

std::vector<std::vector<std::size_t>> element_invariants(const Act& a) {
  Monoid const& m = a.monoid();
  std::vector<std::vector<std::size_t>> inv(a.size());
  std::vector<std::size_t> indegree(a.size() * m.size(), 0);
  for (Elem s = 0; s < m.size(); ++s) {
    for (Elem x = 0; x < a.size(); ++x) {
      ++indegree[a.act(s, x) * m.size() + s];
    }
  }
  for (Elem x = 0; x < a.size(); ++x) {
    std::set<Elem> orbit;
    for (Elem s = 0; s < m.size(); ++s) {
      orbit.insert(a.act(s, x));
    }
    inv[x].push_back(a.is_zero(x) ? 0 : 1);
    inv[x].push_back(orbit.size());
    for (Elem s = 0; s < m.size(); ++s) {
      inv[x].push_back(indegree[x * m.size() + s]);
    }
  }
  return inv;
}

std::optional<ActHom> is_isomorphic(const Act& a, const Act& b) {
  require_compatible(a, b);
  if (a.size() != b.size() || a.zero_count() != b.zero_count()) {
    return std::nullopt;
  }
  auto inv_a = element_invariants(a);
  auto inv_b = element_invariants(b);
  {
    auto sa = inv_a;
    auto sb = inv_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) {
      return std::nullopt;
    }
  }
  std::optional<ActHom> witness;
  HomSearch(a, b, true, &inv_a, &inv_b).run([&](const std::vector<Elem>& map) {
    witness = HomBuilder::trusted(a, b, map);
    return false;
  });
  return witness;
}

ElemSet closure(const Act& a, const ElemSet& generators) {
  Monoid const& m = a.monoid();
  ElemSet out(a.size(), false);
  for (Elem x = 0; x < a.size(); ++x) {
    if (!generators[x]) {
      continue;
    }
    for (Elem s = 0; s < m.size(); ++s) {
      out[a.act(s, x)] = true;
    }
  }
  if (a.category() == Category::Act0) {
    out[a.theta()] = true;
  }
  return out;
}

Subact subact_generated(const Act& a, std::span<const Elem> generators) {
  if (generators.empty() && a.category() == Category::Act0) {
    throw Error(ErrorKind::EmptyGeneratorInAct0,
                "a subact in act0 needs a generator");
  }
  ElemSet mask(a.size(), false);
  for (Elem x : generators) {
    if (x >= a.size()) {
      throw Error(ErrorKind::NotASubact, "generator out of range");
    }
    mask[x] = true;
  }
  return Subact::make(a, closure(a, mask));
}

Subact cyclic_subact(const Act& a, Elem generator) {
  Elem g[] = {generator};
  return subact_generated(a, g);
}

std::vector<Subact> all_subacts(const Act& a) {
  // Every subact is a union of cyclic subacts.
  std::vector<ElemSet> cyclic;
  for (Elem x = 0; x < a.size(); ++x) {
    ElemSet g(a.size(), false);
    g[x] = true;
    cyclic.push_back(closure(a, g));
  }
  ElemSet base = closure(a, ElemSet(a.size(), false));
  std::set<ElemSet> seen{base};
  std::vector<ElemSet> frontier{base};
  while (!frontier.empty()) {
    std::vector<ElemSet> next;
    for (auto const& set : frontier) {
      for (auto const& c : cyclic) {
        ElemSet u = set;
        for (std::size_t i = 0; i < u.size(); ++i) {
          u[i] = u[i] || c[i];
        }
        if (seen.insert(u).second) {
          next.push_back(std::move(u));
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::pair<std::vector<Elem>, ElemSet>> keyed;
  for (auto const& set : seen) {
    std::vector<Elem> members;
    for (Elem x = 0; x < set.size(); ++x) {
      if (set[x]) {
        members.push_back(x);
      }
    }
    keyed.emplace_back(std::move(members), set);
  }
  std::sort(keyed.begin(), keyed.end(), [](auto const& l, auto const& r) {
    if (l.first.size() != r.first.size()) {
      return l.first.size() < r.first.size();
    }
    return l.first < r.first;
  });
  std::vector<Subact> out;
  out.reserve(keyed.size());
  for (auto& [members, set] : keyed) {
    out.push_back(Subact::make(a, std::move(set)));
  }
  return out;
}

std::pair<Act, ActHom> rees_quotient(const Act& a, const Subact& b) {
  if (!(b.parent() == a)) {
    throw Error(ErrorKind::NotASubact, "subact of a different act");
  }
  if (b.empty()) {
    throw Error(ErrorKind::NotASubact, "cannot collapse the empty subact");
  }
  std::vector<Elem> block(a.size());
  Elem collapsed = b.members().front();
  for (Elem x = 0; x < a.size(); ++x) {
    block[x] = b.contains(x) ? collapsed : x;
  }
  return ActCongruence::make(a, std::move(block)).quotient();
}

}  // namespace monact
