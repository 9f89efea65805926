#include "monact/structure.hpp"

#include <functional>
#include <numeric>

#include "monact/constructions.hpp"
#include "monact/core.hpp"
#include "monact/enumeration.hpp"
#include "monact/error.hpp"

namespace monact {

namespace {

void require_nonempty(const Act& a) {
  if (a.empty()) {
    throw Error(ErrorKind::EmptyAct, "operation needs a nonempty act");
  }
}

bool all_set(const ElemSet& set) {
  for (bool b : set) {
    if (!b) {
      return false;
    }
  }
  return true;
}

ElemSet orbit(const Act& a, Elem x) {
  ElemSet out(a.size(), false);
  for (Elem s = 0; s < a.monoid().size(); ++s) {
    out[a.act(s, x)] = true;
  }
  return out;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), Elem{0});
  }
  Elem find(Elem x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void join(Elem x, Elem y) {
    x = find(x);
    y = find(y);
    if (x < y) {
      parent_[y] = x;
    } else if (y < x) {
      parent_[x] = y;
    }
  }

 private:
  std::vector<Elem> parent_;
};

}  // namespace

std::optional<Elem> is_cyclic(const Act& a) {
  require_nonempty(a);
  for (Elem g = 0; g < a.size(); ++g) {
    if (all_set(orbit(a, g))) {
      return g;
    }
  }
  return std::nullopt;
}

std::optional<std::pair<Elem, Elem>> locally_cyclic_violation(const Act& a) {
  require_nonempty(a);
  std::vector<ElemSet> orbits;
  for (Elem b = 0; b < a.size(); ++b) {
    orbits.push_back(orbit(a, b));
  }
  for (Elem x = 0; x < a.size(); ++x) {
    for (Elem y = x + 1; y < a.size(); ++y) {
      bool bounded = false;
      for (Elem b = 0; b < a.size() && !bounded; ++b) {
        bounded = orbits[b][x] && orbits[b][y];
      }
      if (!bounded) {
        return std::pair{x, y};
      }
    }
  }
  return std::nullopt;
}

bool is_locally_cyclic(const Act& a) {
  return !locally_cyclic_violation(a).has_value();
}

bool is_superfluous(const Act& a, const Subact& b) {
  if (!(b.parent() == a)) {
    throw Error(ErrorKind::NotASubact, "subact of a different act");
  }
  // Proper subacts are nonempty, so A is superfluous in itself exactly when
  // it has no proper subact at all.
  if (b.size() == a.size()) {
    return a.size() == 1;
  }
  ElemSet rest(a.size(), false);
  for (Elem x = 0; x < a.size(); ++x) {
    rest[x] = !b.contains(x);
  }
  return all_set(closure(a, rest));
}

std::vector<Subact> maximal_proper_subacts(const Act& a) {
  std::vector<Subact> proper;
  for (auto& sub : all_subacts(a)) {
    if (sub.is_proper() && !sub.empty()) {
      proper.push_back(std::move(sub));
    }
  }
  std::vector<Subact> out;
  for (std::size_t i = 0; i < proper.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < proper.size() && maximal; ++j) {
      maximal = i == j || !(proper[i].size() < proper[j].size() &&
                            proper[i].subset_of(proper[j]));
    }
    if (maximal) {
      out.push_back(proper[i]);
    }
  }
  return out;
}

bool is_hollow(const Act& a, Category category) {
  require_nonempty(a);
  return maximal_proper_subacts(a.in_category(category)).size() <= 1;
}

bool is_hollow(const Act& a) { return is_hollow(a, a.category()); }

Decomposition decompose(const Act& a, Category category) {
  require_nonempty(a);
  Act view = a.in_category(category);
  Monoid const& m = view.monoid();
  std::optional<Elem> theta = view.designated_zero();
  UnionFind uf(view.size());
  for (Elem x = 0; x < view.size(); ++x) {
    for (Elem s = 0; s < m.size(); ++s) {
      Elem y = view.act(s, x);
      if (theta && (x == *theta || y == *theta)) {
        continue;
      }
      uf.join(x, y);
    }
  }
  std::vector<Subact> components;
  for (Elem root = 0; root < view.size(); ++root) {
    if (uf.find(root) != root || (theta && root == *theta)) {
      continue;
    }
    ElemSet mask(view.size(), false);
    for (Elem x = 0; x < view.size(); ++x) {
      mask[x] = uf.find(x) == root;
    }
    if (theta) {
      mask[*theta] = true;
    }
    components.push_back(Subact::make(view, std::move(mask)));
  }
  if (components.empty()) {
    components.push_back(zero_set(view));
  }
  return Decomposition{view, category, std::move(components)};
}

Decomposition decompose(const Act& a) { return decompose(a, a.category()); }

bool is_indecomposable(const Act& a, Category category) {
  return decompose(a, category).components.size() == 1;
}

std::optional<CompactnessWitness> compactness_counterexample(
    const Act& c, Category category, CompactnessBounds bounds) {
  require_nonempty(c);
  Act view = c.in_category(category);
  Monoid const& m = view.monoid();
  std::vector<Act> pool;
  for (auto const& candidate : enumerate_acts(m, bounds.size_bound, category)) {
    // ∅ (ActO) and θ (Act0) are coproduct units; they never split a hom.
    if (category == Category::ActO ? candidate.empty()
                                   : candidate.size() == 1) {
      continue;
    }
    pool.push_back(candidate);
  }
  std::optional<CompactnessWitness> found;
  std::vector<std::size_t> pick;
  // Multisets of pool indices, non-decreasing, of size 2..family_bound.
  std::function<bool(std::size_t)> extend = [&](std::size_t start) -> bool {
    if (pick.size() >= 2) {
      std::vector<Act> family;
      for (std::size_t i : pick) {
        family.push_back(pool[i]);
      }
      auto [sum, tag] = coproduct(m, category, family);
      std::vector<ElemSet> images;
      for (auto const& inj : tag.injections) {
        images.push_back(inj.image());
      }
      for_each_hom(view, sum, [&](const std::vector<Elem>& map) {
        for (auto const& img : images) {
          bool inside = true;
          for (Elem v : map) {
            inside = inside && img[v];
          }
          if (inside) {
            return true;
          }
        }
        found = CompactnessWitness{family,
                                   HomBuilder::trusted(view, sum, map)};
        return false;
      });
      if (found) {
        return false;
      }
    }
    if (pick.size() == bounds.family_bound) {
      return true;
    }
    for (std::size_t i = start; i < pool.size(); ++i) {
      pick.push_back(i);
      bool go_on = extend(i);
      pick.pop_back();
      if (!go_on) {
        return false;
      }
    }
    return true;
  };
  extend(0);
  return found;
}

bool is_compact_bounded(const Act& c, Category category,
                        std::size_t family_bound, std::size_t size_bound) {
  return !compactness_counterexample(c, category,
                                     {family_bound, size_bound})
              .has_value();
}

}  // namespace monact
