#include "monact/enumeration.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "monact/constructions.hpp"
#include "monact/core.hpp"
#include "monact/error.hpp"

namespace monact {

namespace {

constexpr Elem kUnset = static_cast<Elem>(-1);

// Colour refinement: start from element_invariants, then repeatedly split
// by the colours of images and preimages until stable. The colour order is
// derived from isomorphism-invariant data only.
std::vector<std::size_t> refined_colours(const Act& a) {
  Monoid const& m = a.monoid();
  auto inv = element_invariants(a);
  std::vector<std::size_t> colour(a.size());
  {
    std::vector<std::vector<std::size_t>> sorted = inv;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Elem x = 0; x < a.size(); ++x) {
      colour[x] = static_cast<std::size_t>(
          std::lower_bound(sorted.begin(), sorted.end(), inv[x]) -
          sorted.begin());
    }
  }
  std::size_t classes = std::set<std::size_t>(colour.begin(), colour.end()).size();
  while (true) {
    std::vector<std::vector<std::size_t>> sig(a.size());
    for (Elem x = 0; x < a.size(); ++x) {
      sig[x].push_back(colour[x]);
      for (Elem s = 0; s < m.size(); ++s) {
        sig[x].push_back(colour[a.act(s, x)]);
      }
      for (Elem s = 0; s < m.size(); ++s) {
        std::vector<std::size_t> pre;
        for (Elem y = 0; y < a.size(); ++y) {
          if (a.act(s, y) == x) {
            pre.push_back(colour[y]);
          }
        }
        std::sort(pre.begin(), pre.end());
        sig[x].push_back(pre.size());
        sig[x].insert(sig[x].end(), pre.begin(), pre.end());
      }
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Elem x = 0; x < a.size(); ++x) {
      colour[x] = static_cast<std::size_t>(
          std::lower_bound(sorted.begin(), sorted.end(), sig[x]) -
          sorted.begin());
    }
    if (sorted.size() == classes) {
      return colour;
    }
    classes = sorted.size();
  }
}

std::vector<std::uint32_t> encode_act(const Act& a,
                                      const std::vector<Elem>& position) {
  Monoid const& m = a.monoid();
  std::vector<Elem> order(a.size());
  for (Elem x = 0; x < a.size(); ++x) {
    order[position[x]] = x;
  }
  std::vector<std::uint32_t> code;
  code.reserve(2 + m.size() * a.size());
  code.push_back(a.category() == Category::ActO ? 0 : 1);
  code.push_back(static_cast<std::uint32_t>(a.size()));
  for (Elem s = 0; s < m.size(); ++s) {
    for (Elem p = 0; p < a.size(); ++p) {
      code.push_back(position[a.act(s, order[p])]);
    }
  }
  return code;
}

}  // namespace

CanonicalForm canonical_form(const Monoid& monoid) {
  std::size_t const n = monoid.size();
  std::vector<Elem> rest;
  for (Elem x = 0; x < n; ++x) {
    if (x != monoid.one() && x != monoid.zero()) {
      rest.push_back(x);
    }
  }
  std::vector<std::uint32_t> best;
  do {
    std::vector<Elem> order{monoid.one(), monoid.zero()};
    order.insert(order.end(), rest.begin(), rest.end());
    std::vector<Elem> position(n);
    for (Elem p = 0; p < n; ++p) {
      position[order[p]] = p;
    }
    std::vector<std::uint32_t> code{static_cast<std::uint32_t>(n)};
    for (Elem p = 0; p < n; ++p) {
      for (Elem q = 0; q < n; ++q) {
        code.push_back(position[monoid.mul(order[p], order[q])]);
      }
    }
    if (best.empty() || code < best) {
      best = std::move(code);
    }
  } while (std::next_permutation(rest.begin(), rest.end()));
  return CanonicalForm{std::move(best)};
}

CanonicalForm canonical_form(const Act& a) {
  if (a.empty()) {
    return CanonicalForm{{0, 0}};
  }
  auto colour = refined_colours(a);
  std::size_t const classes = *std::max_element(colour.begin(), colour.end()) + 1;
  std::vector<std::vector<Elem>> members(classes);
  for (Elem x = 0; x < a.size(); ++x) {
    members[colour[x]].push_back(x);
  }
  // Each class occupies a contiguous block of positions; try every
  // arrangement inside each block.
  std::vector<Elem> position(a.size());
  std::vector<std::uint32_t> best;
  std::function<void(std::size_t)> arrange = [&](std::size_t c) {
    if (c == classes) {
      auto code = encode_act(a, position);
      if (best.empty() || code < best) {
        best = std::move(code);
      }
      return;
    }
    Elem base = 0;
    for (std::size_t d = 0; d < c; ++d) {
      base += static_cast<Elem>(members[d].size());
    }
    auto perm = members[c];
    std::sort(perm.begin(), perm.end());
    do {
      for (Elem i = 0; i < perm.size(); ++i) {
        position[perm[i]] = base + i;
      }
      arrange(c + 1);
    } while (std::next_permutation(perm.begin(), perm.end()));
  };
  arrange(0);
  return CanonicalForm{std::move(best)};
}

// Monoids --------------------------------------------------------------------

void for_each_monoid_with_zero(std::size_t n,
                               const std::function<bool(const Monoid&)>& visit) {
  if (n < 2) {
    throw Error(ErrorKind::ZeroEqualsOne,
                "a monoid with zero and 0 != 1 has at least two elements");
  }
  if (n > kMaxMonoidSize) {
    throw Error(ErrorKind::BoundTooLarge,
                "monoid enumeration is capped at " +
                    std::to_string(kMaxMonoidSize) + " elements");
  }
  // Index 0 is the identity, 1 the zero; their rows and columns are forced.
  std::vector<Elem> table(n * n, kUnset);
  for (Elem x = 0; x < n; ++x) {
    table[0 * n + x] = x;
    table[x * n + 0] = x;
    table[1 * n + x] = 1;
    table[x * n + 1] = 1;
  }
  std::vector<std::pair<Elem, Elem>> cells;
  for (Elem x = 2; x < n; ++x) {
    for (Elem y = 2; y < n; ++y) {
      cells.emplace_back(x, y);
    }
  }
  auto consistent = [&]() {
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        Elem xy = table[x * n + y];
        if (xy == kUnset) {
          continue;
        }
        for (Elem z = 0; z < n; ++z) {
          Elem yz = table[y * n + z];
          if (yz == kUnset) {
            continue;
          }
          Elem left = table[xy * n + z];
          Elem right = table[x * n + yz];
          if (left != kUnset && right != kUnset && left != right) {
            return false;
          }
        }
      }
    }
    return true;
  };
  std::vector<std::string> labels{"1", "0"};
  for (Elem x = 2; x < n; ++x) {
    labels.push_back(std::string(1, static_cast<char>('a' + (x - 2))));
  }
  std::set<CanonicalForm> seen;
  bool stopped = false;
  std::function<void(std::size_t)> fill = [&](std::size_t k) {
    if (stopped) {
      return;
    }
    if (k == cells.size()) {
      std::vector<std::vector<Elem>> rows(n);
      for (Elem x = 0; x < n; ++x) {
        rows[x].assign(table.begin() + x * n, table.begin() + (x + 1) * n);
      }
      Monoid monoid = Monoid::validate(labels, std::move(rows), 0, 1);
      if (seen.insert(canonical_form(monoid)).second && !visit(monoid)) {
        stopped = true;
      }
      return;
    }
    auto [x, y] = cells[k];
    for (Elem v = 0; v < n && !stopped; ++v) {
      table[x * n + y] = v;
      if (consistent()) {
        fill(k + 1);
      }
    }
    table[x * n + y] = kUnset;
  };
  fill(0);
}

std::vector<Monoid> enumerate_monoids_with_zero(std::size_t n) {
  std::vector<Monoid> out;
  for_each_monoid_with_zero(n, [&](const Monoid& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

std::vector<Monoid> enumerate_monoids_with_zero_up_to(std::size_t max_size) {
  std::vector<Monoid> out;
  for (std::size_t n = 2; n <= max_size; ++n) {
    auto batch = enumerate_monoids_with_zero(n);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

// Acts -----------------------------------------------------------------------

void for_each_act(const Monoid& monoid, std::size_t size, Category category,
                  const std::function<bool(const Act&)>& visit) {
  if (size > kMaxActSize) {
    throw Error(ErrorKind::BoundTooLarge,
                "act enumeration is capped at " + std::to_string(kMaxActSize) +
                    " elements");
  }
  if (size == 0) {
    if (category == Category::ActO) {
      visit(Act::empty(monoid));
    }
    return;
  }
  std::size_t const m = monoid.size();
  std::size_t const n = size;
  Elem const one = monoid.one();
  Elem const zero = monoid.zero();
  std::vector<Elem> table(m * n, kUnset);
  for (Elem a = 0; a < n; ++a) {
    table[one * n + a] = a;
  }
  std::vector<std::pair<Elem, Elem>> cells;
  if (category == Category::Act0) {
    // θ = 0 is the only zero: 0a = θ for all a and sθ = θ for all s.
    for (Elem s = 0; s < m; ++s) {
      table[s * n + 0] = 0;
    }
    for (Elem a = 0; a < n; ++a) {
      table[zero * n + a] = 0;
    }
  } else {
    for (Elem a = 0; a < n; ++a) {
      cells.emplace_back(zero, a);
    }
  }
  for (Elem s = 0; s < m; ++s) {
    if (s == one || s == zero) {
      continue;
    }
    for (Elem a = category == Category::Act0 ? 1 : 0; a < n; ++a) {
      cells.emplace_back(s, a);
    }
  }
  auto consistent = [&]() {
    for (Elem s = 0; s < m; ++s) {
      for (Elem t = 0; t < m; ++t) {
        Elem st = monoid.mul(s, t);
        for (Elem a = 0; a < n; ++a) {
          Elem ta = table[t * n + a];
          if (ta == kUnset) {
            continue;
          }
          Elem left = table[st * n + a];
          Elem right = table[s * n + ta];
          if (left != kUnset && right != kUnset && left != right) {
            return false;
          }
        }
      }
    }
    return true;
  };
  std::vector<std::string> labels;
  for (Elem a = 0; a < n; ++a) {
    labels.push_back(category == Category::Act0 && a == 0
                         ? std::string("θ")
                         : "x" + std::to_string(a));
  }
  std::set<CanonicalForm> seen;
  bool stopped = false;
  std::function<void(std::size_t)> fill = [&](std::size_t k) {
    if (stopped) {
      return;
    }
    if (k == cells.size()) {
      std::vector<std::vector<Elem>> rows(m);
      for (Elem s = 0; s < m; ++s) {
        rows[s].assign(table.begin() + s * n, table.begin() + (s + 1) * n);
      }
      // ActO tables may still have several zeros; Act0 tables have one by
      // construction.
      Act act = Act::validate(monoid, labels, std::move(rows), category);
      if (seen.insert(canonical_form(act)).second && !visit(act)) {
        stopped = true;
      }
      return;
    }
    auto [s, a] = cells[k];
    for (Elem v = 0; v < n && !stopped; ++v) {
      table[s * n + a] = v;
      if (consistent()) {
        fill(k + 1);
      }
    }
    table[s * n + a] = kUnset;
  };
  if (consistent()) {
    fill(0);
  }
}

std::vector<Act> enumerate_acts(const Monoid& monoid, std::size_t max_size,
                                Category category) {
  std::vector<Act> out;
  for (std::size_t n = 0; n <= max_size; ++n) {
    for_each_act(monoid, n, category, [&](const Act& a) {
      out.push_back(a);
      return true;
    });
  }
  return out;
}

// Left congruences -----------------------------------------------------------

std::vector<ActCongruence> enumerate_left_congruences(const Monoid& monoid) {
  std::size_t const n = monoid.size();
  if (n > kMaxMonoidSize) {
    throw Error(ErrorKind::BoundTooLarge,
                "left congruence enumeration is capped at " +
                    std::to_string(kMaxMonoidSize) + " elements");
  }
  Act regular = regular_act(monoid, Category::ActO);
  std::vector<ActCongruence> out;
  std::vector<Elem> rgs(n, 0);
  auto compatible = [&]() {
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = a + 1; b < n; ++b) {
        if (rgs[a] != rgs[b]) {
          continue;
        }
        for (Elem s = 0; s < n; ++s) {
          if (rgs[monoid.mul(s, a)] != rgs[monoid.mul(s, b)]) {
            return false;
          }
        }
      }
    }
    return true;
  };
  std::function<void(Elem, Elem)> grow = [&](Elem i, Elem used) {
    if (i == n) {
      if (compatible()) {
        out.push_back(ActCongruence::make(regular, rgs));
      }
      return;
    }
    for (Elem b = 0; b <= used && b < n; ++b) {
      rgs[i] = b;
      grow(i + 1, std::max(used, static_cast<Elem>(b + 1)));
    }
  };
  if (n > 0) {
    rgs[0] = 0;
    grow(1, 1);
  }
  return out;
}

}  // namespace monact
