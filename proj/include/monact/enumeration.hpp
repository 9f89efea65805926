#ifndef MONACT_ENUMERATION_HPP_
#define MONACT_ENUMERATION_HPP_

#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

#include "monact/act.hpp"
#include "monact/monoid.hpp"

namespace monact {

inline constexpr std::size_t kMaxMonoidSize = 6;
inline constexpr std::size_t kMaxActSize = 6;

// Minimum table serialisation over all structure-preserving relabellings.
// Two objects are isomorphic iff their encodings are equal.
struct CanonicalForm {
  std::vector<std::uint32_t> encoding;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

// Identity pinned at index 0 and zero at index 1.
CanonicalForm canonical_form(const Monoid& monoid);
// The category tag is part of the encoding; in Act0 θ comes first.
CanonicalForm canonical_form(const Act& act);

// All monoids with zero of order exactly n (2 <= n <= 6), up to isomorphism.
// Each class is represented by its lexicographically least table with the
// identity at index 0 and the zero at index 1; classes are reported in
// order of that table. The visitor returns false to stop early.
void for_each_monoid_with_zero(std::size_t n,
                               const std::function<bool(const Monoid&)>& visit);
std::vector<Monoid> enumerate_monoids_with_zero(std::size_t n);
// Sizes 2..max_size concatenated.
std::vector<Monoid> enumerate_monoids_with_zero_up_to(std::size_t max_size);

// All acts over the monoid with exactly `size` elements, up to isomorphism,
// each represented by its lexicographically least action table (θ at index
// 0 in Act0).
void for_each_act(const Monoid& monoid, std::size_t size, Category category,
                  const std::function<bool(const Act&)>& visit);
// All acts with at most `max_size` elements, smallest first. In ActO this
// includes the empty act.
std::vector<Act> enumerate_acts(const Monoid& monoid, std::size_t max_size,
                                Category category);

// Left-compatible partitions of S acting on itself, in restricted-growth
// order (the total partition first).
std::vector<ActCongruence> enumerate_left_congruences(const Monoid& monoid);

}  // namespace monact

#endif  // MONACT_ENUMERATION_HPP_
