#ifndef MONACT_CORE_HPP_
#define MONACT_CORE_HPP_

#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "monact/act.hpp"
#include "monact/monoid.hpp"

namespace monact {

// {0a | a in A}. Every monoid element fixes each of these points.
Subact zero_set(const Act& a);

// All homs A -> B in lexicographic order of their carrier maps. Both acts
// must share the monoid and category tag.
std::vector<ActHom> enumerate_homs(const Act& a, const Act& b);
// Same, after viewing both acts in `category`.
std::vector<ActHom> enumerate_homs(const Act& a, const Act& b,
                                   Category category);

// Streams homs A -> B in the same order; the visitor returns false to stop.
// The map handed to the visitor is only valid during the call.
void for_each_hom(const Act& a,
                  const Act& b,
                  const std::function<bool(const std::vector<Elem>&)>& visit);

std::size_t count_homs(const Act& a, const Act& b);

// A witness isomorphism, or nullopt when the acts are not isomorphic.
std::optional<ActHom> is_isomorphic(const Act& a, const Act& b);

// Smallest subact containing the generators. In Act0 an empty generator set
// is rejected; closure() below is the variant that returns {θ} instead.
Subact subact_generated(const Act& a, std::span<const Elem> generators);
Subact cyclic_subact(const Act& a, Elem generator);

// S·X as a mask, plus the designated zero in Act0 (so ⟨∅⟩ = {θ} there).
ElemSet closure(const Act& a, const ElemSet& generators);

// Every subact (including ∅ in ActO), sorted by size then by member list.
std::vector<Subact> all_subacts(const Act& a);

// Collapses the subact to one element; the result keeps the category tag.
std::pair<Act, ActHom> rees_quotient(const Act& a, const Subact& b);

// Isomorphism-invariant description of each element: zero flag, size of its
// cyclic subact and, per monoid element, the number of preimages.
std::vector<std::vector<std::size_t>> element_invariants(const Act& a);

}  // namespace monact

#endif  // MONACT_CORE_HPP_
