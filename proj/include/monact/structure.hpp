#ifndef MONACT_STRUCTURE_HPP_
#define MONACT_STRUCTURE_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "monact/act.hpp"

namespace monact {

struct Decomposition {
  Act parent;
  Category category;
  // Indecomposable components ordered by their lowest element. ActO: a
  // partition of the carrier. Act0: pieces meeting exactly in θ (the act θ
  // alone decomposes as the single component {θ}).
  std::vector<Subact> components;
};

// Lowest-index generator g with Sg = A.
std::optional<Elem> is_cyclic(const Act& a);

bool is_locally_cyclic(const Act& a);
// First pair (lowest indices) with no common cyclic upper bound.
std::optional<std::pair<Elem, Elem>> locally_cyclic_violation(const Act& a);

// B is superfluous in A iff the subact generated by A∖B is all of A. The
// proper subacts C in B ∪ C ≠ A range over nonempty ones, so a one-element
// act is superfluous in itself.
bool is_superfluous(const Act& a, const Subact& b);

// Maximal elements among the nonempty proper subacts.
std::vector<Subact> maximal_proper_subacts(const Act& a);

// Hollow iff there is at most one maximal proper subact.
bool is_hollow(const Act& a, Category category);
bool is_hollow(const Act& a);

Decomposition decompose(const Act& a, Category category);
Decomposition decompose(const Act& a);
bool is_indecomposable(const Act& a, Category category);

struct CompactnessBounds {
  std::size_t family_bound = 3;
  std::size_t size_bound = 4;
};

// A hom C -> A_1 ∐ ... ∐ A_k that lands in no single summand, searched over
// families of at most `family_bound` acts of at most `size_bound` elements
// (up to isomorphism).
struct CompactnessWitness {
  std::vector<Act> family;
  ActHom hom;
};
std::optional<CompactnessWitness> compactness_counterexample(
    const Act& c, Category category, CompactnessBounds bounds = {});

bool is_compact_bounded(const Act& c, Category category,
                        std::size_t family_bound, std::size_t size_bound);

}  // namespace monact

#endif  // MONACT_STRUCTURE_HPP_
