#ifndef MONACT_CONSTRUCTIONS_HPP_
#define MONACT_CONSTRUCTIONS_HPP_

#include <string>
#include <utility>
#include <vector>

#include "monact/act.hpp"
#include "monact/monoid.hpp"

namespace monact {

struct CoproductTag {
  Category category;
  // One injection per part, in family order.
  std::vector<ActHom> injections;
};

// ActO: disjoint union, elements labelled "(i,label)". Act0: the wedge that
// identifies all designated zeros into one element labelled "θ". The empty
// family gives the initial object (∅ in ActO, θ in Act0).
std::pair<Act, CoproductTag> coproduct(const Monoid& monoid, Category category,
                                       const std::vector<Act>& parts);
// Throws EmptyFamily for an empty family.
std::pair<Act, CoproductTag> coproduct(Category category,
                                       const std::vector<Act>& parts);

inline constexpr std::size_t kDefaultMaxFactors = 4;

// Cartesian product with componentwise action; tuples are ordered
// lexicographically with the first factor most significant.
Act product(Category category, const std::vector<Act>& parts,
            std::size_t max_factors = kDefaultMaxFactors);

// The one-element act.
Act theta_act(const Monoid& monoid, Category category);
// S acting on itself by left multiplication.
Act regular_act(const Monoid& monoid, Category category);

// F(A) = A / 0A, tagged Act0, with the projection π_{0A} (an ActO hom into
// the Act0 object viewed in ActO). A collapsed zero class is labelled "θ"
// when that label is free.
struct FunctorImage {
  Act act;
  ActHom projection;
};
FunctorImage functor_F_obj(const Act& a);

// F(α): F(A) -> F(B), the unique map with F(α)∘π_{0A} = π_{0B}∘α.
ActHom functor_F_mor(const ActHom& alpha);

// For f: A -> X with X carrying a unique zero, the unique g: F(A) -> X in
// Act0 with g∘π_{0A} = f.
ActHom reflection_factorization(const ActHom& f);

// Adds a fresh absorbing element to a monoid table (which need not have a
// zero). Throws LabelClash if `zero_label` is taken.
Monoid adjoin_zero(const std::vector<std::string>& labels,
                   const std::vector<std::vector<Elem>>& table,
                   Elem one,
                   const std::string& zero_label = "0");
Monoid adjoin_zero(const Monoid& monoid, const std::string& zero_label = "0");

struct SubstantialDecomposition {
  // Union of the indecomposable components not contained in 0A.
  Subact substantial;
  // Zero elements forming singleton components outside the substantial part.
  std::vector<Elem> discrete_zeros;
  // substantial ∐ θ ∐ ... ∐ θ  ->  A, an isomorphism.
  ActHom reconstruction;
};

SubstantialDecomposition substantial_summand(const Act& a);

}  // namespace monact

#endif  // MONACT_CONSTRUCTIONS_HPP_
