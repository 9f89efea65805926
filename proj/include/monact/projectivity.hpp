#ifndef MONACT_PROJECTIVITY_HPP_
#define MONACT_PROJECTIVITY_HPP_

#include <functional>
#include <optional>
#include <vector>

#include "monact/act.hpp"
#include "monact/monoid.hpp"

namespace monact {

// All e with e*e = e, ascending.
std::vector<Elem> idempotents(const Monoid& monoid);

// Se = {se | s in S} under left multiplication, elements in monoid order and
// labelled like the monoid. Throws NotIdempotent.
Act principal_act(const Monoid& monoid, Elem e, Category category);

struct ProjectiveSummand {
  Subact component;
  Elem idempotent;
  // principal_act(S, idempotent) -> component.as_act()
  ActHom iso;
};

struct ProjectivityCertificate {
  Category category;
  std::vector<ProjectiveSummand> summands;
};

// Projective iff every indecomposable component is isomorphic to some Se.
std::optional<ProjectivityCertificate> is_projective(const Act& a,
                                                     Category category);

struct CoverEvidence {
  Subact maximal;
  // An element of the target outside the image of `maximal`.
  Elem missed;
};

struct Cover {
  ActHom epi;
  Category category;
  std::vector<CoverEvidence> evidence;
};

// f is a cover iff it is surjective and no maximal proper subact of its
// domain still maps onto the target.
std::optional<Cover> is_cover(const ActHom& f);

struct ProjectiveCover {
  Cover cover;
  // Idempotents of the summands Se_i making up the domain.
  std::vector<Elem> idempotents;
};

// |A| + |S|.
std::size_t default_cover_bound(const Act& a);
// A domain size no projective cover of A can exceed: each summand Se_i
// contributes at most |S| elements and covers need at most one summand per
// nonzero generator.
std::size_t sufficient_cover_bound(const Act& a, Category category);

// Visits projective covers P = ∐ Se_i -> A with |P| <= size_bound: multisets
// of idempotents in graded lexicographic order, then surjections in
// lexicographic order. The visitor returns false to stop.
void for_each_projective_cover(const Act& a, Category category,
                               std::size_t size_bound,
                               const std::function<bool(const ProjectiveCover&)>& visit);

// The first cover in the order above, or nullopt when none exists within
// the bound (which does not mean that none exists).
std::optional<ProjectiveCover> projective_cover(
    const Act& a, Category category,
    std::optional<std::size_t> size_bound = std::nullopt);

}  // namespace monact

#endif  // MONACT_PROJECTIVITY_HPP_
