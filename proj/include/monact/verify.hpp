#ifndef MONACT_VERIFY_HPP_
#define MONACT_VERIFY_HPP_

#include <string>
#include <vector>

namespace monact {

// The property battery behind `monact verify-paper`. Every check is exact
// over an exhaustively enumerated universe: all monoids with zero of at most
// `monoid_size` elements and all of their acts of at most `act_size`
// elements. Families hold at most `family_size` acts of at most
// `family_act_size` elements each.
struct SweepBounds {
  std::size_t monoid_size = 3;
  std::size_t act_size = 4;
  std::size_t family_size = 3;
  std::size_t family_act_size = 3;
};

struct VerifyBounds {
  SweepBounds sweep;
  std::size_t perfect_monoid_size = 4;
  std::size_t perfect_act_size = 4;
  std::size_t steady_monoid_size = 4;
  std::size_t steady_act_size = 5;
};

struct CheckResult {
  std::string name;
  bool passed;
  // Counts on success, the first witness on failure.
  std::string detail;
};

// A1 = {θ}, A2 = A1 ∐ A1: |Hom(A1, A2)| = 2 but |Hom(F A1, F A2)| = 1.
CheckResult check_f_not_faithful();
// B = ActA ∐ θ over S2: |F(B × B)| = 6 while |F(B) × F(B)| = 4.
CheckResult check_f_not_left_exact();
// F(A) is the reflection: each f: A -> X (X with one zero) factors through
// π_{0A} by exactly one hom.
CheckResult check_reflection(const SweepBounds& bounds);
// F(∐ A_i) ≅ ∐₀ F(A_i).
CheckResult check_coproduct_preservation(const SweepBounds& bounds);
// Projective P in ActO gives projective F(P) in Act0.
CheckResult check_projective_preservation(const SweepBounds& bounds);
// A projective cover (P, f) in ActO gives the projective cover (F P, F f).
CheckResult check_cover_preservation(const SweepBounds& bounds);
// Cyclic acts have one zero.
CheckResult check_unique_zero(const SweepBounds& bounds);
// Finite acts: locally cyclic iff cyclic.
CheckResult check_locally_cyclic_is_cyclic(const SweepBounds& bounds);
// Hollow acts are indecomposable in both categories.
CheckResult check_hollow_indecomposable(const SweepBounds& bounds);
// With 0A superfluous: A hollow in ActO iff F(A) hollow in Act0.
CheckResult check_hollow_lemma(const SweepBounds& bounds);
// F(A) cyclic and nonzero implies the substantial summand of A is cyclic.
CheckResult check_preimage_cyclic(const SweepBounds& bounds);
// Zero sets are trivial subacts; A ≅ substantial ∐ θ...; the substantial
// summand has no θ summand left; indecomposable acts have 0A superfluous.
CheckResult check_substantial_summands(const SweepBounds& bounds);
// ActW is indecomposable in ActO but not Act0; ActW ∐ θ is decomposable
// with F of it indecomposable.
CheckResult check_indecomposability_examples();
// F(S ∐ S) is projective in Act0 but not in ActO.
CheckResult check_non_projective_preimage();
// left perfect and left 0-perfect agree (both positive) on every monoid.
CheckResult check_char_0perfect(std::size_t monoid_size, std::size_t act_size);
// left 0-steady, left steady and ACC on cyclic subacts agree.
CheckResult check_char_0steady(std::size_t monoid_size, std::size_t act_size);

std::vector<CheckResult> verify_paper(const VerifyBounds& bounds);

}  // namespace monact

#endif  // MONACT_VERIFY_HPP_
