#ifndef MONACT_CLASSIFIERS_HPP_
#define MONACT_CLASSIFIERS_HPP_

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monact/act.hpp"
#include "monact/monoid.hpp"

namespace monact {

// Sweeps only ever see finitely many acts, so a positive outcome of a sweep
// is HoldsWithinBounds; Holds is reserved for verdicts that follow from
// finiteness outright.
enum class Verdict { Holds, Fails, HoldsWithinBounds };

std::string_view to_string(Verdict verdict);

struct ClassifierWitness {
  std::string reason;
  Act act;
};

struct ClassifierReport {
  Monoid monoid;
  std::string property;
  Verdict verdict;
  std::map<std::string, std::size_t> bounds;
  std::vector<ClassifierWitness> witnesses;
  // Longest chain of cyclic subacts -> number of acts (ACC report only).
  std::map<std::size_t, std::size_t> chain_profile;

  bool positive() const noexcept { return verdict != Verdict::Fails; }
};

inline constexpr std::size_t kDefaultPerfectActBound = 4;
inline constexpr std::size_t kDefaultSteadyActBound = 5;

// S/ρ for every left congruence ρ, up to isomorphism.
std::vector<Act> cyclic_acts(const Monoid& monoid, Category category);

// Runs `check` over `acts`; every act for which it returns a reason becomes
// a witness and turns the verdict into Fails.
ClassifierReport sweep(const Monoid& monoid, std::string property,
                       std::map<std::string, std::size_t> bounds,
                       const std::vector<Act>& acts,
                       const std::function<std::optional<std::string>(const Act&)>& check);

// Cyclic acts have projective covers, and every locally cyclic act of at
// most `act_size_bound` elements is cyclic.
ClassifierReport is_left_perfect(const Monoid& monoid,
                                 std::size_t act_size_bound = kDefaultPerfectActBound);
// Every Act0 act of at most `act_size_bound` elements has a projective cover.
ClassifierReport is_left_0perfect(const Monoid& monoid,
                                  std::size_t act_size_bound = kDefaultPerfectActBound);

// Longest chain of cyclic subacts in each enumerated act. For a finite
// monoid every cyclic subact has at most |S| elements, so chains are
// bounded and the verdict is Holds.
ClassifierReport acc_cyclic_subacts_report(const Monoid& monoid,
                                           std::size_t act_size_bound = kDefaultSteadyActBound);
std::size_t longest_cyclic_chain(const Act& a);

// Every hollow act of at most `act_size_bound` elements is cyclic (ActO /
// Act0 respectively).
ClassifierReport is_left_steady(const Monoid& monoid,
                                std::size_t act_size_bound = kDefaultSteadyActBound);
ClassifierReport is_left_0steady(const Monoid& monoid,
                                 std::size_t act_size_bound = kDefaultSteadyActBound);

// Re-derives each witness of a failing report with the structure and
// projectivity modules. True when every witness is confirmed.
bool witnesses_recheck(const ClassifierReport& report);

}  // namespace monact

#endif  // MONACT_CLASSIFIERS_HPP_
