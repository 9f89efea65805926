#ifndef MONACT_FIXTURES_HPP_
#define MONACT_FIXTURES_HPP_

#include <string_view>
#include <utility>
#include <vector>

#include "monact/act.hpp"
#include "monact/io.hpp"
#include "monact/monoid.hpp"

namespace monact::fixtures {

// The built-in worked examples, as (file name, file text) in load order.
// The same texts ship under fixtures/.
const std::vector<std::pair<std::string_view, std::string_view>>& files();

Workspace workspace();

// S2: {1, 0} under multiplication.
Monoid s2();
// G0: the two-element group {1, g} with a zero adjoined.
Monoid g0();

// Over S2, all tagged acto:
Act act_a();   // {θ, a} with 0a = θ
Act act_b();   // ActA ∪ {θS}: two zeros
Act act_w();   // {θ, a, b} with 0a = 0b = θ
Act act_a1();  // {θ}
Act act_a2();  // {θ1, θ2} = A1 ∐ A1

}  // namespace monact::fixtures

#endif  // MONACT_FIXTURES_HPP_
