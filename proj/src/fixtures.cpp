#include "monact/fixtures.hpp"

namespace monact::fixtures {

namespace {

constexpr std::string_view kS2Monoid = R"(monoid S2
elements: 1 0
one: 1
zero: 0
table:
1 0
0 0
)";

constexpr std::string_view kG0Monoid = R"(monoid G0
elements: 1 g 0
one: 1
zero: 0
table:
1 g 0
g 1 0
0 0 0
)";

constexpr std::string_view kActAAct = R"(act ActA over S2 category acto
elements: θ a
table:
θ a
θ θ
)";

constexpr std::string_view kActBAct = R"(act ActB over S2 category acto
elements: θA a θS
table:
θA a θS
θA θA θS
)";

constexpr std::string_view kActWAct = R"(act ActW over S2 category acto
elements: θ a b
table:
θ a b
θ θ θ
)";

constexpr std::string_view kA1Act = R"(act A1 over S2 category acto
elements: θ
table:
θ
θ
)";

constexpr std::string_view kA2Act = R"(act A2 over S2 category acto
elements: θ1 θ2
table:
θ1 θ2
θ1 θ2
)";

}  // namespace

const std::vector<std::pair<std::string_view, std::string_view>>& files() {
  static const std::vector<std::pair<std::string_view, std::string_view>> kFiles{
      {"S2.monoid", kS2Monoid},
      {"G0.monoid", kG0Monoid},
      {"ActA.act", kActAAct},
      {"ActB.act", kActBAct},
      {"ActW.act", kActWAct},
      {"A1.act", kA1Act},
      {"A2.act", kA2Act},
  };
  return kFiles;
}

Workspace workspace() {
  Workspace ws;
  for (auto const& [name, text] : files()) {
    load_into(ws, text);
  }
  return ws;
}

Monoid s2() { return workspace().monoid("S2"); }
Monoid g0() { return workspace().monoid("G0"); }

Act act_a() { return workspace().act("ActA").act; }
Act act_b() { return workspace().act("ActB").act; }
Act act_w() { return workspace().act("ActW").act; }
Act act_a1() { return workspace().act("A1").act; }
Act act_a2() { return workspace().act("A2").act; }

}  // namespace monact::fixtures
