#include "monact/report.hpp"

#include <sstream>

#include "monact/constructions.hpp"
#include "monact/core.hpp"
#include "monact/io.hpp"
#include "monact/structure.hpp"

namespace monact {

namespace {

std::string quoted(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') {
      out += '\\';
    }
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json labels_json(const Act& a, const ElemSet& set) {
  Json out = Json::array();
  for (Elem x = 0; x < a.size(); ++x) {
    if (set[x]) {
      out.push_back(a.label(x));
    }
  }
  return out;
}

Json analyze_report(const std::string& name, const Act& a, Category category) {
  Act view = a.in_category(category);
  Json out;
  out["schema"] = kSchemaVersion;
  out["act"] = name;
  out["category"] = std::string(to_string(category));
  out["size"] = view.size();
  out["zero_set"] = labels_json(view, zero_set(view).mask());
  if (view.empty()) {
    out["cyclic"] = nullptr;
    return out;
  }
  auto generator = is_cyclic(view);
  out["cyclic"] = generator ? Json(view.label(*generator)) : Json(nullptr);
  out["locally_cyclic"] = is_locally_cyclic(view);
  out["hollow"] = is_hollow(view);
  Decomposition dec = decompose(view);
  out["indecomposable"] = dec.components.size() == 1;
  Json components = Json::array();
  for (auto const& c : dec.components) {
    components.push_back(labels_json(view, c.mask()));
  }
  out["decomposition"] = {{"components", dec.components.size()},
                          {"carriers", components}};
  if (auto cert = is_projective(view, category)) {
    Json summands = Json::array();
    for (auto const& s : cert->summands) {
      summands.push_back(
          {{"component", labels_json(view, s.component.mask())},
           {"idempotent", view.monoid().label(s.idempotent)}});
    }
    out["projective"] = {{"summands", summands}};
  } else {
    out["projective"] = nullptr;
  }
  auto sub = substantial_summand(view);
  Json zeros = Json::array();
  for (Elem z : sub.discrete_zeros) {
    zeros.push_back(view.label(z));
  }
  out["substantial_summand"] = {
      {"substantial", labels_json(view, sub.substantial.mask())},
      {"discrete_zeros", zeros}};
  return out;
}

Json cover_report(const std::string& name, const Act& a, Category category,
                  std::size_t size_bound) {
  Json out;
  out["schema"] = kSchemaVersion;
  out["act"] = name;
  out["category"] = std::string(to_string(category));
  out["size_bound"] = size_bound;
  auto pc = projective_cover(a, category, size_bound);
  if (!pc) {
    out["cover"] = nullptr;
    return out;
  }
  ActHom const& f = pc->cover.epi;
  Json idems = Json::array();
  for (Elem e : pc->idempotents) {
    idems.push_back(a.monoid().label(e));
  }
  Json map = Json::object();
  for (Elem x = 0; x < f.source().size(); ++x) {
    map[f.source().label(x)] = f.target().label(f(x));
  }
  Json evidence = Json::array();
  for (auto const& ev : pc->cover.evidence) {
    evidence.push_back({{"maximal_subact", labels_json(f.source(), ev.maximal.mask())},
                        {"missed", f.target().label(ev.missed)}});
  }
  out["cover"] = {{"idempotents", idems},
                  {"domain_size", f.source().size()},
                  {"map", map},
                  {"evidence", evidence}};
  return out;
}

Json classifier_json(const ClassifierReport& report) {
  Json out;
  out["schema"] = kSchemaVersion;
  out["property"] = report.property;
  out["monoid_size"] = report.monoid.size();
  out["verdict"] = std::string(to_string(report.verdict));
  Json bounds = Json::object();
  for (auto const& [k, v] : report.bounds) {
    bounds[k] = v;
  }
  out["bounds"] = bounds;
  Json witnesses = Json::array();
  for (auto const& w : report.witnesses) {
    witnesses.push_back({{"reason", w.reason},
                         {"act", print_act("witness", "S", w.act)}});
  }
  out["witnesses"] = witnesses;
  if (!report.chain_profile.empty()) {
    Json profile = Json::object();
    for (auto const& [length, count] : report.chain_profile) {
      profile[std::to_string(length)] = count;
    }
    out["chain_profile"] = profile;
  }
  return out;
}

std::string cayley_dot(const std::string& name, const Act& a) {
  Monoid const& m = a.monoid();
  std::ostringstream out;
  out << "digraph " << quoted(name) << " {\n";
  for (Elem x = 0; x < a.size(); ++x) {
    out << "  " << quoted(a.label(x)) << ";\n";
  }
  for (Elem x = 0; x < a.size(); ++x) {
    for (Elem s = 0; s < m.size(); ++s) {
      Elem y = a.act(s, x);
      if (y == x) {
        continue;
      }
      out << "  " << quoted(a.label(x)) << " -> " << quoted(a.label(y))
          << " [label=" << quoted(m.label(s)) << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace monact
