// monact: command-line front end for the finite act workbench.
//
// Exit codes: 0 success, 1 a property failed, 2 bad input.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "monact/classifiers.hpp"
#include "monact/constructions.hpp"
#include "monact/enumeration.hpp"
#include "monact/fixtures.hpp"
#include "monact/io.hpp"
#include "monact/projectivity.hpp"
#include "monact/report.hpp"
#include "monact/verify.hpp"

namespace {

using namespace monact;

constexpr int kOk = 0;
constexpr int kPropertyFailed = 1;
constexpr int kInputError = 2;

struct Options {
  std::vector<std::string> bounds;
  bool json = false;
  bool seed_fixtures = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::map<std::string, std::size_t> parse_bounds(
    const std::vector<std::string>& specs) {
  static const std::vector<std::string> known = {
      "monoid_size",        "act_size",          "family_size",
      "family_act_size",
      "perfect_monoid_size", "perfect_act_size",  "steady_monoid_size",
      "steady_act_size",     "size_bound",        "family_bound"};
  std::map<std::string, std::size_t> out;
  for (auto const& spec : specs) {
    auto eq = spec.find('=');
    if (eq == std::string::npos) {
      throw UsageError("--bounds expects k=v, got '" + spec + "'");
    }
    std::string key = spec.substr(0, eq);
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw UsageError("unknown bound '" + key + "'");
    }
    std::size_t used = 0;
    std::size_t value = 0;
    try {
      value = std::stoul(spec.substr(eq + 1), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != spec.size() - eq - 1) {
      throw UsageError("bound '" + key + "' needs a nonnegative integer");
    }
    out[key] = value;
  }
  return out;
}

std::size_t bound_or(const std::map<std::string, std::size_t>& bounds,
                     const std::string& key, std::size_t fallback) {
  auto it = bounds.find(key);
  return it == bounds.end() ? fallback : it->second;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw UsageError("cannot read '" + path + "'");
  }
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

// Monoids are loaded before acts so file order on the command line does not
// matter.
Workspace load(const Options& opts, const std::vector<std::string>& files) {
  Workspace ws = opts.seed_fixtures ? fixtures::workspace() : Workspace{};
  std::vector<std::pair<std::string, std::string>> acts;
  for (auto const& path : files) {
    std::string text = read_file(path);
    try {
      if (text.find("act ") == text.find_first_not_of(" \t\r\n#")) {
        acts.emplace_back(path, std::move(text));
      } else {
        load_into(ws, text);
      }
    } catch (const Error& e) {
      throw UsageError(path + ": " + e.what());
    }
  }
  for (auto const& [path, text] : acts) {
    try {
      load_into(ws, text);
    } catch (const Error& e) {
      throw UsageError(path + ": " + e.what());
    }
  }
  return ws;
}

Category category_or(const std::string& text, Category fallback) {
  if (text.empty()) {
    return fallback;
  }
  auto cat = parse_category(text);
  if (!cat) {
    throw UsageError("category must be 'acto' or 'act0'");
  }
  return *cat;
}

void emit(const Json& json) { std::cout << json.dump(2) << "\n"; }

int cmd_validate(const Options& opts, const std::vector<std::string>& files) {
  Workspace ws = load(opts, files);
  if (opts.json) {
    Json out;
    out["schema"] = kSchemaVersion;
    Json monoids = Json::array();
    for (auto const& [name, m] : ws.monoids()) {
      monoids.push_back({{"name", name}, {"size", m.monoid.size()}});
    }
    Json acts = Json::array();
    for (auto const& [name, a] : ws.acts()) {
      acts.push_back({{"name", name},
                      {"monoid", a.monoid_name},
                      {"category", std::string(to_string(a.act.category()))},
                      {"size", a.act.size()}});
    }
    out["monoids"] = monoids;
    out["acts"] = acts;
    emit(out);
    return kOk;
  }
  for (auto const& [name, m] : ws.monoids()) {
    std::cout << "monoid " << name << ": ok (" << m.monoid.size()
              << " elements)\n";
  }
  for (auto const& [name, a] : ws.acts()) {
    std::cout << "act " << name << ": ok (" << a.act.size() << " elements, "
              << to_string(a.act.category()) << ")\n";
  }
  return kOk;
}

int cmd_analyze(const Options& opts, const std::string& act_name,
                const std::string& category,
                const std::vector<std::string>& files) {
  Workspace ws = load(opts, files);
  NamedAct const& a = ws.act(act_name);
  emit(analyze_report(act_name, a.act, category_or(category, a.act.category())));
  return kOk;
}

int cmd_functor_f(const Options& opts, const std::string& act_name,
                  const std::vector<std::string>& files) {
  Workspace ws = load(opts, files);
  NamedAct const& a = ws.act(act_name);
  auto image = functor_F_obj(a.act.in_category(Category::ActO));
  Act fa = image.act.in_category(Category::Act0);
  std::string name = "F" + act_name;
  if (!opts.json) {
    std::cout << print_act(name, a.monoid_name, fa);
    return kOk;
  }
  Json out;
  out["schema"] = kSchemaVersion;
  out["act"] = act_name;
  out["image"] = name;
  out["size"] = fa.size();
  out["zero"] = fa.label(fa.theta());
  Json projection = Json::object();
  for (Elem x = 0; x < a.act.size(); ++x) {
    projection[a.act.label(x)] = fa.label(image.projection(x));
  }
  out["projection"] = projection;
  out["file"] = print_act(name, a.monoid_name, fa);
  emit(out);
  return kOk;
}

int cmd_cover(const Options& opts, const std::string& act_name,
              const std::string& category,
              const std::vector<std::string>& files) {
  Workspace ws = load(opts, files);
  NamedAct const& a = ws.act(act_name);
  Category cat = category_or(category, a.act.category());
  Act view = a.act.in_category(cat);
  auto bounds = parse_bounds(opts.bounds);
  std::size_t bound =
      bound_or(bounds, "size_bound", sufficient_cover_bound(view, cat));
  Json report = cover_report(act_name, view, cat, bound);
  bool found = !report["cover"].is_null();
  if (opts.json) {
    emit(report);
  } else if (found) {
    std::cout << "projective cover of " << act_name << " in "
              << to_string(cat) << ": idempotents";
    for (auto const& e : report["cover"]["idempotents"]) {
      std::cout << " " << e.get<std::string>();
    }
    std::cout << ", domain size " << report["cover"]["domain_size"] << "\n";
  } else {
    std::cout << "no projective cover of " << act_name << " with domain size <= "
              << bound << "\n";
  }
  return found ? kOk : kPropertyFailed;
}

int cmd_classify(const Options& opts, const std::string& monoid_name,
                 const std::string& property,
                 const std::vector<std::string>& files) {
  Workspace ws = load(opts, files);
  Monoid const& m = ws.monoid(monoid_name);
  auto bounds = parse_bounds(opts.bounds);
  ClassifierReport report = [&] {
    if (property == "left-perfect") {
      return is_left_perfect(m, bound_or(bounds, "act_size", kDefaultPerfectActBound));
    }
    if (property == "left-0perfect") {
      return is_left_0perfect(m, bound_or(bounds, "act_size", kDefaultPerfectActBound));
    }
    if (property == "left-steady") {
      return is_left_steady(m, bound_or(bounds, "act_size", kDefaultSteadyActBound));
    }
    if (property == "left-0steady") {
      return is_left_0steady(m, bound_or(bounds, "act_size", kDefaultSteadyActBound));
    }
    if (property == "acc-cyclic") {
      return acc_cyclic_subacts_report(
          m, bound_or(bounds, "act_size", kDefaultSteadyActBound));
    }
    throw UsageError("unknown property '" + property + "'");
  }();
  if (opts.json) {
    emit(classifier_json(report));
  } else {
    std::cout << monoid_name << " " << report.property << ": "
              << to_string(report.verdict) << "\n";
    for (auto const& w : report.witnesses) {
      std::cout << "  witness (" << w.reason << "):\n"
                << print_act("witness", monoid_name, w.act);
    }
  }
  return report.positive() ? kOk : kPropertyFailed;
}

int cmd_enumerate(const Options& opts, const std::string& what,
                  const std::string& monoid_name, std::size_t size,
                  const std::string& category,
                  const std::vector<std::string>& files) {
  if (what == "monoids") {
    auto monoids = enumerate_monoids_with_zero(size);
    if (opts.json) {
      Json list = Json::array();
      for (std::size_t i = 0; i < monoids.size(); ++i) {
        list.push_back(print_monoid("M" + std::to_string(i), monoids[i]));
      }
      emit({{"schema", kSchemaVersion},
            {"kind", "monoids"},
            {"size", size},
            {"count", monoids.size()},
            {"items", list}});
    } else {
      std::cout << monoids.size() << " monoids with zero of order " << size
                << "\n";
      for (std::size_t i = 0; i < monoids.size(); ++i) {
        std::cout << "\n" << print_monoid("M" + std::to_string(i), monoids[i]);
      }
    }
    return kOk;
  }
  if (what != "acts") {
    throw UsageError("enumerate expects 'monoids' or 'acts'");
  }
  if (monoid_name.empty()) {
    throw UsageError("enumerate acts needs --monoid");
  }
  Workspace ws = load(opts, files);
  Monoid const& m = ws.monoid(monoid_name);
  Category cat = category_or(category, Category::ActO);
  std::vector<Act> acts;
  for_each_act(m, size, cat, [&](const Act& a) {
    acts.push_back(a);
    return true;
  });
  if (opts.json) {
    Json list = Json::array();
    for (std::size_t i = 0; i < acts.size(); ++i) {
      list.push_back(print_act("A" + std::to_string(i), monoid_name, acts[i]));
    }
    emit({{"schema", kSchemaVersion},
          {"kind", "acts"},
          {"monoid", monoid_name},
          {"category", std::string(to_string(cat))},
          {"size", size},
          {"count", acts.size()},
          {"items", list}});
  } else {
    std::cout << acts.size() << " acts of size " << size << " over "
              << monoid_name << " in " << to_string(cat) << "\n";
    for (std::size_t i = 0; i < acts.size(); ++i) {
      std::cout << "\n" << print_act("A" + std::to_string(i), monoid_name, acts[i]);
    }
  }
  return kOk;
}

int cmd_verify_paper(const Options& opts) {
  auto bounds = parse_bounds(opts.bounds);
  VerifyBounds vb;
  vb.sweep.monoid_size = bound_or(bounds, "monoid_size", vb.sweep.monoid_size);
  vb.sweep.act_size = bound_or(bounds, "act_size", vb.sweep.act_size);
  vb.sweep.family_size = bound_or(bounds, "family_size", vb.sweep.family_size);
  vb.sweep.family_act_size =
      bound_or(bounds, "family_act_size", vb.sweep.family_act_size);
  vb.perfect_monoid_size =
      bound_or(bounds, "perfect_monoid_size", vb.perfect_monoid_size);
  vb.perfect_act_size = bound_or(bounds, "perfect_act_size", vb.perfect_act_size);
  vb.steady_monoid_size =
      bound_or(bounds, "steady_monoid_size", vb.steady_monoid_size);
  vb.steady_act_size = bound_or(bounds, "steady_act_size", vb.steady_act_size);
  auto results = verify_paper(vb);
  bool all = true;
  Json checks = Json::array();
  for (auto const& r : results) {
    all = all && r.passed;
    if (opts.json) {
      checks.push_back({{"name", r.name},
                        {"status", r.passed ? "PASS" : "FAIL"},
                        {"detail", r.detail}});
    } else {
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail
                << "\n";
    }
  }
  if (opts.json) {
    emit({{"schema", kSchemaVersion}, {"passed", all}, {"checks", checks}});
  }
  return all ? kOk : kPropertyFailed;
}

int cmd_dot(const Options& opts, const std::string& act_name,
            const std::vector<std::string>& files) {
  Workspace ws = load(opts, files);
  std::cout << cayley_dot(act_name, ws.act(act_name).act);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Workbench for finite monoids with zero and their acts"};
  app.require_subcommand(1);
  Options opts;
  app.add_option("--bounds", opts.bounds, "Search bounds as key=value")
      ->expected(1)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll)
      ->delimiter(',');
  app.add_flag("--json", opts.json, "Emit JSON reports");
  app.add_flag("--seed-fixtures", opts.seed_fixtures,
               "Preload the built-in S2, G0 and example acts");
  app.fallthrough();

  std::vector<std::string> files;
  std::string name;
  std::string category;
  std::string property;
  std::string what;
  std::string monoid_name;
  std::size_t size = 0;

  auto* validate = app.add_subcommand("validate", "Parse and validate files");
  validate->add_option("files", files, "Monoid and act files");

  auto* analyze = app.add_subcommand("analyze", "Structural report for an act");
  analyze->add_option("act", name, "Act name")->required();
  analyze->add_option("files", files, "Monoid and act files");
  analyze->add_option("--category", category, "acto or act0 (default: file tag)");

  auto* functor = app.add_subcommand("functor-f", "Glue the zeros of an act");
  functor->add_option("act", name, "Act name")->required();
  functor->add_option("files", files, "Monoid and act files");

  auto* cover = app.add_subcommand("cover", "Projective cover of an act");
  cover->add_option("act", name, "Act name")->required();
  cover->add_option("files", files, "Monoid and act files");
  cover->add_option("--category", category, "acto or act0 (default: file tag)");

  auto* classify = app.add_subcommand("classify", "Monoid-level classifier");
  classify->add_option("monoid", name, "Monoid name")->required();
  classify->add_option("property", property,
                       "left-perfect, left-0perfect, left-steady, "
                       "left-0steady or acc-cyclic")
      ->required();
  classify->add_option("files", files, "Monoid and act files");

  auto* enumerate = app.add_subcommand("enumerate", "List structures up to isomorphism");
  enumerate->add_option("what", what, "monoids or acts")->required();
  enumerate->add_option("files", files, "Monoid and act files");
  enumerate->add_option("--size", size, "Number of elements")->required();
  enumerate->add_option("--monoid", monoid_name, "Monoid for 'acts'");
  enumerate->add_option("--category", category, "acto or act0 (default: acto)");

  auto* verify = app.add_subcommand("verify-paper", "Run the property battery");

  auto* dot = app.add_subcommand("dot", "Cayley graph in DOT");
  dot->add_option("act", name, "Act name")->required();
  dot->add_option("files", files, "Monoid and act files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (validate->parsed()) return cmd_validate(opts, files);
    if (analyze->parsed()) return cmd_analyze(opts, name, category, files);
    if (functor->parsed()) return cmd_functor_f(opts, name, files);
    if (cover->parsed()) return cmd_cover(opts, name, category, files);
    if (classify->parsed()) return cmd_classify(opts, name, property, files);
    if (enumerate->parsed()) {
      return cmd_enumerate(opts, what, monoid_name, size, category, files);
    }
    if (verify->parsed()) return cmd_verify_paper(opts);
    if (dot->parsed()) return cmd_dot(opts, name, files);
  } catch (const Error& e) {
    std::cerr << "monact: " << e.what() << "\n";
    return kInputError;
  } catch (const UsageError& e) {
    std::cerr << "monact: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
