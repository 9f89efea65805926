#ifndef MONACT_REPORT_HPP_
#define MONACT_REPORT_HPP_

#include <string>

#include "json.hpp"
#include "monact/act.hpp"
#include "monact/classifiers.hpp"
#include "monact/projectivity.hpp"

namespace monact {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json labels_json(const Act& a, const ElemSet& set);

// Structural summary of one act viewed in `category`. Field order is fixed.
Json analyze_report(const std::string& name, const Act& a, Category category);

// Null when no projective cover exists within the bound.
Json cover_report(const std::string& name, const Act& a, Category category,
                  std::size_t size_bound);

Json classifier_json(const ClassifierReport& report);

// Cayley graph: one node per element, an edge x -> sx labelled s whenever
// s moves x (so unit loops and every other fixed-point loop are omitted).
std::string cayley_dot(const std::string& name, const Act& a);

}  // namespace monact

#endif  // MONACT_REPORT_HPP_
