#ifndef MONACT_TESTS_HELPERS_HPP_
#define MONACT_TESTS_HELPERS_HPP_

#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "monact/act.hpp"
#include "monact/error.hpp"
#include "monact/monoid.hpp"

namespace testing {

using namespace monact;

// {1, 0, e} with e·e = e.
inline Monoid monoid_e() {
  return Monoid::validate({"1", "0", "e"}, {{0, 1, 2}, {1, 1, 1}, {2, 1, 2}}, 0, 1);
}

// Rows are given per monoid element as labels of the images.
inline Act act_from(const Monoid& m, const std::vector<std::string>& labels,
                    const std::vector<std::vector<std::string>>& rows,
                    Category cat) {
  std::vector<std::vector<Elem>> table;
  for (auto const& row : rows) {
    std::vector<Elem> r;
    for (auto const& l : row) {
      r.push_back(static_cast<Elem>(
          std::find(labels.begin(), labels.end(), l) - labels.begin()));
    }
    table.push_back(r);
  }
  return Act::validate(m, labels, table, cat);
}

template <class F>
ErrorKind error_kind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no monact::Error thrown");
  return ErrorKind::BadTable;
}

inline std::vector<Elem> labels_to(const Act& a, const std::vector<std::string>& ls) {
  std::vector<Elem> out;
  for (auto const& l : ls) out.push_back(*a.find(l));
  return out;
}

}  // namespace testing

#endif  // MONACT_TESTS_HELPERS_HPP_
