#include "monact/monoid.hpp"

#include <algorithm>
#include <set>

#include "monact/error.hpp"

namespace monact {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BadTable: return "BadTable";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::BadIdentity: return "BadIdentity";
    case ErrorKind::BadZero: return "BadZero";
    case ErrorKind::ZeroEqualsOne: return "ZeroEqualsOne";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::UnitLawViolated: return "UnitLawViolated";
    case ErrorKind::NotCompatible: return "NotCompatible";
    case ErrorKind::ZeroSetNotSingleton: return "ZeroSetNotSingleton";
    case ErrorKind::BadDesignatedZero: return "BadDesignatedZero";
    case ErrorKind::EmptyAct0: return "EmptyAct0";
    case ErrorKind::NotAHom: return "NotAHom";
    case ErrorKind::MonoidMismatch: return "MonoidMismatch";
    case ErrorKind::CategoryMismatch: return "CategoryMismatch";
    case ErrorKind::EmptyGeneratorInAct0: return "EmptyGeneratorInAct0";
    case ErrorKind::NotASubact: return "NotASubact";
    case ErrorKind::EmptyAct: return "EmptyAct";
    case ErrorKind::EmptyFamily: return "EmptyFamily";
    case ErrorKind::LabelClash: return "LabelClash";
    case ErrorKind::NotIdempotent: return "NotIdempotent";
    case ErrorKind::BoundTooLarge: return "BoundTooLarge";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownMonoid: return "UnknownMonoid";
    case ErrorKind::UnknownAct: return "UnknownAct";
  }
  return "Unknown";
}

Monoid Monoid::validate(std::vector<std::string> labels,
                        std::vector<std::vector<Elem>> table,
                        Elem one,
                        Elem zero) {
  std::size_t const n = labels.size();
  if (n == 0) {
    throw Error(ErrorKind::BadTable, "a monoid needs at least one element");
  }
  {
    std::set<std::string> seen;
    for (auto const& l : labels) {
      if (!seen.insert(l).second) {
        throw Error(ErrorKind::DuplicateLabel, "label '" + l + "' repeated");
      }
    }
  }
  if (table.size() != n) {
    throw Error(ErrorKind::BadTable, "expected " + std::to_string(n) +
                                         " rows, got " +
                                         std::to_string(table.size()));
  }
  std::vector<Elem> flat;
  flat.reserve(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    if (table[x].size() != n) {
      throw Error(ErrorKind::BadTable,
                  "row " + labels[x] + " has " +
                      std::to_string(table[x].size()) + " entries");
    }
    for (Elem v : table[x]) {
      if (v >= n) {
        throw Error(ErrorKind::BadTable,
                    "row " + labels[x] + " has out-of-range entry " +
                        std::to_string(v));
      }
      flat.push_back(v);
    }
  }
  if (one >= n || zero >= n) {
    throw Error(ErrorKind::BadTable, "identity or zero index out of range");
  }
  if (one == zero) {
    throw Error(ErrorKind::ZeroEqualsOne,
                "identity and zero are both " + labels[one]);
  }
  auto mul = [&](Elem x, Elem y) { return flat[x * n + y]; };
  for (Elem x = 0; x < n; ++x) {
    if (mul(one, x) != x || mul(x, one) != x) {
      throw Error(ErrorKind::BadIdentity,
                  labels[one] + " does not fix " + labels[x]);
    }
  }
  for (Elem x = 0; x < n; ++x) {
    if (mul(zero, x) != zero || mul(x, zero) != zero) {
      throw Error(ErrorKind::BadZero,
                  labels[zero] + " does not absorb " + labels[x]);
    }
  }
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      for (Elem z = 0; z < n; ++z) {
        if (mul(mul(x, y), z) != mul(x, mul(y, z))) {
          throw Error(ErrorKind::NotAssociative,
                      "(" + labels[x] + "*" + labels[y] + ")*" + labels[z] +
                          " != " + labels[x] + "*(" + labels[y] + "*" +
                          labels[z] + ")");
        }
      }
    }
  }
  return Monoid(std::make_shared<const Impl>(
      Impl{std::move(labels), std::move(flat), one, zero}));
}

std::optional<Elem> Monoid::find(const std::string& label) const {
  auto const& ls = impl_->labels;
  auto it = std::find(ls.begin(), ls.end(), label);
  if (it == ls.end()) {
    return std::nullopt;
  }
  return static_cast<Elem>(it - ls.begin());
}

bool Monoid::same_structure(const Monoid& other) const noexcept {
  return impl_ == other.impl_ ||
         (one() == other.one() && zero() == other.zero() &&
          table() == other.table());
}

}  // namespace monact
