#ifndef MONACT_ERROR_HPP_
#define MONACT_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace monact {

enum class ErrorKind {
  BadTable,
  NotAssociative,
  BadIdentity,
  BadZero,
  ZeroEqualsOne,
  DuplicateLabel,
  UnitLawViolated,
  NotCompatible,
  ZeroSetNotSingleton,
  BadDesignatedZero,
  EmptyAct0,
  NotAHom,
  MonoidMismatch,
  CategoryMismatch,
  EmptyGeneratorInAct0,
  NotASubact,
  EmptyAct,
  EmptyFamily,
  LabelClash,
  NotIdempotent,
  BoundTooLarge,
  SyntaxError,
  UnknownMonoid,
  UnknownAct,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a machine-readable kind; the
// message names the witnessing elements where there are any.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace monact

#endif  // MONACT_ERROR_HPP_
