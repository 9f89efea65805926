#ifndef MONACT_IO_HPP_
#define MONACT_IO_HPP_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "monact/act.hpp"
#include "monact/error.hpp"
#include "monact/monoid.hpp"

namespace monact {

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(ErrorKind::SyntaxError, "line " + std::to_string(line) +
                                          ", column " + std::to_string(column) +
                                          ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct NamedMonoid {
  std::string name;
  Monoid monoid;
};

struct NamedAct {
  std::string name;
  std::string monoid_name;
  Act act;
};

// Named monoids and acts loaded for one CLI invocation. Names are unique per
// kind and every act refers to a loaded monoid.
class Workspace {
 public:
  void add_monoid(NamedMonoid monoid);
  void add_act(NamedAct act);

  const Monoid& monoid(const std::string& name) const;
  const NamedAct& act(const std::string& name) const;
  bool has_monoid(const std::string& name) const;

  const std::map<std::string, NamedMonoid>& monoids() const { return monoids_; }
  const std::map<std::string, NamedAct>& acts() const { return acts_; }

 private:
  std::map<std::string, NamedMonoid> monoids_;
  std::map<std::string, NamedAct> acts_;
};

// Text formats:
//
//   monoid <name>                  act <name> over <monoid> category <acto|act0>
//   elements: <label> ...          elements: <label> ...
//   one: <label>                   zero: <label>      (act0 only)
//   zero: <label>                  table:
//   table:                         <one row per monoid element>
//   <one row per element>
//
// Blank lines and lines starting with '#' are ignored when parsing.
NamedMonoid parse_monoid_file(std::string_view text);
NamedAct parse_act_file(std::string_view text, const Workspace& workspace);

std::string print_monoid(const std::string& name, const Monoid& monoid);
std::string print_act(const std::string& name, const std::string& monoid_name,
                      const Act& act);

// Loads a file of either kind, dispatching on its first keyword.
void load_into(Workspace& workspace, std::string_view text);

}  // namespace monact

#endif  // MONACT_IO_HPP_
