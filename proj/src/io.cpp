#include "monact/io.hpp"

#include <optional>
#include <sstream>

namespace monact {

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;  // 1-based
  std::vector<Token> tokens;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    std::string_view raw = text.substr(pos, end - pos);
    if (!raw.empty() && raw.back() == '\r') {
      raw.remove_suffix(1);
    }
    ++number;
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) {
        ++i;
      }
      std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t') {
        ++i;
      }
      if (i > start) {
        line.tokens.push_back({std::string(raw.substr(start, i - start)), start + 1});
      }
    }
    bool comment = !line.tokens.empty() && line.tokens.front().text.starts_with("#");
    if (!line.tokens.empty() && !comment) {
      out.push_back(std::move(line));
    }
    if (end == text.size()) {
      break;
    }
    pos = end + 1;
  }
  return out;
}

class Cursor {
 public:
  explicit Cursor(std::vector<Line> lines) : lines_(std::move(lines)) {}

  bool done() const { return next_ >= lines_.size(); }

  const Line& take(std::string_view what) {
    if (done()) {
      std::size_t last = lines_.empty() ? 1 : lines_.back().number + 1;
      throw ParseError(last, 1, "expected " + std::string(what) +
                                    ", found end of file");
    }
    return lines_[next_++];
  }

  // A line "<key> <values...>"; returns the values.
  std::vector<Token> keyed(std::string_view key) {
    const Line& line = take("'" + std::string(key) + "'");
    if (line.tokens.front().text != key) {
      throw ParseError(line.number, line.tokens.front().column,
                       "expected '" + std::string(key) + "', found '" +
                           line.tokens.front().text + "'");
    }
    last_ = &line;
    return {line.tokens.begin() + 1, line.tokens.end()};
  }

  bool peek_is(std::string_view key) const {
    return !done() && lines_[next_].tokens.front().text == key;
  }

  const Line& last() const { return *last_; }

 private:
  std::vector<Line> lines_;
  std::size_t next_ = 0;
  const Line* last_ = nullptr;
};

Token single(const Line& line, const std::vector<Token>& values,
             std::string_view key) {
  if (values.size() != 1) {
    std::size_t col = values.size() > 1 ? values[1].column
                                        : line.tokens.front().column +
                                              line.tokens.front().text.size();
    throw ParseError(line.number, col,
                     "'" + std::string(key) + "' takes exactly one label");
  }
  return values.front();
}

Elem lookup(const std::vector<std::string>& labels, const Token& token,
            std::size_t line) {
  for (Elem i = 0; i < labels.size(); ++i) {
    if (labels[i] == token.text) {
      return i;
    }
  }
  throw ParseError(line, token.column, "unknown label '" + token.text + "'");
}

std::vector<std::string> texts(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  for (auto const& t : tokens) {
    out.push_back(t.text);
  }
  return out;
}

std::vector<std::vector<Elem>> read_rows(Cursor& cursor, std::size_t rows,
                                         const std::vector<std::string>& labels,
                                         std::string_view what) {
  std::vector<std::vector<Elem>> out;
  if (labels.empty()) {
    // Rows of the empty act are blank lines.
    out.resize(rows);
    rows = 0;
  }
  for (std::size_t r = 0; r < rows; ++r) {
    const Line& line = cursor.take("table row " + std::to_string(r + 1));
    if (line.tokens.size() != labels.size()) {
      throw ParseError(line.number,
                       line.tokens.size() > labels.size()
                           ? line.tokens[labels.size()].column
                           : line.tokens.back().column,
                       "table row has " + std::to_string(line.tokens.size()) +
                           " entries, expected " +
                           std::to_string(labels.size()) + " " +
                           std::string(what));
    }
    std::vector<Elem> row;
    for (auto const& t : line.tokens) {
      row.push_back(lookup(labels, t, line.number));
    }
    out.push_back(std::move(row));
  }
  if (!cursor.done()) {
    const Line& extra = cursor.take("end of file");
    throw ParseError(extra.number, extra.tokens.front().column,
                     "unexpected content after the table");
  }
  return out;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    out += (i ? " " : "") + parts[i];
  }
  return out;
}

}  // namespace

void Workspace::add_monoid(NamedMonoid monoid) {
  if (monoids_.contains(monoid.name)) {
    throw Error(ErrorKind::DuplicateLabel,
                "monoid '" + monoid.name + "' already loaded");
  }
  std::string name = monoid.name;
  monoids_.emplace(std::move(name), std::move(monoid));
}

void Workspace::add_act(NamedAct act) {
  if (acts_.contains(act.name)) {
    throw Error(ErrorKind::DuplicateLabel,
                "act '" + act.name + "' already loaded");
  }
  if (!has_monoid(act.monoid_name)) {
    throw Error(ErrorKind::UnknownMonoid, act.monoid_name);
  }
  std::string name = act.name;
  acts_.emplace(std::move(name), std::move(act));
}

const Monoid& Workspace::monoid(const std::string& name) const {
  auto it = monoids_.find(name);
  if (it == monoids_.end()) {
    throw Error(ErrorKind::UnknownMonoid, name);
  }
  return it->second.monoid;
}

const NamedAct& Workspace::act(const std::string& name) const {
  auto it = acts_.find(name);
  if (it == acts_.end()) {
    throw Error(ErrorKind::UnknownAct, name);
  }
  return it->second;
}

bool Workspace::has_monoid(const std::string& name) const {
  return monoids_.contains(name);
}

NamedMonoid parse_monoid_file(std::string_view text) {
  Cursor cursor(split_lines(text));
  auto header = cursor.keyed("monoid");
  std::string name = single(cursor.last(), header, "monoid").text;
  auto elements = cursor.keyed("elements:");
  if (elements.empty()) {
    throw ParseError(cursor.last().number, cursor.last().tokens.front().column,
                     "a monoid needs elements");
  }
  auto labels = texts(elements);
  auto one_vals = cursor.keyed("one:");
  auto one_tok = single(cursor.last(), one_vals, "one:");
  Elem one = lookup(labels, one_tok, cursor.last().number);
  auto zero_vals = cursor.keyed("zero:");
  auto zero_tok = single(cursor.last(), zero_vals, "zero:");
  Elem zero = lookup(labels, zero_tok, cursor.last().number);
  auto table_rest = cursor.keyed("table:");
  if (!table_rest.empty()) {
    throw ParseError(cursor.last().number, table_rest.front().column,
                     "rows start on the line after 'table:'");
  }
  auto rows = read_rows(cursor, labels.size(), labels, "(one per element)");
  return {name, Monoid::validate(labels, std::move(rows), one, zero)};
}

NamedAct parse_act_file(std::string_view text, const Workspace& workspace) {
  Cursor cursor(split_lines(text));
  auto header = cursor.keyed("act");
  const Line& head = cursor.last();
  if (header.size() != 5 || header[1].text != "over" ||
      header[3].text != "category") {
    throw ParseError(head.number, head.tokens.front().column,
                     "expected 'act <name> over <monoid> category <acto|act0>'");
  }
  std::string name = header[0].text;
  std::string monoid_name = header[2].text;
  auto category = parse_category(header[4].text);
  if (!category) {
    throw ParseError(head.number, header[4].column,
                     "category must be 'acto' or 'act0'");
  }
  if (!workspace.has_monoid(monoid_name)) {
    throw Error(ErrorKind::UnknownMonoid,
                "act '" + name + "' refers to monoid '" + monoid_name + "'");
  }
  Monoid const& monoid = workspace.monoid(monoid_name);
  auto labels = texts(cursor.keyed("elements:"));
  std::optional<Elem> zero;
  if (cursor.peek_is("zero:")) {
    auto zero_vals = cursor.keyed("zero:");
    auto tok = single(cursor.last(), zero_vals, "zero:");
    if (*category != Category::Act0) {
      throw ParseError(cursor.last().number, cursor.last().tokens.front().column,
                       "'zero:' is only allowed in act0");
    }
    zero = lookup(labels, tok, cursor.last().number);
  } else if (*category == Category::Act0) {
    std::size_t line = cursor.done() ? 0 : cursor.last().number + 1;
    throw ParseError(line, 1, "act0 files need a 'zero:' line");
  }
  auto table_rest = cursor.keyed("table:");
  if (!table_rest.empty()) {
    throw ParseError(cursor.last().number, table_rest.front().column,
                     "rows start on the line after 'table:'");
  }
  auto rows = read_rows(cursor, monoid.size(), labels,
                        "(one per act element)");
  return {name, monoid_name,
          Act::validate(monoid, labels, std::move(rows), *category, zero)};
}

std::string print_monoid(const std::string& name, const Monoid& monoid) {
  std::ostringstream out;
  out << "monoid " << name << "\n";
  out << "elements: " << join(monoid.labels()) << "\n";
  out << "one: " << monoid.label(monoid.one()) << "\n";
  out << "zero: " << monoid.label(monoid.zero()) << "\n";
  out << "table:\n";
  for (Elem x = 0; x < monoid.size(); ++x) {
    std::vector<std::string> row;
    for (Elem y = 0; y < monoid.size(); ++y) {
      row.push_back(monoid.label(monoid.mul(x, y)));
    }
    out << join(row) << "\n";
  }
  return out.str();
}

std::string print_act(const std::string& name, const std::string& monoid_name,
                      const Act& act) {
  std::ostringstream out;
  out << "act " << name << " over " << monoid_name << " category "
      << to_string(act.category()) << "\n";
  out << "elements: " << join(act.labels()) << "\n";
  if (act.category() == Category::Act0) {
    out << "zero: " << act.label(act.theta()) << "\n";
  }
  out << "table:\n";
  for (Elem s = 0; s < act.monoid().size(); ++s) {
    std::vector<std::string> row;
    for (Elem a = 0; a < act.size(); ++a) {
      row.push_back(act.label(act.act(s, a)));
    }
    out << join(row) << "\n";
  }
  return out.str();
}

void load_into(Workspace& workspace, std::string_view text) {
  auto lines = split_lines(text);
  if (lines.empty()) {
    throw ParseError(1, 1, "empty file");
  }
  std::string const& keyword = lines.front().tokens.front().text;
  if (keyword == "monoid") {
    workspace.add_monoid(parse_monoid_file(text));
  } else if (keyword == "act") {
    workspace.add_act(parse_act_file(text, workspace));
  } else {
    throw ParseError(lines.front().number, lines.front().tokens.front().column,
                     "expected 'monoid' or 'act', found '" + keyword + "'");
  }
}

}  // namespace monact
