#include "monact/act.hpp"

#include <algorithm>
#include <set>

#include "monact/error.hpp"

namespace monact {

std::string_view to_string(Category cat) {
  return cat == Category::ActO ? "acto" : "act0";
}

std::optional<Category> parse_category(std::string_view text) {
  if (text == "acto") {
    return Category::ActO;
  }
  if (text == "act0") {
    return Category::Act0;
  }
  return std::nullopt;
}

Act Act::validate(Monoid monoid,
                  std::vector<std::string> labels,
                  std::vector<std::vector<Elem>> rows,
                  Category category,
                  std::optional<Elem> zero) {
  std::size_t const n = labels.size();
  std::size_t const m = monoid.size();
  {
    std::set<std::string> seen;
    for (auto const& l : labels) {
      if (!seen.insert(l).second) {
        throw Error(ErrorKind::DuplicateLabel, "label '" + l + "' repeated");
      }
    }
  }
  if (rows.size() != m) {
    throw Error(ErrorKind::BadTable, "expected " + std::to_string(m) +
                                         " rows (one per monoid element), got " +
                                         std::to_string(rows.size()));
  }
  std::vector<Elem> table;
  table.reserve(m * n);
  for (std::size_t s = 0; s < m; ++s) {
    if (rows[s].size() != n) {
      throw Error(ErrorKind::BadTable, "row " + monoid.label(s) + " has " +
                                           std::to_string(rows[s].size()) +
                                           " entries, expected " +
                                           std::to_string(n));
    }
    for (Elem v : rows[s]) {
      if (v >= n) {
        throw Error(ErrorKind::BadTable, "row " + monoid.label(s) +
                                             " has out-of-range entry " +
                                             std::to_string(v));
      }
      table.push_back(v);
    }
  }
  auto at = [&](Elem s, Elem a) { return table[s * n + a]; };
  for (Elem a = 0; a < n; ++a) {
    if (at(monoid.one(), a) != a) {
      throw Error(ErrorKind::UnitLawViolated,
                  monoid.label(monoid.one()) + " moves " + labels[a]);
    }
  }
  for (Elem s = 0; s < m; ++s) {
    for (Elem t = 0; t < m; ++t) {
      for (Elem a = 0; a < n; ++a) {
        if (at(monoid.mul(s, t), a) != at(s, at(t, a))) {
          throw Error(ErrorKind::NotCompatible,
                      "(" + monoid.label(s) + "*" + monoid.label(t) + ")." +
                          labels[a] + " != " + monoid.label(s) + ".(" +
                          monoid.label(t) + "." + labels[a] + ")");
        }
      }
    }
  }
  if (category == Category::Act0) {
    if (n == 0) {
      throw Error(ErrorKind::EmptyAct0, "an act in act0 needs its zero");
    }
    std::optional<Elem> found;
    for (Elem a = 0; a < n; ++a) {
      if (at(monoid.zero(), a) == a) {
        if (found) {
          throw Error(ErrorKind::ZeroSetNotSingleton,
                      labels[*found] + " and " + labels[a] +
                          " are both zero elements");
        }
        found = a;
      }
    }
    if (zero && *zero != *found) {
      throw Error(ErrorKind::BadDesignatedZero,
                  labels[*zero] + " is not the zero element (" +
                      labels[*found] + " is)");
    }
    zero = found;
  } else if (zero) {
    throw Error(ErrorKind::BadDesignatedZero,
                "a designated zero is only allowed in act0");
  }
  return Act(std::make_shared<const Impl>(Impl{std::move(monoid),
                                               std::move(labels),
                                               std::move(table), category,
                                               zero}));
}

Act Act::empty(Monoid monoid) {
  return Act(std::make_shared<const Impl>(
      Impl{std::move(monoid), {}, {}, Category::ActO, std::nullopt}));
}

std::optional<Elem> Act::find(const std::string& label) const {
  auto const& ls = impl_->labels;
  auto it = std::find(ls.begin(), ls.end(), label);
  if (it == ls.end()) {
    return std::nullopt;
  }
  return static_cast<Elem>(it - ls.begin());
}

Elem Act::theta() const {
  if (!impl_->zero) {
    throw Error(ErrorKind::CategoryMismatch,
                "only acts in act0 carry a designated zero");
  }
  return *impl_->zero;
}

std::size_t Act::zero_count() const noexcept {
  std::size_t count = 0;
  for (Elem a = 0; a < size(); ++a) {
    count += is_zero(a) ? 1 : 0;
  }
  return count;
}

Act Act::in_category(Category category) const {
  if (category == this->category()) {
    return *this;
  }
  std::optional<Elem> zero;
  if (category == Category::Act0) {
    if (empty()) {
      throw Error(ErrorKind::EmptyAct0, "the empty act has no zero");
    }
    if (zero_count() != 1) {
      throw Error(ErrorKind::ZeroSetNotSingleton,
                  std::to_string(zero_count()) + " zero elements");
    }
    for (Elem a = 0; a < size(); ++a) {
      if (is_zero(a)) {
        zero = a;
      }
    }
  }
  return Act(std::make_shared<const Impl>(
      Impl{monoid(), labels(), table(), category, zero}));
}

Act Act::relabeled(std::vector<std::string> labels) const {
  if (labels.size() != size()) {
    throw Error(ErrorKind::BadTable, "relabelling changes the carrier size");
  }
  std::set<std::string> seen;
  for (auto const& l : labels) {
    if (!seen.insert(l).second) {
      throw Error(ErrorKind::DuplicateLabel, "label '" + l + "' repeated");
    }
  }
  return Act(std::make_shared<const Impl>(
      Impl{monoid(), std::move(labels), table(), category(), impl_->zero}));
}

bool operator==(const Act& x, const Act& y) {
  if (x.impl_ == y.impl_) {
    return true;
  }
  return x.category() == y.category() &&
         x.monoid().same_structure(y.monoid()) && x.labels() == y.labels() &&
         x.table() == y.table();
}

void require_same_monoid(const Act& a, const Act& b) {
  if (!a.monoid().same_structure(b.monoid())) {
    throw Error(ErrorKind::MonoidMismatch,
                "acts are over different monoids");
  }
}

// ActHom ---------------------------------------------------------------------

ActHom ActHom::make(Act source, Act target, std::vector<Elem> map) {
  require_same_monoid(source, target);
  if (source.category() != target.category()) {
    throw Error(ErrorKind::CategoryMismatch,
                "source is in " + std::string(to_string(source.category())) +
                    ", target in " +
                    std::string(to_string(target.category())));
  }
  if (map.size() != source.size()) {
    throw Error(ErrorKind::NotAHom, "map is not total on the source");
  }
  for (Elem v : map) {
    if (v >= target.size()) {
      throw Error(ErrorKind::NotAHom, "map leaves the target carrier");
    }
  }
  Monoid const& m = source.monoid();
  for (Elem s = 0; s < m.size(); ++s) {
    for (Elem a = 0; a < source.size(); ++a) {
      if (map[source.act(s, a)] != target.act(s, map[a])) {
        throw Error(ErrorKind::NotAHom,
                    "f(" + m.label(s) + "." + source.label(a) + ") != " +
                        m.label(s) + ".f(" + source.label(a) + ")");
      }
    }
  }
  if (source.category() == Category::Act0 &&
      map[source.theta()] != target.theta()) {
    throw Error(ErrorKind::NotAHom, "zero is not preserved");
  }
  return ActHom(std::move(source), std::move(target), std::move(map));
}

ActHom ActHom::identity(const Act& a) {
  std::vector<Elem> map(a.size());
  for (Elem x = 0; x < a.size(); ++x) {
    map[x] = x;
  }
  return ActHom(a, a, std::move(map));
}

ElemSet ActHom::image() const {
  ElemSet out(target_.size(), false);
  for (Elem v : map_) {
    out[v] = true;
  }
  return out;
}

ElemSet ActHom::image(const ElemSet& of) const {
  ElemSet out(target_.size(), false);
  for (Elem a = 0; a < map_.size(); ++a) {
    if (of[a]) {
      out[map_[a]] = true;
    }
  }
  return out;
}

bool ActHom::is_surjective() const {
  auto img = image();
  return std::all_of(img.begin(), img.end(), [](bool b) { return b; });
}

bool ActHom::is_injective() const {
  ElemSet seen(target_.size(), false);
  for (Elem v : map_) {
    if (seen[v]) {
      return false;
    }
    seen[v] = true;
  }
  return true;
}

ActHom ActHom::then(const ActHom& next) const {
  if (!(target_ == next.source_)) {
    throw Error(ErrorKind::NotAHom, "composing homs with mismatched ends");
  }
  std::vector<Elem> map(map_.size());
  for (Elem a = 0; a < map_.size(); ++a) {
    map[a] = next.map_[map_[a]];
  }
  return ActHom(source_, next.target_, std::move(map));
}

// Subact ---------------------------------------------------------------------

Subact::Subact(Act parent, ElemSet mask)
    : parent_(std::move(parent)),
      mask_(std::move(mask)),
      count_(static_cast<std::size_t>(
          std::count(mask_.begin(), mask_.end(), true))) {}

Subact Subact::make(Act parent, ElemSet mask) {
  if (mask.size() != parent.size()) {
    throw Error(ErrorKind::NotASubact, "mask size differs from carrier size");
  }
  Monoid const& m = parent.monoid();
  for (Elem a = 0; a < parent.size(); ++a) {
    if (!mask[a]) {
      continue;
    }
    for (Elem s = 0; s < m.size(); ++s) {
      if (!mask[parent.act(s, a)]) {
        throw Error(ErrorKind::NotASubact,
                    m.label(s) + "." + parent.label(a) + " = " +
                        parent.label(parent.act(s, a)) + " escapes");
      }
    }
  }
  Subact out(std::move(parent), std::move(mask));
  if (out.empty() && out.parent_.category() == Category::Act0) {
    throw Error(ErrorKind::NotASubact, "subacts in act0 are nonempty");
  }
  return out;
}

Subact Subact::of(Act parent, const std::vector<Elem>& members) {
  ElemSet mask(parent.size(), false);
  for (Elem a : members) {
    if (a >= parent.size()) {
      throw Error(ErrorKind::NotASubact, "member out of range");
    }
    mask[a] = true;
  }
  return make(std::move(parent), std::move(mask));
}

std::vector<Elem> Subact::members() const {
  std::vector<Elem> out;
  out.reserve(count_);
  for (Elem a = 0; a < mask_.size(); ++a) {
    if (mask_[a]) {
      out.push_back(a);
    }
  }
  return out;
}

bool Subact::subset_of(const Subact& other) const {
  for (std::size_t a = 0; a < mask_.size(); ++a) {
    if (mask_[a] && !other.mask_[a]) {
      return false;
    }
  }
  return true;
}

Act Subact::as_act() const {
  auto members = this->members();
  Monoid const& m = parent_.monoid();
  if (members.empty()) {
    return Act::empty(m);
  }
  std::vector<Elem> index(parent_.size(), 0);
  std::vector<std::string> labels;
  for (Elem i = 0; i < members.size(); ++i) {
    index[members[i]] = i;
    labels.push_back(parent_.label(members[i]));
  }
  std::vector<std::vector<Elem>> rows(m.size());
  for (Elem s = 0; s < m.size(); ++s) {
    for (Elem a : members) {
      rows[s].push_back(index[parent_.act(s, a)]);
    }
  }
  return Act::validate(m, std::move(labels), std::move(rows),
                       parent_.category());
}

ActHom Subact::inclusion() const {
  return ActHom::make(as_act(), parent_, members());
}

// ActCongruence --------------------------------------------------------------

ActCongruence ActCongruence::make(Act parent, std::vector<Elem> block) {
  if (block.size() != parent.size()) {
    throw Error(ErrorKind::BadTable, "partition size differs from carrier");
  }
  std::vector<Elem> renumber;
  std::vector<Elem> normal(block.size());
  for (Elem a = 0; a < block.size(); ++a) {
    auto it = std::find(renumber.begin(), renumber.end(), block[a]);
    if (it == renumber.end()) {
      normal[a] = static_cast<Elem>(renumber.size());
      renumber.push_back(block[a]);
    } else {
      normal[a] = static_cast<Elem>(it - renumber.begin());
    }
  }
  Monoid const& m = parent.monoid();
  for (Elem a = 0; a < parent.size(); ++a) {
    for (Elem b = a + 1; b < parent.size(); ++b) {
      if (normal[a] != normal[b]) {
        continue;
      }
      for (Elem s = 0; s < m.size(); ++s) {
        if (normal[parent.act(s, a)] != normal[parent.act(s, b)]) {
          throw Error(ErrorKind::NotCompatible,
                      parent.label(a) + " ~ " + parent.label(b) +
                          " but not after " + m.label(s));
        }
      }
    }
  }
  std::size_t count = renumber.size();
  return ActCongruence(std::move(parent), std::move(normal), count);
}

std::pair<Act, ActHom> ActCongruence::quotient() const {
  Monoid const& m = parent_.monoid();
  std::vector<std::vector<Elem>> members(count_);
  for (Elem a = 0; a < parent_.size(); ++a) {
    members[block_[a]].push_back(a);
  }
  std::vector<std::string> labels;
  for (auto const& cls : members) {
    if (cls.size() == 1) {
      labels.push_back(parent_.label(cls.front()));
    } else {
      std::string l = "[";
      for (std::size_t i = 0; i < cls.size(); ++i) {
        l += (i ? "," : "") + parent_.label(cls[i]);
      }
      labels.push_back(l + "]");
    }
  }
  std::vector<std::vector<Elem>> rows(m.size());
  for (Elem s = 0; s < m.size(); ++s) {
    for (auto const& cls : members) {
      rows[s].push_back(block_[parent_.act(s, cls.front())]);
    }
  }
  // A quotient of an act0 act keeps a unique zero.
  Act quotient = Act::validate(m, std::move(labels), std::move(rows),
                               parent_.category());
  return {quotient, HomBuilder::trusted(parent_, quotient, block_)};
}

}  // namespace monact
