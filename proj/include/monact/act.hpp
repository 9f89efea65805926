#ifndef MONACT_ACT_HPP_
#define MONACT_ACT_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "monact/monoid.hpp"

namespace monact {

// ActO is the category of all left acts together with the empty act; Act0
// holds acts with a single designated zero and zero-preserving maps.
enum class Category { ActO, Act0 };

std::string_view to_string(Category cat);
std::optional<Category> parse_category(std::string_view text);

// Membership mask over the carrier of an act.
using ElemSet = std::vector<bool>;

// A finite left act over a monoid with zero.
class Act {
 public:
  // rows[s][a] is the image of element a under monoid element s. For Act0
  // the designated zero may be omitted; it is then read off the zero set.
  static Act validate(Monoid monoid,
                      std::vector<std::string> labels,
                      std::vector<std::vector<Elem>> rows,
                      Category category,
                      std::optional<Elem> zero = std::nullopt);

  // The empty act; only representable in ActO.
  static Act empty(Monoid monoid);

  const Monoid& monoid() const noexcept { return impl_->monoid; }
  std::size_t size() const noexcept { return impl_->labels.size(); }
  bool empty() const noexcept { return size() == 0; }
  Category category() const noexcept { return impl_->category; }

  Elem act(Elem s, Elem a) const noexcept {
    return impl_->table[s * size() + a];
  }

  const std::string& label(Elem a) const { return impl_->labels[a]; }
  const std::vector<std::string>& labels() const noexcept {
    return impl_->labels;
  }
  std::optional<Elem> find(const std::string& label) const;

  // Row-major by monoid element: table()[s * size() + a] == act(s, a).
  const std::vector<Elem>& table() const noexcept { return impl_->table; }

  std::optional<Elem> designated_zero() const noexcept {
    return impl_->zero;
  }
  // The designated zero of an Act0 act; throws CategoryMismatch otherwise.
  Elem theta() const;

  bool is_zero(Elem a) const noexcept {
    return act(monoid().zero(), a) == a;
  }
  std::size_t zero_count() const noexcept;

  // Same carrier and action viewed in another category. Moving to Act0
  // requires exactly one zero element.
  Act in_category(Category category) const;
  Act relabeled(std::vector<std::string> labels) const;

  friend bool operator==(const Act& x, const Act& y);

 private:
  struct Impl {
    Monoid monoid;
    std::vector<std::string> labels;
    std::vector<Elem> table;
    Category category;
    std::optional<Elem> zero;
  };

  explicit Act(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

// Throws MonoidMismatch unless both acts are over structurally equal monoids.
void require_same_monoid(const Act& a, const Act& b);

// An equivariant map between two acts of the same category; in Act0 it also
// preserves the designated zero.
class ActHom {
 public:
  static ActHom make(Act source, Act target, std::vector<Elem> map);
  static ActHom identity(const Act& a);

  const Act& source() const noexcept { return source_; }
  const Act& target() const noexcept { return target_; }
  Category category() const noexcept { return source_.category(); }
  const std::vector<Elem>& map() const noexcept { return map_; }
  Elem operator()(Elem a) const noexcept { return map_[a]; }

  bool is_surjective() const;
  bool is_injective() const;
  ElemSet image() const;
  ElemSet image(const ElemSet& of) const;

  // next ∘ this
  ActHom then(const ActHom& next) const;

  friend bool operator==(const ActHom& f, const ActHom& g) {
    return f.map_ == g.map_ && f.source_ == g.source_ && f.target_ == g.target_;
  }

 private:
  ActHom(Act source, Act target, std::vector<Elem> map)
      : source_(std::move(source)),
        target_(std::move(target)),
        map_(std::move(map)) {}

  friend class HomBuilder;

  Act source_;
  Act target_;
  std::vector<Elem> map_;
};

// Constructs homs whose equivariance has already been established by the
// caller (search routines); skips the O(|S|·|A|) recheck.
class HomBuilder {
 public:
  static ActHom trusted(Act source, Act target, std::vector<Elem> map) {
    return ActHom(std::move(source), std::move(target), std::move(map));
  }
};

// A subset of an act closed under the action.
class Subact {
 public:
  static Subact make(Act parent, ElemSet mask);
  static Subact of(Act parent, const std::vector<Elem>& members);

  const Act& parent() const noexcept { return parent_; }
  const ElemSet& mask() const noexcept { return mask_; }
  bool contains(Elem a) const { return mask_[a]; }
  std::size_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }
  bool is_proper() const noexcept { return count_ < parent_.size(); }
  std::vector<Elem> members() const;

  // The subact as an act in its own right, in the parent's category.
  // Members keep their relative order and labels.
  Act as_act() const;
  ActHom inclusion() const;

  bool subset_of(const Subact& other) const;

  friend bool operator==(const Subact& x, const Subact& y) {
    return x.mask_ == y.mask_ && x.parent_ == y.parent_;
  }

 private:
  Subact(Act parent, ElemSet mask);

  Act parent_;
  ElemSet mask_;
  std::size_t count_;
};

// A left-compatible partition of an act's carrier. Block ids are normalised
// to first-occurrence order.
class ActCongruence {
 public:
  static ActCongruence make(Act parent, std::vector<Elem> block);

  const Act& parent() const noexcept { return parent_; }
  Elem block(Elem a) const { return block_[a]; }
  const std::vector<Elem>& blocks() const noexcept { return block_; }
  std::size_t block_count() const noexcept { return count_; }

  // The factor act (one element per block, ordered by first member) and the
  // natural projection. A block of several elements is labelled "[x,y,...]".
  std::pair<Act, ActHom> quotient() const;

 private:
  ActCongruence(Act parent, std::vector<Elem> block, std::size_t count)
      : parent_(std::move(parent)), block_(std::move(block)), count_(count) {}

  Act parent_;
  std::vector<Elem> block_;
  std::size_t count_;
};

}  // namespace monact

#endif  // MONACT_ACT_HPP_
