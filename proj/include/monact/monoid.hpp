#ifndef MONACT_MONOID_HPP_
#define MONACT_MONOID_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace monact {

using Elem = std::uint32_t;

// A finite monoid with a zero element distinct from the identity.
//
// Elements are dense indices 0..size()-1 with opaque string labels. Values
// are immutable and cheap to copy (the table is shared).
class Monoid {
 public:
  // Checks every monoid-with-zero axiom and throws monact::Error naming the
  // first witness found (triples are scanned in lexicographic order).
  // `table[x][y]` is the product x*y.
  static Monoid validate(std::vector<std::string> labels,
                         std::vector<std::vector<Elem>> table,
                         Elem one,
                         Elem zero);

  std::size_t size() const noexcept { return impl_->labels.size(); }
  Elem one() const noexcept { return impl_->one; }
  Elem zero() const noexcept { return impl_->zero; }

  Elem mul(Elem x, Elem y) const noexcept {
    return impl_->table[x * size() + y];
  }

  const std::string& label(Elem x) const { return impl_->labels[x]; }
  const std::vector<std::string>& labels() const noexcept {
    return impl_->labels;
  }
  std::optional<Elem> find(const std::string& label) const;

  // Row-major product table, size()*size() entries.
  const std::vector<Elem>& table() const noexcept { return impl_->table; }

  bool is_idempotent(Elem e) const noexcept { return mul(e, e) == e; }

  // Same carrier size, identity, zero and products. Labels are ignored.
  bool same_structure(const Monoid& other) const noexcept;

  friend bool operator==(const Monoid& a, const Monoid& b) {
    return a.impl_ == b.impl_ ||
           (a.same_structure(b) && a.labels() == b.labels());
  }

 private:
  struct Impl {
    std::vector<std::string> labels;
    std::vector<Elem> table;
    Elem one;
    Elem zero;
  };

  explicit Monoid(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

}  // namespace monact

#endif  // MONACT_MONOID_HPP_
