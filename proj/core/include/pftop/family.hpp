#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pftop/picture_fuzzy_set.hpp"

namespace pftop {

struct Member {
  std::string name;
  PictureFuzzySet set;
};

/// A finite, named collection of picture fuzzy sets over one universe.
///
/// Names are unique; set membership (`contains`) is by value, so the same
/// value may appear under two names.
class Family {
 public:
  explicit Family(Universe universe, std::vector<Member> members = {});

  const Universe& universe() const noexcept { return universe_; }
  std::span<const Member> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }

  bool contains(const PictureFuzzySet& set) const noexcept;
  const Member* find(std::string_view name) const noexcept;
  /// Throws UnknownName.
  const Member& at(std::string_view name) const;

  /// Appends a member; throws DuplicateName or UniverseMismatch.
  void add(std::string name, PictureFuzzySet set);

  /// Members ordered I, O, then by value; equal values by name.
  Family sorted() const;
  /// The named members in the given order; throws UnknownName.
  Family select(std::span<const std::string> names) const;

  std::vector<PictureFuzzySet> sets() const;

  /// Same universe and the same set of values, ignoring names, order and
  /// repetitions.
  friend bool same_values(const Family& a, const Family& b);
  /// Every value of `a` occurs in `b`.
  friend bool values_subset(const Family& a, const Family& b);

 private:
  Universe universe_;
  std::vector<Member> members_;
};

/// Throws EmptyFamily when `family` has no members; `what` names the operation.
void require_non_empty(const Family& family, std::string_view what);

}  // namespace pftop
