#include "pftop/family.hpp"

#include <algorithm>

#include "pftop/error.hpp"

namespace pftop {

Family::Family(Universe universe, std::vector<Member> members) : universe_(std::move(universe)) {
  members_.reserve(members.size());
  for (auto& m : members) add(std::move(m.name), std::move(m.set));
}

bool Family::contains(const PictureFuzzySet& set) const noexcept {
  return std::any_of(members_.begin(), members_.end(), [&](const Member& m) { return m.set == set; });
}

const Member* Family::find(std::string_view name) const noexcept {
  const auto it = std::find_if(members_.begin(), members_.end(), [&](const Member& m) { return m.name == name; });
  return it == members_.end() ? nullptr : &*it;
}

const Member& Family::at(std::string_view name) const {
  if (const Member* m = find(name)) return *m;
  throw Error(ErrorKind::UnknownName, "no member named '" + std::string(name) + "'");
}

void Family::add(std::string name, PictureFuzzySet set) {
  if (!(set.universe() == universe_)) {
    throw Error(ErrorKind::UniverseMismatch, "member '" + name + "' is defined over a different universe");
  }
  if (find(name)) {
    throw Error(ErrorKind::DuplicateName, "member name '" + name + "' is used twice");
  }
  members_.push_back({std::move(name), std::move(set)});
}

Family Family::sorted() const {
  Family out = *this;
  std::stable_sort(out.members_.begin(), out.members_.end(), [](const Member& a, const Member& b) {
    if (canonical_less(a.set, b.set)) return true;
    if (canonical_less(b.set, a.set)) return false;
    return a.name < b.name;
  });
  return out;
}

Family Family::select(std::span<const std::string> names) const {
  Family out(universe_);
  for (const auto& name : names) {
    const Member& m = at(name);
    out.add(m.name, m.set);
  }
  return out;
}

std::vector<PictureFuzzySet> Family::sets() const {
  std::vector<PictureFuzzySet> out;
  out.reserve(members_.size());
  for (const auto& m : members_) out.push_back(m.set);
  return out;
}

bool values_subset(const Family& a, const Family& b) {
  if (!(a.universe_ == b.universe_)) return false;
  return std::all_of(a.members_.begin(), a.members_.end(), [&](const Member& m) { return b.contains(m.set); });
}

bool same_values(const Family& a, const Family& b) { return values_subset(a, b) && values_subset(b, a); }

void require_non_empty(const Family& family, std::string_view what) {
  if (family.empty()) {
    throw Error(ErrorKind::EmptyFamily, std::string(what) + " needs a non-empty family");
  }
}

}  // namespace pftop
