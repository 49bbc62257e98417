#include "pftop/relations.hpp"

#include <map>

namespace pftop {

bool balanced(const PictureFuzzySet& a, const PictureFuzzySet& b) {
  require_same_universe(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].mu != b[i].mu || a[i].sigma != b[i].sigma || a[i].rho > b[i].rho) return false;
  }
  return true;
}

bool rho_equivalent(const PictureFuzzySet& a, const PictureFuzzySet& b) {
  require_same_universe(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].rho != b[i].rho) return false;
  }
  return true;
}

PictureFuzzySet zero_rho_join(const PictureFuzzySet& a) {
  std::vector<MembershipTriple> out(a.triples().begin(), a.triples().end());
  for (auto& t : out) t.rho = Grade::zero();
  return PictureFuzzySet(a.universe(), std::move(out));
}

namespace {

std::vector<Grade> rho_vector(const PictureFuzzySet& s) {
  std::vector<Grade> out;
  out.reserve(s.size());
  for (const auto& t : s.triples()) out.push_back(t.rho);
  return out;
}

}  // namespace

RhoPartition partition_by_rho(const Family& family) {
  require_non_empty(family, "partition_by_rho");
  std::map<std::vector<Grade>, std::vector<std::string>> groups;
  for (const auto& m : family.members()) groups[rho_vector(m.set)].push_back(m.name);

  RhoPartition out;
  out.classes.reserve(groups.size());
  for (auto& [rho, names] : groups) out.classes.push_back({rho, std::move(names)});
  return out;
}

Rank rank_of(const Family& family) { return Rank{partition_by_rho(family).classes.size()}; }

}  // namespace pftop
