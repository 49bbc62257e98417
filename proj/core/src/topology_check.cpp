#include "pftop/topology_check.hpp"

#include <algorithm>

#include "pftop/error.hpp"
#include "pftop/relations.hpp"

namespace pftop {

std::string_view to_string(ViolationKind kind) noexcept {
  switch (kind) {
    case ViolationKind::MissingFull: return "MissingFull";
    case ViolationKind::MissingNull: return "MissingNull";
    case ViolationKind::UnionEscape: return "UnionEscape";
    case ViolationKind::IntersectionEscape: return "IntersectionEscape";
  }
  return "Unknown";
}

std::string_view to_string(BaseDefect defect) noexcept {
  switch (defect) {
    case BaseDefect::ContainsFull: return "ContainsFull";
    case BaseDefect::ContainsNull: return "ContainsNull";
    case BaseDefect::IntersectionEscape: return "IntersectionEscape";
  }
  return "Unknown";
}

namespace {

bool member_less(const Member& a, const Member& b) {
  if (canonical_less(a.set, b.set)) return true;
  if (canonical_less(b.set, a.set)) return false;
  return a.name < b.name;
}

std::pair<Member, Member> ordered(const Member& a, const Member& b) {
  return member_less(b, a) ? std::pair{b, a} : std::pair{a, b};
}

}  // namespace

AxiomReport check_axioms(const Family& family) {
  require_non_empty(family, "check_axioms");
  const Universe& u = family.universe();
  AxiomReport report;

  const auto full = PictureFuzzySet::full(u);
  const auto null = PictureFuzzySet::null(u);
  if (!family.contains(full)) report.violations.push_back({ViolationKind::MissingFull, {}, full});
  if (!family.contains(null)) report.violations.push_back({ViolationKind::MissingNull, {}, null});

  const auto members = family.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const auto [lhs, rhs] = ordered(members[i], members[j]);
      if (auto join = unite(lhs.set, rhs.set); !family.contains(join)) {
        report.violations.push_back({ViolationKind::UnionEscape, {lhs, rhs}, std::move(join)});
      }
      if (auto meet = intersect(lhs.set, rhs.set); !family.contains(meet)) {
        report.violations.push_back({ViolationKind::IntersectionEscape, {lhs, rhs}, std::move(meet)});
      }
    }
  }

  std::stable_sort(report.violations.begin(), report.violations.end(),
                   [](const AxiomViolation& a, const AxiomViolation& b) {
                     if (a.kind != b.kind) return a.kind < b.kind;
                     return std::lexicographical_compare(a.operands.begin(), a.operands.end(), b.operands.begin(),
                                                         b.operands.end(), member_less);
                   });
  report.is_topology = report.violations.empty();
  return report;
}

BaseReport check_base(const Family& candidate) {
  require_non_empty(candidate, "check_base");
  for (const auto& m : candidate.members()) {
    if (m.set.is_full()) return {false, BaseWitness{BaseDefect::ContainsFull, {m}, m.set}};
    if (m.set.is_null()) return {false, BaseWitness{BaseDefect::ContainsNull, {m}, m.set}};
  }
  const auto members = candidate.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (auto meet = intersect(members[i].set, members[j].set); !candidate.contains(meet)) {
        return {false, BaseWitness{BaseDefect::IntersectionEscape, {members[i], members[j]}, std::move(meet)}};
      }
    }
  }
  return {true, std::nullopt};
}

MinimalityReport check_subbase_minimality(const Family& candidate) {
  require_non_empty(candidate, "check_subbase_minimality");
  const auto members = candidate.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const auto& a = members[i].set;
      const auto& b = members[j].set;
      if (!candidate.contains(intersect(a, b))) continue;
      if (!includes(a, b) && !includes(b, a)) {
        return {false, std::pair{members[i], members[j]}};
      }
    }
  }
  return {true, std::nullopt};
}

namespace {

bool is_union_of_base(const PictureFuzzySet& target, const Family& base) {
  // Union is monotone in each argument, so `target` is a union of base
  // members iff the union of every base member lying below it hits it exactly.
  std::vector<PictureFuzzySet> below;
  for (const auto& b : base.members()) {
    if (unite(b.set, target) == target) below.push_back(b.set);
  }
  return !below.empty() && unite_all(below) == target;
}

bool is_zero_join_of_base_union(const PictureFuzzySet& target, const Family& base) {
  // Same test with rho ignored: O ∪ U only keeps mu and sigma of U.
  std::vector<PictureFuzzySet> below;
  for (const auto& b : base.members()) {
    bool fits = true;
    for (std::size_t i = 0; i < target.size() && fits; ++i) {
      fits = b.set[i].mu <= target[i].mu && b.set[i].sigma >= target[i].sigma;
    }
    if (fits) below.push_back(b.set);
  }
  return !below.empty() && zero_rho_join(unite_all(below)) == target;
}

}  // namespace

BaseCoverReport verify_base_for(const Family& topology, const Family& base) {
  if (!(topology.universe() == base.universe())) {
    throw Error(ErrorKind::UniverseMismatch, "topology and base are defined over different universes");
  }
  if (!check_axioms(topology).is_topology) {
    throw Error(ErrorKind::NotATopology, "the family to be covered is not a topology");
  }
  const auto null = PictureFuzzySet::null(topology.universe());
  for (const auto& m : topology.members()) {
    if (m.set.is_full() || m.set.is_null()) continue;
    const bool covered = rho_equivalent(m.set, null) ? is_zero_join_of_base_union(m.set, base)
                                                     : is_union_of_base(m.set, base);
    if (!covered) return {false, m};
  }
  return {true, std::nullopt};
}

}  // namespace pftop
