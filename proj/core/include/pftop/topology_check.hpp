#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "pftop/family.hpp"

namespace pftop {

enum class ViolationKind {
  MissingFull,
  MissingNull,
  UnionEscape,
  IntersectionEscape,
};

std::string_view to_string(ViolationKind kind) noexcept;

/// One failed axiom. For the Missing* kinds `operands` is empty and `result`
/// is the absent constant set; for the *Escape kinds `result` is the union or
/// intersection of the two operands, which the family does not contain.
struct AxiomViolation {
  ViolationKind kind;
  std::vector<Member> operands;
  PictureFuzzySet result;
};

struct AxiomReport {
  bool is_topology = false;
  /// Ordered by kind, then by the canonical order of the operands.
  std::vector<AxiomViolation> violations;
};

/// Checks I ∈ T, O ∈ T and closure under pairwise union and intersection.
/// Throws EmptyFamily.
AxiomReport check_axioms(const Family& family);

enum class BaseDefect {
  ContainsFull,
  ContainsNull,
  IntersectionEscape,
};

std::string_view to_string(BaseDefect defect) noexcept;

struct BaseWitness {
  BaseDefect defect;
  /// The offending member (Contains*) or the pair whose intersection escapes.
  std::vector<Member> operands;
  PictureFuzzySet result;
};

struct BaseReport {
  bool is_base = false;
  std::optional<BaseWitness> witness;
};

/// A base must not contain I or O and must be closed under pairwise
/// intersection. Throws EmptyFamily.
BaseReport check_base(const Family& candidate);

struct MinimalityReport {
  bool is_minimal = false;
  /// First pair (in family order) whose intersection is a member although
  /// neither includes the other.
  std::optional<std::pair<Member, Member>> witness;
};

/// For every pair whose intersection is a member, one of the two must include
/// the other (literal inclusion). Throws EmptyFamily.
MinimalityReport check_subbase_minimality(const Family& candidate);

struct BaseCoverReport {
  bool is_base_for = false;
  std::optional<Member> failing_member;
};

/// Every member of `topology` other than I and O must be a union of base
/// members (rho not identically zero) or O joined with such a union (rho
/// identically zero). Throws UniverseMismatch, or NotATopology when
/// `topology` fails check_axioms.
BaseCoverReport verify_base_for(const Family& topology, const Family& base);

}  // namespace pftop
