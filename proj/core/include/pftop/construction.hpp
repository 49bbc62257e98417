#pragma once

#include <map>
#include <string>

#include "pftop/expr.hpp"
#include "pftop/family.hpp"

namespace pftop {

/// Everything produced while generating a topology.
///
/// `provenance` maps every member name of `base`, `union_layer` and
/// `topology` to an expression over the names of `subbase` (plus I and O)
/// that evaluates to the member's value.
struct ConstructionTrace {
  Family subbase;
  Family base;
  Family union_layer;
  Family topology;
  std::map<std::string, expr::Expr> provenance;
};

/// Least superset closed under pairwise intersection. Derived members are
/// named by their expression, e.g. "(K1 & K2)". Throws EmptyFamily or
/// ContainsBoundary.
Family intersection_closure(const Family& family);

/// Least superset closed under pairwise union. Throws EmptyFamily.
Family union_closure(const Family& family);

/// topology = {I, O} ∪ U ∪ {O ∪ u : u ∈ U} with U = union_closure(base).
/// Throws NotABase (message carries the check_base witness) or ReservedName
/// when a base member is called "I" or "O".
ConstructionTrace generate_from_base(const Family& base);

/// generate_from_base(intersection_closure(subbase)). Throws EmptyFamily,
/// ContainsBoundary, ReservedName, or NotMinimal when `require_minimal` is set
/// and check_subbase_minimality fails.
ConstructionTrace generate_from_subbase(const Family& subbase, bool require_minimal = false);

/// Topology generated by c1 ≡ c2 ≡ ... ≡ ck, which is
/// {I, O} ∪ chain ∪ {O ∪ c1}. Throws NotABalancedChain naming the first
/// consecutive pair that is not balanced.
ConstructionTrace chain_topology(const Family& chain);

/// {I, O}.
Family trivial_topology(const Universe& universe);

}  // namespace pftop
