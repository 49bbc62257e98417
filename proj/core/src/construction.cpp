#include "pftop/construction.hpp"

#include <functional>
#include <set>
#include <vector>

#include "pftop/error.hpp"
#include "pftop/relations.hpp"
#include "pftop/topology_check.hpp"

namespace pftop {

namespace {

struct Entry {
  std::string name;
  PictureFuzzySet set;
  expr::Expr provenance;
};

struct ValueLess {
  bool operator()(const PictureFuzzySet& a, const PictureFuzzySet& b) const noexcept {
    return compare_values(a, b) < 0;
  }
};

/// Entries deduplicated by value; the first name seen for a value is kept.
class EntryList {
 public:
  bool add(Entry e) {
    if (values_.contains(e.set)) return false;
    while (names_.contains(e.name)) e.name += "'";
    values_.insert(e.set);
    names_.insert(e.name);
    entries_.push_back(std::move(e));
    return true;
  }

  void reserve_name(const std::string& name) { names_.insert(name); }

  std::vector<Entry>& entries() noexcept { return entries_; }
  const std::vector<Entry>& entries() const noexcept { return entries_; }

 private:
  std::vector<Entry> entries_;
  std::set<PictureFuzzySet, ValueLess> values_;
  std::set<std::string> names_;
};

using SetOp = std::function<PictureFuzzySet(const PictureFuzzySet&, const PictureFuzzySet&)>;
using ExprOp = std::function<expr::Expr(expr::Expr, expr::Expr)>;

/// Fixpoint of pairwise `op`. Each round combines every pair that involves a
/// member added in the previous round.
std::vector<Entry> close_under(const std::vector<Entry>& seed, const SetOp& op, const ExprOp& op_expr) {
  EntryList list;
  list.reserve_name("I");
  list.reserve_name("O");
  for (const auto& e : seed) list.add(e);

  std::size_t done = 0;
  while (done < list.entries().size()) {
    const std::size_t end = list.entries().size();
    for (std::size_t j = done; j < end; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        // Copy: add() may reallocate.
        const Entry a = list.entries()[i];
        const Entry b = list.entries()[j];
        auto combined = op(a.set, b.set);
        auto provenance = op_expr(a.provenance, b.provenance);
        std::string name = expr::print(provenance);
        list.add({std::move(name), std::move(combined), std::move(provenance)});
      }
    }
    done = end;
  }
  return std::move(list.entries());
}

std::vector<Entry> seed_entries(const Family& family) {
  std::vector<Entry> out;
  for (const auto& m : family.members()) out.push_back({m.name, m.set, expr::Expr::name(m.name)});
  return out;
}

Family to_family(const Universe& universe, const std::vector<Entry>& entries) {
  Family out(universe);
  for (const auto& e : entries) out.add(e.name, e.set);
  return out.sorted();
}

void require_no_boundary(const Family& family, std::string_view what) {
  for (const auto& m : family.members()) {
    if (m.set.is_full() || m.set.is_null()) {
      throw Error(ErrorKind::ContainsBoundary,
                  std::string(what) + ": member '" + m.name + "' equals " + (m.set.is_full() ? "I" : "O"));
    }
  }
}

void require_unreserved_names(const Family& family) {
  for (const auto& m : family.members()) {
    if (m.name == "I" || m.name == "O") {
      throw Error(ErrorKind::ReservedName, "member name '" + m.name + "' is reserved for the constant sets");
    }
  }
}

std::vector<Entry> intersection_layer(const Family& family) {
  require_non_empty(family, "intersection_closure");
  require_no_boundary(family, "intersection_closure");
  return close_under(seed_entries(family), intersect, expr::Expr::intersection_of);
}

std::string describe(const BaseWitness& w) {
  std::string out = std::string(to_string(w.defect)) + " on";
  for (const auto& m : w.operands) out += " '" + m.name + "'";
  if (w.defect == BaseDefect::IntersectionEscape) out += ", intersection " + to_string(w.result) + " is not a member";
  return out;
}

ConstructionTrace generate(const Family& subbase, const std::vector<Entry>& base_entries) {
  const Universe& universe = subbase.universe();
  ConstructionTrace trace{subbase, to_family(universe, base_entries), Family(universe), Family(universe), {}};

  const auto unions = close_under(base_entries, unite, expr::Expr::union_of);
  trace.union_layer = to_family(universe, unions);

  EntryList topology;
  topology.add({"I", PictureFuzzySet::full(universe), expr::Expr::full()});
  topology.add({"O", PictureFuzzySet::null(universe), expr::Expr::null()});
  for (const auto& e : unions) topology.add(e);
  for (const auto& e : unions) {
    auto provenance = expr::Expr::union_of(expr::Expr::null(), e.provenance);
    std::string name = expr::print(provenance);
    topology.add({std::move(name), zero_rho_join(e.set), std::move(provenance)});
  }
  trace.topology = to_family(universe, topology.entries());

  for (const std::vector<Entry>* list : std::initializer_list<const std::vector<Entry>*>{&base_entries, &unions, &topology.entries()}) {
    for (const auto& e : *list) trace.provenance.insert_or_assign(e.name, e.provenance);
  }
  return trace;
}

}  // namespace

Family intersection_closure(const Family& family) {
  return to_family(family.universe(), intersection_layer(family));
}

Family union_closure(const Family& family) {
  require_non_empty(family, "union_closure");
  return to_family(family.universe(), close_under(seed_entries(family), unite, expr::Expr::union_of));
}

ConstructionTrace generate_from_base(const Family& base) {
  require_unreserved_names(base);
  const auto report = check_base(base);
  if (!report.is_base) {
    throw Error(ErrorKind::NotABase, describe(*report.witness));
  }
  return generate(base, seed_entries(base));
}

ConstructionTrace generate_from_subbase(const Family& subbase, bool require_minimal) {
  require_unreserved_names(subbase);
  const auto closure = intersection_layer(subbase);
  if (require_minimal) {
    if (const auto report = check_subbase_minimality(subbase); !report.is_minimal) {
      const auto& [a, b] = *report.witness;
      throw Error(ErrorKind::NotMinimal, "'" + a.name + "' and '" + b.name +
                                             "' are incomparable although their intersection is a member");
    }
  }
  // Intersections of boundary-free members can still collapse to O once the
  // universe has two or more elements. O belongs to every topology anyway, so
  // it is kept out of the base.
  std::vector<Entry> base;
  for (const auto& e : closure) {
    if (!e.set.is_null()) base.push_back(e);
  }
  return generate(subbase, base);
}

ConstructionTrace chain_topology(const Family& chain) {
  require_non_empty(chain, "chain_topology");
  const auto members = chain.members();
  for (std::size_t i = 0; i + 1 < members.size(); ++i) {
    if (!balanced(members[i].set, members[i + 1].set)) {
      throw Error(ErrorKind::NotABalancedChain,
                  "'" + members[i].name + "' is not balanced with respect to '" + members[i + 1].name + "'");
    }
  }
  return generate_from_subbase(chain);
}

Family trivial_topology(const Universe& universe) {
  return Family(universe, {{"I", PictureFuzzySet::full(universe)}, {"O", PictureFuzzySet::null(universe)}});
}

}  // namespace pftop
