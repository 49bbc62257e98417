#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pftop/family.hpp"
#include "pftop/picture_fuzzy_set.hpp"

namespace pftop {

/// a ≡ b: equal mu and sigma everywhere, rho_a <= rho_b. A partial order.
bool balanced(const PictureFuzzySet& a, const PictureFuzzySet& b);

/// a ∥ b: identical rho vectors. An equivalence relation.
bool rho_equivalent(const PictureFuzzySet& a, const PictureFuzzySet& b);

/// O ∪ a, i.e. (mu_a, 0, sigma_a) at every element.
PictureFuzzySet zero_rho_join(const PictureFuzzySet& a);

struct RhoClass {
  std::vector<Grade> rho;
  /// Member names in family order.
  std::vector<std::string> members;
};

/// Classes ordered lexicographically by their rho vector.
struct RhoPartition {
  std::vector<RhoClass> classes;
};

struct Rank {
  std::size_t value = 0;
  friend bool operator==(Rank, Rank) = default;
};

/// Throws EmptyFamily.
RhoPartition partition_by_rho(const Family& family);
Rank rank_of(const Family& family);

}  // namespace pftop
