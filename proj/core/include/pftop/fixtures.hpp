#pragma once

#include <string>
#include <vector>

#include "pftop/family.hpp"

/// Small hand-checked families over the universe {a, b, c}, used as extra
/// instances by the law lab and as test inputs.
namespace pftop::fixtures {

Universe abc();

/// Two sets whose union includes neither of them.
Family union_not_upper_bound();
/// Two sets with A1 ∪ A2 = A2 although A1 ⊄ A2.
Family union_absorbs_without_inclusion();

/// Incomparable sub-base {K1, K2}; generates a rank-2 topology of 10 sets.
Family incomparable_pair();
/// A1 ≡ A2; generates a rank-3 topology of 5 sets.
Family balanced_pair();
/// Pair with pointwise incomparable rho vectors; its topology has rank 4.
Family rho_crossing_pair();
/// Two balanced chains A1 ≡ A3, A2 ≡ A4 with A1 ∥ A2 and A3 ∥ A4.
Family double_chain();

struct NamedFamily {
  std::string id;
  Family family;
};

/// The four sub-bases above, in the order listed.
std::vector<NamedFamily> reference_subbases();

}  // namespace pftop::fixtures
