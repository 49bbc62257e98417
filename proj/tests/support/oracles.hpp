#pragma once

// Test-only reference implementations. They work on plain integer triples
// (grades scaled by 10^4) and share no code path with the library beyond
// reading values out of a PictureFuzzySet.

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "pftop/family.hpp"
#include "pftop/picture_fuzzy_set.hpp"

namespace pftop::oracle {

struct RawTriple {
  int mu = 0;
  int rho = 0;
  int sigma = 0;
  auto operator<=>(const RawTriple&) const = default;
};

using RawSet = std::vector<RawTriple>;

inline RawSet raw_of(const PictureFuzzySet& s) {
  RawSet out;
  for (const auto& t : s.triples()) out.push_back({t.mu.raw(), t.rho.raw(), t.sigma.raw()});
  return out;
}

inline PictureFuzzySet to_set(const Universe& u, const RawSet& raw) {
  std::vector<MembershipTriple> t;
  for (const auto& r : raw) t.push_back({Grade::from_raw(r.mu), Grade::from_raw(r.rho), Grade::from_raw(r.sigma)});
  return PictureFuzzySet(u, std::move(t));
}

inline RawSet join(const RawSet& a, const RawSet& b) {
  RawSet out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = {std::max(a[i].mu, b[i].mu), std::min(a[i].rho, b[i].rho), std::min(a[i].sigma, b[i].sigma)};
  }
  return out;
}

inline RawSet meet(const RawSet& a, const RawSet& b) {
  RawSet out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = {std::min(a[i].mu, b[i].mu), std::min(a[i].rho, b[i].rho), std::max(a[i].sigma, b[i].sigma)};
  }
  return out;
}

inline RawSet full(std::size_t n) { return RawSet(n, RawTriple{10000, 0, 0}); }
inline RawSet null(std::size_t n) { return RawSet(n, RawTriple{0, 0, 10000}); }

inline std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Lattice points (i, j, k) >= 0 with i + j + k <= m, m = 1 / step.
inline std::uint64_t grid_count(int step_raw) { return choose(10000 / step_raw + 3, 3); }

/// Distinct rho vectors.
inline std::size_t rho_census(const Family& f) {
  std::set<std::vector<int>> seen;
  for (const auto& m : f.members()) {
    std::vector<int> rho;
    for (const auto& t : m.set.triples()) rho.push_back(t.rho.raw());
    seen.insert(rho);
  }
  return seen.size();
}

inline bool closed(const std::set<RawSet>& family) {
  for (const auto& a : family) {
    for (const auto& b : family) {
      if (!family.count(join(a, b)) || !family.count(meet(a, b))) return false;
    }
  }
  return true;
}

/// Saturates `seeds` under join and meet by repeated full passes.
inline std::set<RawSet> saturate(std::set<RawSet> family) {
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<RawSet> snapshot(family.begin(), family.end());
    for (const auto& a : snapshot) {
      for (const auto& b : snapshot) {
        grew |= family.insert(join(a, b)).second;
        grew |= family.insert(meet(a, b)).second;
      }
    }
  }
  return family;
}

/// Every subset of `pool` that contains `required` and is closed under join
/// and meet. `pool` minus `required` must stay small (it is enumerated as a
/// bitmask).
inline std::vector<std::set<RawSet>> closed_families(const std::set<RawSet>& pool, const std::set<RawSet>& required) {
  std::vector<RawSet> optional;
  for (const auto& s : pool) {
    if (!required.count(s)) optional.push_back(s);
  }
  std::vector<std::set<RawSet>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << optional.size()); ++mask) {
    std::set<RawSet> candidate = required;
    for (std::size_t i = 0; i < optional.size(); ++i) {
      if (mask >> i & 1) candidate.insert(optional[i]);
    }
    if (closed(candidate)) out.push_back(std::move(candidate));
  }
  return out;
}

}  // namespace pftop::oracle
