#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pftop/picture_fuzzy_set.hpp"

namespace pftop::laws {

enum class LawId {
  L01 = 1, L02, L03, L04, L05, L06, L07, L08, L09, L10,
  L11, L12, L13, L14, L15, L16, L17, L18, L19,
};

/// What a law quantifies over.
enum class InstanceSource {
  /// Every tuple of `arity` sets (repetition allowed).
  Tuples,
  /// Every set of 1..arity distinct sets, none equal to I or O.
  Subbases,
  /// Subbases that also pass check_subbase_minimality.
  MinimalSubbases,
  /// Chains c1 ≡ c2 ≡ ... of 1..arity distinct sets, none equal to I or O.
  BalancedChains,
};

struct LawInfo {
  LawId id;
  std::string_view code;
  std::string_view statement;
  int arity;
  InstanceSource source;
  /// Clause names, in report order.
  std::vector<std::string_view> clauses;
  /// Clauses that are reported but do not decide the verdict.
  std::vector<bool> informational;
  /// The clauses are separate claims rather than parts of one statement, so
  /// disagreement among them yields a split verdict.
  bool independent_claims = false;
};

/// All nineteen laws, L01 first.
std::span<const LawInfo> catalog();
const LawInfo& info(LawId id);
/// Accepts "L06" or "l6". Throws UnknownLaw.
LawId parse_law_id(std::string_view text);

struct Exhaustive {};
struct Randomized {
  std::uint64_t sample_count = 0;
  std::uint64_t seed = 0;
};

struct SearchDomain {
  int universe_size = 1;
  Grade grade_step = Grade::from_raw(2500);
  /// 0 selects the law's own arity.
  int arity = 0;
  std::variant<Exhaustive, Randomized> strategy = Exhaustive{};
  /// Also run the reference sub-bases from pftop::fixtures (structural laws
  /// only).
  bool include_fixtures = false;
  /// Largest exhaustive instance count accepted before DomainTooLarge.
  std::uint64_t instance_budget = 5'000'000;
};

std::string describe(const SearchDomain& domain);

inline constexpr std::uint64_t kDefaultSeed = 20240601;
inline constexpr std::uint64_t kDefaultSamples = 100'000;

enum class Outcome { Holds, Counterexample, Split };

std::string_view to_string(Outcome outcome) noexcept;

struct Witness {
  /// The quantified sets, in argument order.
  std::vector<PictureFuzzySet> sets;
  std::string detail;
};

struct ClauseVerdict {
  std::string clause;
  bool informational = false;
  bool holds = true;
  std::uint64_t checked = 0;
  /// First failing instance in enumeration order.
  std::optional<Witness> witness;
};

struct DomainRun {
  SearchDomain domain;
  std::uint64_t instances = 0;
};

struct LawVerdict {
  LawId law;
  Outcome outcome = Outcome::Holds;
  std::vector<ClauseVerdict> clauses;
  std::vector<DomainRun> runs;
  std::uint64_t checked_count = 0;
  /// No instance was checked; Holds is vacuous.
  bool vacuous = false;
};

/// Valid triples on the grid {0, step, 2 step, ..., 1} with mu + rho + sigma
/// <= 1, ordered by (mu, rho, sigma). Throws InvalidDomain unless step is
/// 0.25, 0.10 or 0.05.
std::vector<MembershipTriple> grid_triples(Grade step);

/// Throws InvalidDomain or DomainTooLarge.
LawVerdict check_law(LawId law, const SearchDomain& domain, InclusionMode mode = InclusionMode::Literal);
/// Runs every domain in order and merges the results; each clause keeps the
/// first witness found.
LawVerdict check_law(LawId law, std::span<const SearchDomain> domains, InclusionMode mode = InclusionMode::Literal);

std::vector<LawVerdict> run_catalog(const SearchDomain& domain, InclusionMode mode = InclusionMode::Literal);

/// |X| = 1 at step 0.25 exhaustively (with fixtures for structural laws);
/// arity-3 laws additionally get kDefaultSamples random instances at |X| = 2.
std::vector<SearchDomain> default_domains(LawId law, std::uint64_t seed = kDefaultSeed);
std::vector<LawVerdict> run_default_catalog(InclusionMode mode = InclusionMode::Literal,
                                            std::uint64_t seed = kDefaultSeed);

/// Names of the clauses that one instance violates; an empty result means the
/// instance satisfies the law. Used to replay witnesses.
std::vector<std::string> failed_clauses(LawId law, std::span<const PictureFuzzySet> instance,
                                        InclusionMode mode = InclusionMode::Literal);

}  // namespace pftop::laws
