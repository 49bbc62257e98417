#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pftop/grade.hpp"

namespace pftop {

/// Positive (mu), neutral (rho) and negative (sigma) membership at one element.
struct MembershipTriple {
  Grade mu;
  Grade rho;
  Grade sigma;

  friend constexpr auto operator<=>(const MembershipTriple&, const MembershipTriple&) noexcept = default;
};

/// mu + rho + sigma <= 1.
constexpr bool is_valid(const MembershipTriple& t) noexcept {
  return t.mu.raw() + t.rho.raw() + t.sigma.raw() <= Grade::kScale;
}

/// 1 - (mu + rho + sigma). Precondition: is_valid(t).
Grade refusal(const MembershipTriple& t) noexcept;

/// Ordered, non-empty list of distinct element labels.
///
/// Copies share the label storage; two universes are equal when their labels
/// are equal in the same order.
class Universe {
 public:
  /// Throws Error(InvalidUniverse) on an empty list or a repeated label.
  explicit Universe(std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_->size(); }
  std::span<const std::string> labels() const noexcept { return *labels_; }
  const std::string& label(std::size_t index) const { return labels_->at(index); }
  std::optional<std::size_t> index_of(std::string_view label) const noexcept;

  friend bool operator==(const Universe& a, const Universe& b) noexcept;

 private:
  std::shared_ptr<const std::vector<std::string>> labels_;
};

/// Direction of the neutral-grade comparison in `includes`.
enum class InclusionMode {
  /// a ⊆ b needs rho_a <= rho_b, the same direction as mu.
  Literal,
  /// a ⊆ b needs rho_a >= rho_b. Under this reading every set lies below the
  /// full set I, and O lies below exactly the sets with zero neutral grade.
  Reversed,
};

std::string_view to_string(InclusionMode mode) noexcept;

class PictureFuzzySet {
 public:
  /// Throws LengthMismatch when the triple count differs from the universe
  /// size, GradeSumExceeded (naming the element) for an invalid triple.
  PictureFuzzySet(Universe universe, std::vector<MembershipTriple> triples);

  /// I: (1, 0, 0) everywhere.
  static PictureFuzzySet full(const Universe& universe);
  /// O: (0, 0, 1) everywhere.
  static PictureFuzzySet null(const Universe& universe);

  const Universe& universe() const noexcept { return universe_; }
  std::span<const MembershipTriple> triples() const noexcept { return triples_; }
  std::size_t size() const noexcept { return triples_.size(); }
  const MembershipTriple& operator[](std::size_t index) const noexcept { return triples_[index]; }

  /// Throws UnknownElement.
  const MembershipTriple& at(std::string_view label) const;
  Grade refusal(std::string_view label) const;

  bool is_full() const noexcept;
  bool is_null() const noexcept;

  /// Value equality; sets over different universes are never equal.
  friend bool operator==(const PictureFuzzySet& a, const PictureFuzzySet& b) noexcept;

 private:
  struct Trusted {};
  PictureFuzzySet(Trusted, Universe universe, std::vector<MembershipTriple> triples) noexcept;

  friend PictureFuzzySet unite(const PictureFuzzySet&, const PictureFuzzySet&);
  friend PictureFuzzySet intersect(const PictureFuzzySet&, const PictureFuzzySet&);
  friend PictureFuzzySet complement(const PictureFuzzySet&);

  Universe universe_;
  std::vector<MembershipTriple> triples_;
};

/// Pointwise (max mu, min rho, min sigma). Throws UniverseMismatch.
PictureFuzzySet unite(const PictureFuzzySet& a, const PictureFuzzySet& b);
/// Pointwise (min mu, min rho, max sigma). Throws UniverseMismatch.
PictureFuzzySet intersect(const PictureFuzzySet& a, const PictureFuzzySet& b);
/// Swaps mu and sigma.
PictureFuzzySet complement(const PictureFuzzySet& a);

/// Left folds; throw EmptyFamily on an empty span and UniverseMismatch.
PictureFuzzySet unite_all(std::span<const PictureFuzzySet> sets);
PictureFuzzySet intersect_all(std::span<const PictureFuzzySet> sets);

bool includes(const PictureFuzzySet& a, const PictureFuzzySet& b, InclusionMode mode = InclusionMode::Literal);

/// Throws UniverseMismatch; otherwise the same as operator==.
bool equals(const PictureFuzzySet& a, const PictureFuzzySet& b);

/// Lexicographic order of the concatenated (mu, rho, sigma) raw vectors.
std::strong_ordering compare_values(const PictureFuzzySet& a, const PictureFuzzySet& b) noexcept;

/// I first, O second, then compare_values.
bool canonical_less(const PictureFuzzySet& a, const PictureFuzzySet& b) noexcept;

/// "{(a, 0.25, 0.20, 0.30), (b, ...)}"
std::string to_string(const PictureFuzzySet& set);

void require_same_universe(const PictureFuzzySet& a, const PictureFuzzySet& b);

}  // namespace pftop
