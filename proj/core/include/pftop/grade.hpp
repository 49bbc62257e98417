#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace pftop {

/// A membership degree in [0, 1], stored as an integer count of 10^-4 steps.
///
/// Grades never round: decimal input with more than four fractional digits is
/// rejected, and every set operation only selects among existing grades.
class Grade {
 public:
  using Raw = std::int32_t;
  static constexpr Raw kScale = 10000;
  static constexpr int kFractionDigits = 4;

  constexpr Grade() noexcept = default;

  /// Throws Error(OutOfRange) unless 0 <= raw <= kScale.
  static Grade from_raw(Raw raw);

  static constexpr Grade zero() noexcept { return Grade(0); }
  static constexpr Grade one() noexcept { return Grade(kScale); }

  constexpr Raw raw() const noexcept { return raw_; }

  friend constexpr auto operator<=>(Grade, Grade) noexcept = default;

 private:
  explicit constexpr Grade(Raw raw) noexcept : raw_(raw) {}

  Raw raw_ = 0;
};

/// Parses "0.25", "1", "1.00", ... into an exact grade.
///
/// Errors: MalformedNumber for anything that is not a plain decimal numeral,
/// PrecisionExceeded for more than four fractional digits, OutOfRange for a
/// value outside [0, 1].
Grade grade_from_decimal(std::string_view text);

/// Two decimals when the grade is a multiple of 0.01, otherwise the minimal
/// number of digits (at most four): 2500 -> "0.25", 10000 -> "1.00",
/// 1230 -> "0.123", 1 -> "0.0001".
std::string to_decimal(Grade grade);

}  // namespace pftop
