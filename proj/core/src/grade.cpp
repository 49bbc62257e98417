#include "pftop/grade.hpp"

#include <cctype>

#include "pftop/error.hpp"

namespace pftop {

Grade Grade::from_raw(Raw raw) {
  if (raw < 0 || raw > kScale) {
    throw Error(ErrorKind::OutOfRange, "grade raw value " + std::to_string(raw) + " outside [0, 10000]");
  }
  return Grade(raw);
}

namespace {

bool all_digits(std::string_view s) {
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

bool all_zero(std::string_view s) {
  return s.find_first_not_of('0') == std::string_view::npos;
}

}  // namespace

Grade grade_from_decimal(std::string_view text) {
  const std::string quoted = "\"" + std::string(text) + "\"";
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }

  std::string_view integer = body;
  std::string_view fraction;
  if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    integer = body.substr(0, dot);
    fraction = body.substr(dot + 1);
    if (fraction.empty()) {
      throw Error(ErrorKind::MalformedNumber, quoted + " has no digits after the decimal point");
    }
  }
  if (integer.empty() || !all_digits(integer) || !all_digits(fraction)) {
    throw Error(ErrorKind::MalformedNumber, quoted + " is not a decimal numeral");
  }
  if (fraction.size() > static_cast<std::size_t>(Grade::kFractionDigits)) {
    throw Error(ErrorKind::PrecisionExceeded,
                quoted + " has more than " + std::to_string(Grade::kFractionDigits) + " fractional digits");
  }

  const bool is_zero = all_zero(integer) && all_zero(fraction);
  if (negative && !is_zero) {
    throw Error(ErrorKind::OutOfRange, quoted + " is negative");
  }

  // Strip leading zeros so the integer part cannot overflow before the range check.
  const auto first_nonzero = integer.find_first_not_of('0');
  integer = first_nonzero == std::string_view::npos ? std::string_view{} : integer.substr(first_nonzero);
  if (integer.size() > 1) {
    throw Error(ErrorKind::OutOfRange, quoted + " exceeds 1");
  }

  Grade::Raw raw = integer.empty() ? 0 : (integer.front() - '0') * Grade::kScale;
  Grade::Raw place = Grade::kScale / 10;
  for (char c : fraction) {
    raw += (c - '0') * place;
    place /= 10;
  }
  if (raw > Grade::kScale) {
    throw Error(ErrorKind::OutOfRange, quoted + " exceeds 1");
  }
  return Grade::from_raw(raw);
}

std::string to_decimal(Grade grade) {
  const Grade::Raw raw = grade.raw();
  std::string digits = std::to_string(raw % Grade::kScale);
  digits.insert(0, Grade::kFractionDigits - digits.size(), '0');
  // Keep two decimals minimum; drop further trailing zeros.
  while (digits.size() > 2 && digits.back() == '0') digits.pop_back();
  return std::to_string(raw / Grade::kScale) + "." + digits;
}

}  // namespace pftop
