#include <doctest.h>

#include "pftop/error.hpp"
#include "pftop/grade.hpp"

using namespace pftop;

namespace {

ErrorKind kind_of(std::string_view text) {
  try {
    grade_from_decimal(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error for " << text);
  return ErrorKind::ParseError;
}

}  // namespace

TEST_CASE("decimal grades scale exactly") {
  CHECK(grade_from_decimal("0.25").raw() == 2500);
  CHECK(grade_from_decimal("1.00").raw() == 10000);
  CHECK(grade_from_decimal("1").raw() == 10000);
  CHECK(grade_from_decimal("0").raw() == 0);
  CHECK(grade_from_decimal("0.0001").raw() == 1);
  CHECK(grade_from_decimal("00.5").raw() == 5000);
  CHECK(grade_from_decimal("-0").raw() == 0);
}

TEST_CASE("malformed and out of range grades are rejected") {
  CHECK(kind_of("0.123456") == ErrorKind::PrecisionExceeded);
  CHECK(kind_of("0.25000") == ErrorKind::PrecisionExceeded);
  CHECK(kind_of("1.5") == ErrorKind::OutOfRange);
  CHECK(kind_of("1.0001") == ErrorKind::OutOfRange);
  CHECK(kind_of("2") == ErrorKind::OutOfRange);
  CHECK(kind_of("-0.1") == ErrorKind::OutOfRange);
  CHECK(kind_of("") == ErrorKind::MalformedNumber);
  CHECK(kind_of("abc") == ErrorKind::MalformedNumber);
  CHECK(kind_of(".5") == ErrorKind::MalformedNumber);
  CHECK(kind_of("0.") == ErrorKind::MalformedNumber);
  CHECK(kind_of("1e-2") == ErrorKind::MalformedNumber);
  CHECK(kind_of(" 0.1") == ErrorKind::MalformedNumber);
  CHECK_THROWS_AS(Grade::from_raw(10001), Error);
  CHECK_THROWS_AS(Grade::from_raw(-1), Error);
}

TEST_CASE("grades print with two decimals or the minimal digits beyond") {
  CHECK(to_decimal(Grade::from_raw(2500)) == "0.25");
  CHECK(to_decimal(Grade::one()) == "1.00");
  CHECK(to_decimal(Grade::zero()) == "0.00");
  CHECK(to_decimal(Grade::from_raw(5000)) == "0.50");
  CHECK(to_decimal(Grade::from_raw(1230)) == "0.123");
  CHECK(to_decimal(Grade::from_raw(1)) == "0.0001");
}

TEST_CASE("every representable grade survives print then parse") {
  for (Grade::Raw r = 0; r <= Grade::kScale; ++r) {
    const auto g = Grade::from_raw(r);
    REQUIRE(grade_from_decimal(to_decimal(g)) == g);
  }
}
