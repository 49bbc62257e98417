#include <doctest.h>

#include <random>

#include "fixture_files.hpp"
#include "generators.hpp"
#include "pftop/error.hpp"
#include "pftop/family_io.hpp"
#include "pftop/fixtures.hpp"

using namespace pftop;

namespace {

std::string one_set(const std::string& mu, const std::string& rho, const std::string& sigma) {
  return R"({"format_version": "1", "universe": ["a"], "sets": [{"name": "S", "values": {"a": {"mu": ")" + mu +
         R"(", "rho": ")" + rho + R"(", "sigma": ")" + sigma + R"("}}}]})";
}

Error load_error(std::string_view text) {
  try {
    load_family(text);
  } catch (const Error& e) {
    return e;
  }
  FAIL("loaded " << text);
  return Error(ErrorKind::ParseError, "");
}

}  // namespace

TEST_CASE("loading a sub-base document") {
  const auto f = testing::load_fixture("incomparable_pair.json");
  CHECK(f.size() == 2);
  CHECK(same_values(f, fixtures::incomparable_pair()));
  CHECK(f.at("K1").set == fixtures::incomparable_pair().at("K1").set);
}

TEST_CASE("grade violations name the set and element") {
  auto e = load_error(one_set("0.6", "0.3", "0.2"));
  CHECK(e.kind() == ErrorKind::ValidationError);
  CHECK(e.cause() == ErrorKind::GradeSumExceeded);
  CHECK(e.message().find("'S'") != std::string::npos);
  CHECK(e.message().find("'a'") != std::string::npos);

  e = load_error(one_set("0.12345", "0", "0"));
  CHECK(e.kind() == ErrorKind::ValidationError);
  CHECK(e.cause() == ErrorKind::PrecisionExceeded);
  CHECK(e.message().find("'S'") != std::string::npos);

  e = load_error(one_set("x", "0", "0"));
  CHECK(e.cause() == ErrorKind::MalformedNumber);
}

TEST_CASE("reference sets whose grades overflow are rejected") {
  for (const auto* name : {"nested_pair.json", "crossing_pair.json", "nested_pair_topology.json",
                           "crossing_pair_topology.json"}) {
    const auto e = load_error(testing::read_fixture(name));
    CHECK(e.kind() == ErrorKind::ValidationError);
    CHECK(e.cause() == ErrorKind::GradeSumExceeded);
    CHECK(e.message().find("element 'a'") != std::string::npos);
  }
}

TEST_CASE("malformed json reports a location") {
  const auto e = load_error("{\n  \"format_version\": \"1\",\n  \"universe\": [\"a\"\n}");
  CHECK(e.kind() == ErrorKind::ParseError);
  CHECK(e.message().find("line 4") != std::string::npos);
  CHECK(load_error("").kind() == ErrorKind::ParseError);
}

TEST_CASE("schema errors") {
  CHECK(load_error(R"({"universe": ["a"], "sets": []})").kind() == ErrorKind::SchemaError);
  CHECK(load_error(R"({"format_version": "2", "universe": ["a"], "sets": []})").kind() == ErrorKind::SchemaError);
  CHECK(load_error(R"({"format_version": "1", "universe": ["a"], "sets": [], "x": 1})").kind() ==
        ErrorKind::SchemaError);
  CHECK(load_error(R"({"format_version": "1", "universe": "a", "sets": []})").kind() == ErrorKind::SchemaError);
  CHECK(load_error(R"({"format_version": "1", "universe": ["a"], "sets": [{"name": "S"}]})").kind() ==
        ErrorKind::SchemaError);
  CHECK(load_error(R"({"format_version": "1", "universe": ["a"], "sets": [{"name": "S", "values":
        {"a": {"mu": 0.5, "rho": "0", "sigma": "0"}}}]})")
            .kind() == ErrorKind::SchemaError);
  CHECK(load_error(R"({"format_version": "1", "universe": ["a"], "sets": [{"name": "S", "values":
        {"a": {"mu": "0.5", "rho": "0"}}}]})")
            .kind() == ErrorKind::SchemaError);
}

TEST_CASE("coverage and naming errors") {
  auto e = load_error(R"({"format_version": "1", "universe": ["a", "b"], "sets": [{"name": "S", "values":
        {"a": {"mu": "0.5", "rho": "0", "sigma": "0"}}}]})");
  CHECK(e.kind() == ErrorKind::ValidationError);
  CHECK(e.message().find("'b'") != std::string::npos);
  e = load_error(R"({"format_version": "1", "universe": ["a"], "sets": [{"name": "S", "values":
        {"a": {"mu": "0.5", "rho": "0", "sigma": "0"}, "z": {"mu": "0", "rho": "0", "sigma": "0"}}}]})");
  CHECK(e.cause() == ErrorKind::UnknownElement);
  e = load_error(R"({"format_version": "1", "universe": ["a", "a"], "sets": []})");
  CHECK(e.cause() == ErrorKind::InvalidUniverse);
  e = load_error(R"({"format_version": "1", "universe": ["a"], "sets": [
        {"name": "S", "values": {"a": {"mu": "0.5", "rho": "0", "sigma": "0"}}},
        {"name": "S", "values": {"a": {"mu": "0.1", "rho": "0", "sigma": "0"}}}]})");
  CHECK(e.cause() == ErrorKind::DuplicateName);
}

TEST_CASE("canonical output is byte-stable on every valid fixture") {
  for (const auto* name : {"union_not_upper_bound.json", "incomparable_pair.json", "incomparable_pair_topology.json",
                           "balanced_pair.json", "balanced_pair_topology.json", "double_chain.json",
                           "double_chain_listed.json", "rho_crossing_pair.json",
                           "rho_crossing_pair_topology.json"}) {
    const auto text = testing::read_fixture(name);
    CHECK_MESSAGE(save_family(load_family(text)) == text, name);
  }
  CHECK(save_family(Family(fixtures::abc())).find("\"sets\": []") != std::string::npos);
}

TEST_CASE("save orders members canonically and prints grades as decimals") {
  const auto u = fixtures::abc();
  Family f(u, {{"K", fixtures::incomparable_pair().at("K1").set},
               {"O", PictureFuzzySet::null(u)},
               {"I", PictureFuzzySet::full(u)}});
  const auto text = save_family(f);
  CHECK(text.find("\"name\": \"I\"") < text.find("\"name\": \"O\""));
  CHECK(text.find("\"name\": \"O\"") < text.find("\"name\": \"K\""));
  CHECK(text.find("\"mu\": \"0.25\"") != std::string::npos);
}

TEST_CASE("random families round-trip") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 300; ++i) {
    const auto u = gen::universe(1 + rng() % 3);
    Family f(u);
    const int n = static_cast<int>(rng() % 5);
    for (int j = 0; j < n; ++j) f.add("S" + std::to_string(j), gen::set(rng, u, rng() % 2 ? 1 : 500));
    const auto text = save_family(f);
    const auto back = load_family(text);
    CHECK(same_values(back, f));
    for (const auto& m : f.members()) CHECK(back.at(m.name).set == m.set);
    CHECK(save_family(back) == text);
  }
}
