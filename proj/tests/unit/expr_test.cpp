#include <doctest.h>

#include <random>

#include "fixture_files.hpp"
#include "generators.hpp"
#include "pftop/error.hpp"
#include "pftop/expr.hpp"
#include "pftop/fixtures.hpp"

using namespace pftop;
using expr::Expr;

namespace {

Expr random_expr(std::mt19937_64& rng, int depth) {
  const auto pick = rng() % (depth > 0 ? 6 : 3);
  switch (pick) {
    case 0: return Expr::name("A");
    case 1: return Expr::name("B");
    case 2: return rng() % 2 ? Expr::full() : Expr::null();
    case 3: return Expr::complement_of(random_expr(rng, depth - 1));
    case 4: return Expr::union_of(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    default: return Expr::intersection_of(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
  }
}

}  // namespace

TEST_CASE("parsing") {
  CHECK(expr::parse("K1 & K2") == Expr::intersection_of(Expr::name("K1"), Expr::name("K2")));
  CHECK(expr::parse("~(K1 | K2)") == Expr::complement_of(Expr::union_of(Expr::name("K1"), Expr::name("K2"))));
  CHECK(expr::parse("A | B & C") ==
        Expr::union_of(Expr::name("A"), Expr::intersection_of(Expr::name("B"), Expr::name("C"))));
  CHECK(expr::parse("~A & B") == Expr::intersection_of(Expr::complement_of(Expr::name("A")), Expr::name("B")));
  CHECK(expr::parse("A | B | C") ==
        Expr::union_of(Expr::union_of(Expr::name("A"), Expr::name("B")), Expr::name("C")));
  CHECK(expr::parse("O | I").kind() == expr::NodeKind::Union);
  CHECK(expr::parse("O").kind() == expr::NodeKind::Null);
  CHECK(expr::parse("I").kind() == expr::NodeKind::Full);
}

TEST_CASE("syntax errors point into the input") {
  for (const std::string text : {"K1 & | K2", "", "(", "A B", "A &", "~", "(A | B", "A | 1x", ")"}) {
    try {
      expr::parse(text);
      FAIL("parsed " << text);
    } catch (const SyntaxError& e) {
      CHECK(e.kind() == ErrorKind::SyntaxError);
      CHECK(e.offset() <= text.size());
      CHECK_FALSE(e.expected().empty());
    }
  }
  try {
    expr::parse("K1 & | K2");
  } catch (const SyntaxError& e) {
    CHECK(e.offset() == 5);
  }
}

TEST_CASE("printing is fully parenthesized and reparses to the same tree") {
  CHECK(expr::print(expr::parse("A | B & ~C")) == "(A | (B & ~C))");
  std::mt19937_64 rng(17);
  for (int i = 0; i < 2000; ++i) {
    const auto e = random_expr(rng, 4);
    const auto text = expr::print(e);
    REQUIRE(expr::parse(text) == e);
    CHECK(expr::print(expr::parse(text)) == text);
  }
}

TEST_CASE("evaluation on reference values") {
  const auto ex4 = fixtures::incomparable_pair();
  const auto listed = testing::load_fixture("incomparable_pair_topology.json");
  CHECK(expr::evaluate(expr::parse("K1 & K2"), ex4) == listed.at("K3").set);
  CHECK(expr::evaluate(expr::parse("K1 | K2"), ex4) == listed.at("K4").set);
  CHECK(expr::evaluate(expr::parse("O | K1"), ex4) == listed.at("K5").set);
  CHECK(expr::evaluate(expr::parse("I"), ex4).is_full());
  try {
    expr::evaluate(expr::parse("K1 & K9"), ex4);
    FAIL("unknown name accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownName);
  }
}

TEST_CASE("evaluation respects the algebraic laws") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 300; ++i) {
    const auto u = gen::universe(1 + rng() % 3);
    Family f(u, {{"A", gen::set(rng, u, 500)}, {"B", gen::set(rng, u, 500)}, {"C", gen::set(rng, u, 500)}});
    const auto same = [&](const char* x, const char* y) {
      return expr::evaluate(expr::parse(x), f) == expr::evaluate(expr::parse(y), f);
    };
    CHECK(same("A | B", "B | A"));
    CHECK(same("A & (B & C)", "(A & B) & C"));
    CHECK(same("A | (B & C)", "(A | B) & (A | C)"));
    CHECK(same("A & (B | C)", "(A & B) | (A & C)"));
    CHECK(same("~(A | B)", "~A & ~B"));
    CHECK(same("~(A & B)", "~A | ~B"));
    CHECK(same("~~A", "A"));
  }
}
