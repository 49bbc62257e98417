#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixture_files.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "pftop/error.hpp"
#include "pftop/fixtures.hpp"
#include "pftop/relations.hpp"

using namespace pftop;

TEST_CASE("balanced relation") {
  const auto ex6 = fixtures::balanced_pair();
  CHECK(balanced(ex6.at("A1").set, ex6.at("A2").set));
  CHECK_FALSE(balanced(ex6.at("A2").set, ex6.at("A1").set));
  const auto ex4 = fixtures::incomparable_pair();
  CHECK(balanced(ex4.at("K1").set, ex4.at("K1").set));
  CHECK_FALSE(balanced(ex4.at("K1").set, ex4.at("K2").set));
}

TEST_CASE("rho equivalence") {
  const auto ex8 = fixtures::double_chain();
  CHECK(rho_equivalent(ex8.at("A1").set, ex8.at("A2").set));
  CHECK_FALSE(rho_equivalent(ex8.at("A2").set, ex8.at("A3").set));
  const auto u = fixtures::abc();
  CHECK(rho_equivalent(PictureFuzzySet::full(u), PictureFuzzySet::null(u)));
}

TEST_CASE("zero rho join") {
  const auto k1 = fixtures::incomparable_pair().at("K1").set;
  const auto k5 = testing::load_fixture("incomparable_pair_topology.json").at("K5").set;
  CHECK(zero_rho_join(k1) == k5);
  const auto null = PictureFuzzySet::null(fixtures::abc());
  CHECK(zero_rho_join(null) == null);
}

TEST_CASE("relation laws hold on every single-element grid pair") {
  const auto u = gen::universe(1);
  const auto sets = gen::all_single(u, 2500);
  const auto null = PictureFuzzySet::null(u);
  for (const auto& a : sets) {
    CHECK(zero_rho_join(a) == unite(null, a));
    CHECK(rho_equivalent(zero_rho_join(a), null));
    for (const auto& b : sets) {
      CHECK((a == b) == (rho_equivalent(a, b) && balanced(a, b)));
      CHECK(balanced(a, b) == (unite(a, b) == a && intersect(b, a) == a));
      if (balanced(a, b) && balanced(b, a)) CHECK(a == b);
      for (const auto& c : sets) {
        if (balanced(a, b) && balanced(b, c)) REQUIRE(balanced(a, c));
        if (rho_equivalent(a, b) && rho_equivalent(b, c)) REQUIRE(rho_equivalent(a, c));
      }
    }
  }
}

TEST_CASE("rho partition of a reference topology") {
  const auto t = testing::load_fixture("incomparable_pair_topology.json");
  const auto p = partition_by_rho(t);
  REQUIRE(p.classes.size() == 2);
  auto zero = p.classes[0].members;
  auto other = p.classes[1].members;
  std::sort(zero.begin(), zero.end());
  std::sort(other.begin(), other.end());
  CHECK(zero == std::vector<std::string>{"I", "K5", "K6", "K7", "K8", "O"});
  CHECK(other == std::vector<std::string>{"K1", "K2", "K3", "K4"});
  CHECK(p.classes[1].rho == std::vector<Grade>{grade_from_decimal("0.20"), grade_from_decimal("0.10"),
                                               grade_from_decimal("0.35")});
  CHECK(rank_of(t) == Rank{2});
}

TEST_CASE("rank of small families") {
  const auto u = fixtures::abc();
  Family single(u, {{"K1", fixtures::incomparable_pair().at("K1").set}});
  CHECK(partition_by_rho(single).classes.size() == 1);
  Family bounds(u, {{"I", PictureFuzzySet::full(u)}, {"O", PictureFuzzySet::null(u)}});
  CHECK(partition_by_rho(bounds).classes.size() == 1);
  CHECK(rank_of(bounds).value == 1);
  CHECK_THROWS_AS(rank_of(Family(u)), Error);
  CHECK(rank_of(testing::load_fixture("balanced_pair_topology.json")).value == 3);
  CHECK(rank_of(testing::load_fixture("rho_crossing_pair_topology.json")).value == 4);
}

TEST_CASE("rank matches a direct census and ignores order and duplicates") {
  std::mt19937_64 rng(3);
  const auto u = gen::universe(2);
  for (int i = 0; i < 300; ++i) {
    Family f(u);
    const int n = 1 + static_cast<int>(rng() % 6);
    for (int j = 0; j < n; ++j) f.add("S" + std::to_string(j), gen::set(rng, u, 2500));
    const auto rank = rank_of(f).value;
    CHECK(rank == oracle::rho_census(f));

    auto members = std::vector<Member>(f.members().begin(), f.members().end());
    std::shuffle(members.begin(), members.end(), rng);
    members.push_back({"dup", members.front().set});
    CHECK(rank_of(Family(u, members)).value == rank);
  }
}
