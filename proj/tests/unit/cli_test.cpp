#include <doctest.h>

#include <filesystem>
#include <json.hpp>
#include <sstream>

#include "fixture_files.hpp"
#include "pftop_cli/cli.hpp"

using namespace pftop;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fx(const char* name) { return testing::fixture_path(name); }

}  // namespace

TEST_CASE("generate prints the size and rank") {
  const auto tmp = std::filesystem::temp_directory_path() / "pftop_cli_generate.json";
  const auto r = run({"generate", fx("incomparable_pair.json"), "--subbase", "K1,K2", "-o", tmp.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("|T| = 10, rank = 2\n") != std::string::npos);
  const auto written = testing::load_fixture("incomparable_pair_topology.json");
  std::ifstream in(tmp);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(same_values(load_family(buf.str()), written));
  std::filesystem::remove(tmp);
}

TEST_CASE("generate flags an unexpected rank") {
  auto r = run({"generate", fx("rho_crossing_pair.json"), "--expect-rank", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("rank = 4") != std::string::npos);
  CHECK(r.out.find("note: rank 4 differs from the expected rank 3") != std::string::npos);
  r = run({"generate", fx("double_chain.json"), "--require-minimal"});
  CHECK(r.code == 2);
  CHECK(r.err.find("NotMinimal") != std::string::npos);
}

TEST_CASE("check reports the missing O-join") {
  auto r = run({"check", fx("double_chain_listed.json")});
  CHECK(r.code == 1);
  CHECK(r.out.find("UnionEscape: O | A1") != std::string::npos);
  r = run({"check", fx("incomparable_pair_topology.json"), "--mode", "reversed"});
  CHECK(r.code == 0);
  CHECK(r.out.find("topology axioms: satisfied") != std::string::npos);
}

TEST_CASE("json reports carry replayable witnesses") {
  const auto r = run({"check", fx("double_chain_listed.json"), "--json"});
  CHECK(r.code == 1);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["is_topology"] == false);
  bool found = false;
  for (const auto& v : doc["violations"]) {
    if (v["kind"] == "UnionEscape" && v["operands"][0]["name"] == "O" && v["operands"][1]["name"] == "A1") {
      found = true;
      CHECK(v["result"]["a"]["rho"] == "0.00");
      CHECK(v["result"]["a"]["mu"] == "0.10");
    }
  }
  CHECK(found);

  const auto g = nlohmann::json::parse(run({"generate", fx("balanced_pair.json"), "--json"}).out);
  CHECK(g["size"] == 5);
  CHECK(g["rank"] == 3);
  CHECK(g["topology"]["sets"].size() == 5);
  CHECK(g["provenance"]["(O | A1)"] == "(O | A1)");
}

TEST_CASE("rank, classify and eval") {
  auto r = run({"rank", fx("incomparable_pair_topology.json")});
  CHECK(r.code == 0);
  CHECK(r.out == "|F| = 10, rank = 2\n");
  r = run({"classify", fx("incomparable_pair_topology.json")});
  CHECK(r.code == 0);
  CHECK(r.out.find("rho (0.20, 0.10, 0.35): K1, K3, K4, K2") != std::string::npos);
  r = run({"eval", fx("incomparable_pair_topology.json"), "--expr", "K1 & K2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("matches: K3") != std::string::npos);
  r = run({"eval", fx("incomparable_pair.json"), "--expr", "K1 & | K2"});
  CHECK(r.code == 2);
  CHECK(r.err.find("SyntaxError") != std::string::npos);
  CHECK(r.err.find("offset 5") != std::string::npos);
}

TEST_CASE("laws") {
  auto r = run({"laws", "--law", "L06"});
  CHECK(r.code == 0);
  CHECK(r.out == "L06 Holds (42875 instances) [+100000 randomized at |X|=2]\n");
  r = run({"laws", "--law", "L14"});
  CHECK(r.code == 1);
  CHECK(r.out.find("L14 Counterexample") == 0);
  r = run({"laws", "--law", "L01", "--step", "0.10", "--universe-size", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "L01 Holds (81796 instances)\n");
  r = run({"laws", "--law", "L15", "--json", "--mode", "reversed"});
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["laws"][0]["outcome"] == "Split");
  CHECK(doc["laws"][0]["clauses"][0]["holds"] == false);
  CHECK(doc["laws"][0]["clauses"][0]["witness"]["sets"].size() == 1);
}

TEST_CASE("usage and input errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"check"}).code == 2);
  CHECK(run({"check", fx("missing.json")}).code == 2);
  CHECK(run({"check", fx("incomparable_pair.json"), "--mode", "sideways"}).code == 2);
  CHECK(run({"laws", "--law", "L99"}).code == 2);
  CHECK(run({"laws", "--step", "0.3"}).code == 2);
  CHECK(run({"laws", "--law", "L06", "--universe-size", "3", "--step", "0.05"}).code == 2);
  CHECK(run({"generate", fx("incomparable_pair.json"), "--subbase", "K1,K9"}).code == 2);
  const auto r = run({"rank", fx("nested_pair.json")});
  CHECK(r.code == 2);
  CHECK(r.err.find("ValidationError (GradeSumExceeded)") != std::string::npos);
  CHECK(r.err.find("nested_pair.json") != std::string::npos);
  CHECK(run({"--help"}).code == 0);
}
