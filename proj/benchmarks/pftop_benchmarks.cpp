#include <benchmark/benchmark.h>

#include <random>

#include "pftop/construction.hpp"
#include "pftop/law_lab.hpp"
#include "pftop/topology_check.hpp"

namespace {

using namespace pftop;

Family random_subbase(std::size_t size, std::size_t universe_size, std::uint64_t seed) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < universe_size; ++i) labels.push_back("x" + std::to_string(i));
  const Universe u(labels);
  const auto triples = laws::grid_triples(Grade::from_raw(500));
  std::mt19937_64 rng(seed);
  Family out(u);
  while (out.size() < size) {
    std::vector<MembershipTriple> t;
    for (std::size_t i = 0; i < universe_size; ++i) t.push_back(triples[rng() % triples.size()]);
    PictureFuzzySet s(u, std::move(t));
    if (!s.is_full() && !s.is_null() && !out.contains(s)) out.add("S" + std::to_string(out.size()), std::move(s));
  }
  return out;
}

void BM_IntersectionClosure(benchmark::State& state) {
  const auto s = random_subbase(state.range(0), 3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(intersection_closure(s));
}
BENCHMARK(BM_IntersectionClosure)->Arg(2)->Arg(4)->Arg(6);

void BM_GenerateFromSubbase(benchmark::State& state) {
  const auto s = random_subbase(state.range(0), 3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(generate_from_subbase(s));
}
BENCHMARK(BM_GenerateFromSubbase)->Arg(2)->Arg(4)->Arg(6);

void BM_CheckAxioms(benchmark::State& state) {
  const auto t = generate_from_subbase(random_subbase(state.range(0), 3, 3)).topology;
  state.counters["members"] = static_cast<double>(t.size());
  for (auto _ : state) benchmark::DoNotOptimize(check_axioms(t));
}
BENCHMARK(BM_CheckAxioms)->Arg(2)->Arg(4)->Arg(6);

void BM_ExhaustiveDistributivity(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(laws::check_law(laws::LawId::L06, laws::SearchDomain{}));
}
BENCHMARK(BM_ExhaustiveDistributivity)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
