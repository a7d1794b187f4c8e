#include <benchmark/benchmark.h>

#include "graphk/classify.hpp"
#include "graphk/ktheory.hpp"
#include "graphk/moves.hpp"
#include "graphk/textio.hpp"

#include "support/fixtures.hpp"
#include "support/gen.hpp"

using namespace graphk;

namespace {

IntMatrix random_square(testgen::Rng& rng, int n, int max_abs) {
  IntMatrix m(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) m.at(r, c) = testgen::pick(rng, -max_abs, max_abs);
  }
  return m;
}

void BM_snf_6x6(benchmark::State& state) {
  testgen::Rng rng(1);
  std::vector<IntMatrix> inputs;
  for (int i = 0; i < 64; ++i) inputs.push_back(random_square(rng, 6, 9));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(snf(inputs[i++ % inputs.size()]));
  }
}
BENCHMARK(BM_snf_6x6);

// entry growth stresses the arbitrary-precision path
void BM_snf_16x16_wide_entries(benchmark::State& state) {
  testgen::Rng rng(2);
  std::vector<IntMatrix> inputs;
  for (int i = 0; i < 8; ++i) inputs.push_back(random_square(rng, 16, 999));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(snf(inputs[i++ % inputs.size()]));
  }
}
BENCHMARK(BM_snf_16x16_wide_entries);

void BM_invariant_bundle(benchmark::State& state) {
  testgen::Rng rng(3);
  std::vector<Graph> graphs;
  for (int i = 0; i < 64; ++i) graphs.push_back(testgen::random_graph(rng, 4, 8, 3, 10));
  FieldDescriptor q = FieldDescriptor::rationals();
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(invariants(graphs[i++ % graphs.size()], q));
  }
}
BENCHMARK(BM_invariant_bundle);

void BM_canonical_key_6(benchmark::State& state) {
  testgen::Rng rng(4);
  std::vector<Graph> graphs;
  for (int i = 0; i < 16; ++i) graphs.push_back(testgen::random_graph(rng, 6, 6, 3, 10));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_key(graphs[i++ % graphs.size()]));
  }
}
BENCHMARK(BM_canonical_key_6);

void BM_scripted_chain(benchmark::State& state) {
  Graph einf = fixtures::e_infinity();
  MoveScript script = parse_script(
      "outsplit v :: v=1 :: v=inf\n"
      "outsplit v.2 :: v.2=1 :: v.2=inf, v.1=inf\n"
      "outsplit v.2.2 :: v.1=1 :: v.1=inf, v.2.1=inf, v.2.2=inf\n"
      "collapse v.2.2.1\n");
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_script(einf, script, true));
  }
}
BENCHMARK(BM_scripted_chain);

void BM_search_bridge(benchmark::State& state) {
  Graph einf = fixtures::e_infinity();
  Graph einfm = fixtures::e_infinity_minus();
  SearchBounds bounds;
  for (auto _ : state) {
    benchmark::DoNotOptimize(search_move_equivalence(einf, einfm, bounds));
  }
}
BENCHMARK(BM_search_bridge);

void BM_decide_morita(benchmark::State& state) {
  Graph e = fixtures::counterexample_e();
  Graph f = fixtures::counterexample_f();
  FieldDescriptor q = FieldDescriptor::rationals();
  for (auto _ : state) {
    benchmark::DoNotOptimize(decide_morita(e, f, q));
  }
}
BENCHMARK(BM_decide_morita);

}  // namespace

BENCHMARK_MAIN();
