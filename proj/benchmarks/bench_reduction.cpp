#include <benchmark/benchmark.h>

#include <random>
#include <set>

#include "racforge/checker.hpp"
#include "racforge/cnf.hpp"
#include "racforge/reduction.hpp"

namespace {

using namespace racforge;

CnfFormula make_formula(int n, int m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> var(1, n);
  std::uniform_int_distribution<int> flip(0, 1);
  CnfFormula f;
  f.num_variables = n;
  for (int j = 0; j < m; ++j) {
    std::set<int> vars;
    while (static_cast<int>(vars.size()) < 3) vars.insert(var(rng));
    Clause c;
    int slot = 0;
    for (int v : vars) c[slot++] = Literal{v, flip(rng) == 1};
    f.clauses.push_back(c);
  }
  return f;
}

void BM_Compile(benchmark::State& state) {
  const CnfFormula f =
      make_formula(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(compile(f).graph.graph.edge_count());
  }
}
BENCHMARK(BM_Compile)->Args({3, 3})->Args({6, 10});

void BM_SynthesizeAndCheck(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int m = static_cast<int>(state.range(1));
  CnfFormula f;
  Assignment a;
  // Find a satisfiable instance deterministically.
  for (std::uint64_t seed = 1;; ++seed) {
    f = make_formula(n, m, seed);
    const auto sats = all_satisfying(f);
    if (!sats.empty()) {
      a = sats.front();
      break;
    }
  }
  for (auto _ : state) {
    const Drawing d = synthesize_drawing(f, a);
    benchmark::DoNotOptimize(check_rac(d).is_rac);
  }
}
BENCHMARK(BM_SynthesizeAndCheck)->Args({3, 3})->Args({6, 10});

}  // namespace
