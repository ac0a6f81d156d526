#include <benchmark/benchmark.h>

#include "rarecase/counters/brute_force.hpp"
#include "rarecase/counters/clique_fast.hpp"
#include "rarecase/counters/symmetric_cliques.hpp"
#include "rarecase/graphs/symmetry.hpp"
#include "rarecase/identity/hcy_tests.hpp"
#include "rarecase/oracle/catalog.hpp"

using namespace rarecase;

namespace {

const PrimeModulus kP(2147483647);

void BM_KCliqueFast(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  RandomStream rng(1, 0);
  const auto f = UndirectedMultigraph::random(n, kP, rng);
  for (auto _ : state) benchmark::DoNotOptimize(kclique_fast(f, k));
}
BENCHMARK(BM_KCliqueFast)->ArgsProduct({{12, 18, 24}, {3, 4, 5, 6}});

void BM_KCliqueBrute(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  RandomStream rng(1, 0);
  const auto f = UndirectedMultigraph::random(n, kP, rng);
  for (auto _ : state) benchmark::DoNotOptimize(kclique_bruteforce(f, k));
}
BENCHMARK(BM_KCliqueBrute)->ArgsProduct({{12, 18, 24}, {3, 4, 5, 6}});

void BM_MatMul(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const auto alg = state.range(1) == 0 ? MatMulAlgorithm::schoolbook : MatMulAlgorithm::strassen;
  RandomStream rng(2, 0);
  ModMatrix a(dim * dim), b(dim * dim);
  for (auto& x : a) x = rng.uniform_below(kP.value());
  for (auto& x : b) x = rng.uniform_below(kP.value());
  for (auto _ : state) benchmark::DoNotOptimize(matmul(a, b, dim, kP, alg));
}
BENCHMARK(BM_MatMul)->ArgsProduct({{64, 128, 256}, {0, 1}});

void BM_HeldKarp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RandomStream rng(3, 0);
  const auto m = exact_hcy_machine(n, kP);
  const auto e = DirectedMultigraph::random(n, kP, rng);
  for (auto _ : state) benchmark::DoNotOptimize(m(e));
}
BENCHMARK(BM_HeldKarp)->DenseRange(6, 16, 2);

void BM_HcyBruteForce(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RandomStream rng(3, 0);
  const auto e = DirectedMultigraph::random(n, kP, rng);
  for (auto _ : state) benchmark::DoNotOptimize(hcy_bruteforce(e));
}
BENCHMARK(BM_HcyBruteForce)->DenseRange(6, 9, 1);

void BM_AutomorphismOrder(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RandomStream rng(4, 0);
  const auto g = random_graph(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(automorphism_order(g));
}
BENCHMARK(BM_AutomorphismOrder)->DenseRange(6, 10, 2);

void BM_Classify(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RandomStream rng(5, 0);
  const auto g = permute(random_permutation(n, rng), construct_family(Family::clique_plus_pendant, n));
  for (auto _ : state) benchmark::DoNotOptimize(classify_highly_symmetric(g, 3));
}
BENCHMARK(BM_Classify)->RangeMultiplier(2)->Range(8, 128);

void BM_HcyPipeline(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto m = exact_hcy_machine(n, next_prime_at_least(u64{1} << 20));
  RandomStream rng(6, 0);
  for (auto _ : state) benchmark::DoNotOptimize(is_hcy_pipeline(m, 20, rng));
}
BENCHMARK(BM_HcyPipeline)->DenseRange(5, 8, 1);

}  // namespace

BENCHMARK_MAIN();
