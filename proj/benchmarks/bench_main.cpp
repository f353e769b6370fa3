#include <benchmark/benchmark.h>

#include "schublas/bases.hpp"
#include "schublas/composition.hpp"
#include "schublas/expansion.hpp"
#include "schublas/permutation.hpp"
#include "schublas/pipedream.hpp"
#include "schublas/snp.hpp"
#include "schublas/tableau.hpp"

namespace {

using namespace schublas;

void bm_schubert_recursion(benchmark::State& state) {
  Permutation w = Permutation::parse("3,7,1,5,2,6,4");
  for (auto _ : state) {
    clear_basis_caches();
    benchmark::DoNotOptimize(schubert_polynomial(w));
  }
}
BENCHMARK(bm_schubert_recursion);

void bm_top_lascoux_recursion(benchmark::State& state) {
  WeakComposition alpha = WeakComposition::parse("2,0,4,0,1,3");
  for (auto _ : state) {
    clear_basis_caches();
    benchmark::DoNotOptimize(top_lascoux_polynomial(alpha));
  }
}
BENCHMARK(bm_top_lascoux_recursion);

void bm_bpd_enumeration(benchmark::State& state) {
  Permutation w = Permutation::parse("3,6,1,5,2,4");
  for (auto _ : state) benchmark::DoNotOptimize(bpd_list(w));
}
BENCHMARK(bm_bpd_enumeration);

void bm_ltbpd_enumeration(benchmark::State& state) {
  WeakComposition alpha = WeakComposition::parse("2,0,4,0,1,3");
  for (auto _ : state) benchmark::DoNotOptimize(ltbpd_list(alpha));
}
BENCHMARK(bm_ltbpd_enumeration);

void bm_top_lascoux_product(benchmark::State& state) {
  WeakComposition alpha = WeakComposition::parse("2,3,1,4");
  WeakComposition gamma = WeakComposition::parse("2,1,4,3");
  for (auto _ : state) {
    clear_basis_caches();
    benchmark::DoNotOptimize(top_lascoux_product_expansion(alpha, gamma));
  }
}
BENCHMARK(bm_top_lascoux_product);

void bm_snp_check(benchmark::State& state) {
  Polynomial f = schubert_polynomial(Permutation::parse("3,1,5,2,4"));
  for (auto _ : state) benchmark::DoNotOptimize(check_snp(f));
}
BENCHMARK(bm_snp_check);

void bm_support_tableaux(benchmark::State& state) {
  WeakComposition alpha = WeakComposition::parse("2,0,4,0,1");
  for (auto _ : state) benchmark::DoNotOptimize(top_lascoux_support(alpha));
}
BENCHMARK(bm_support_tableaux);

}  // namespace

BENCHMARK_MAIN();
