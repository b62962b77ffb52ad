#include <benchmark/benchmark.h>
static void BM_noop(benchmark::State& s){for(auto _ : s){}}
BENCHMARK(BM_noop);
int main(int argc, char** argv){ benchmark::Initialize(&argc, argv); benchmark::RunSpecifiedBenchmarks(); }
