#include <benchmark/benchmark.h>

#include <charfib/fibers.hpp>
#include <charfib/residue_poly.hpp>
#include <charfib/structure.hpp>

#include <memory>

using namespace charfib;

namespace {

std::shared_ptr<const FieldTable> field_of_order(std::int64_t q) {
  std::int64_t p = q;
  int m = 1;
  // factor the prime power
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) {
      p = d;
      m = 0;
      for (std::int64_t r = q; r > 1; r /= d) ++m;
      break;
    }
  }
  return std::make_shared<const FieldTable>(build_field(find_primitive_poly(p, m)));
}

void BM_BuildField(benchmark::State& state) {
  FieldParams params = find_primitive_poly(2, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_field(params));
  }
}
BENCHMARK(BM_BuildField)->Arg(4)->Arg(8)->Arg(12);

void BM_FindPrimitivePoly(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_primitive_poly(state.range(0), 2));
  }
}
BENCHMARK(BM_FindPrimitivePoly)->Arg(3)->Arg(13)->Arg(31);

void BM_Partition(benchmark::State& state) {
  auto field = field_of_order(256);
  for (auto _ : state) {
    benchmark::DoNotOptimize(partition(field, state.range(0)));
  }
}
BENCHMARK(BM_Partition)->Arg(3)->Arg(17)->Arg(255);

void BM_MulMod(benchmark::State& state) {
  auto field = field_of_order(state.range(0));
  FiberPartition part = partition(field, 3);
  ResiduePoly q1 = char_poly(part, 1);
  ResiduePoly q2 = char_poly(part, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mul_mod(q1, q2));
  }
}
BENCHMARK(BM_MulMod)->Arg(16)->Arg(64)->Arg(256);

void BM_ConstantsDirect(benchmark::State& state) {
  auto field = field_of_order(state.range(0));
  FiberPartition part = partition(field, state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(constants_direct(part));
  }
}
BENCHMARK(BM_ConstantsDirect)
    ->Args({16, 3})
    ->Args({64, 7})
    ->Args({81, 16})
    ->Args({121, 24});

void BM_ConstantsCyclotomic(benchmark::State& state) {
  auto field = field_of_order(state.range(0));
  FiberPartition part = partition(field, state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(constants_cyclotomic(part));
  }
}
BENCHMARK(BM_ConstantsCyclotomic)
    ->Args({16, 3})
    ->Args({64, 7})
    ->Args({81, 16})
    ->Args({121, 24});

void BM_ConstantsBruteforce(benchmark::State& state) {
  auto field = field_of_order(state.range(0));
  FiberPartition part = partition(field, state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(constants_bruteforce(part));
  }
}
BENCHMARK(BM_ConstantsBruteforce)
    ->Args({16, 3})
    ->Args({64, 7})
    ->Args({81, 16})
    ->Args({121, 24});

void BM_VerifyAlgebra(benchmark::State& state) {
  auto field = field_of_order(state.range(0));
  FiberPartition part = partition(field, state.range(1));
  StructureTable t = constants_direct(part);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_algebra(t));
  }
}
BENCHMARK(BM_VerifyAlgebra)->Args({64, 7})->Args({121, 24})->Args({256, 51});

}  // namespace

BENCHMARK_MAIN();
