#include <benchmark/benchmark.h>

#include "finvar/cycnum.hpp"
#include "finvar/mat.hpp"
#include "finvar/monomial.hpp"

using namespace finvar;

static void BM_CycNumMul(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  CycNum a = CycNum::zeta(n) + CycNum(Rational(3, 7));
  CycNum b = CycNum::zeta(n, 2) - CycNum(Rational(5, 11));
  for (auto _ : state) {
    CycNum c = a * b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_CycNumMul)->Arg(4)->Arg(8)->Arg(120)->Arg(840);

static void BM_CycNumInverse(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  CycNum a = CycNum::zeta(n) + CycNum(2);
  for (auto _ : state) benchmark::DoNotOptimize(a.inverse());
}
BENCHMARK(BM_CycNumInverse)->Arg(5)->Arg(8)->Arg(120);

static void BM_MatMul4(benchmark::State& state) {
  const CycNum z = CycNum::zeta(8);
  Mat a = Mat::diag({z, z.inverse(), CycNum(1), CycNum(-1)});
  Mat b = Mat::from_ints({{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}});
  for (auto _ : state) benchmark::DoNotOptimize(a * b * a);
}
BENCHMARK(BM_MatMul4);

static void BM_SmithDivisors(benchmark::State& state) {
  const IntMatrix m{{2, 4, 4, 0}, {-6, 6, 12, 2}, {10, -4, -16, 8}, {1, 1, 1, 1}};
  for (auto _ : state) benchmark::DoNotOptimize(smith_divisors(m));
}
BENCHMARK(BM_SmithDivisors);

BENCHMARK_MAIN();
