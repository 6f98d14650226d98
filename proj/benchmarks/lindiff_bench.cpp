#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "lindiff/cli/problem.hpp"
#include "lindiff/lindiff.hpp"

namespace {

using namespace lindiff;

const DiffFieldConfig kQt(1, 1);

// sum_{i <= deg} (t^i + i + 1) delta^i
OrePoly dense_operator(int deg, int shift) {
  OrePoly f(kQt);
  const RatFun t = RatFun::variable(kQt, 0);
  RatFun power(kQt, Rational(1));
  for (int i = 0; i <= deg; ++i) {
    f.add_term(DerivMonomial::delta(1, 0, static_cast<std::uint32_t>(i)),
               power + RatFun(kQt, Rational(i + shift)));
    power *= t;
  }
  return f;
}

void BM_OreMul(benchmark::State& state) {
  const int deg = static_cast<int>(state.range(0));
  const OrePoly f = dense_operator(deg, 1);
  const OrePoly g = dense_operator(deg, 2);
  for (auto _ : state) benchmark::DoNotOptimize(f * g);
}
BENCHMARK(BM_OreMul)->Arg(2)->Arg(4)->Arg(8);

void BM_OreDivmod(benchmark::State& state) {
  const int deg = static_cast<int>(state.range(0));
  const OrePoly g = dense_operator(deg, 2);
  const OrePoly f = dense_operator(deg, 1) * g + dense_operator(deg - 1, 3);
  for (auto _ : state) benchmark::DoNotOptimize(ore_divmod(f, g, DivisionSide::right));
}
BENCHMARK(BM_OreDivmod)->Arg(2)->Arg(4)->Arg(6);

MPoly bivariate(int deg, int seed) {
  MPoly p(2);
  for (int i = 0; i <= deg; ++i) {
    for (int j = 0; i + j <= deg; ++j) {
      p.add_term({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)},
                 Rational((i * 7 + j * 13 + seed) % 11 - 5, 1 + (i + seed) % 3));
    }
  }
  return p;
}

template <MPoly (*Gcd)(const MPoly&, const MPoly&)>
void BM_Gcd(benchmark::State& state) {
  const int deg = static_cast<int>(state.range(0));
  const MPoly common = bivariate(deg, 1);
  const MPoly a = common * bivariate(deg, 2);
  const MPoly b = common * bivariate(deg, 3);
  for (auto _ : state) benchmark::DoNotOptimize(Gcd(a, b));
}
BENCHMARK(BM_Gcd<gcd>)->Name("BM_MPolyGcd")->Arg(2)->Arg(4)->Arg(6);
BENCHMARK(BM_Gcd<gcd_prs>)->Name("BM_MPolyGcdRemainderSequence")->Arg(2)->Arg(4);

void BM_RatFunArithmetic(benchmark::State& state) {
  const DiffFieldConfig cfg(2, 2);
  const RatFun a = RatFun::normalize(cfg, bivariate(3, 1), bivariate(2, 4));
  const RatFun b = RatFun::normalize(cfg, bivariate(3, 2), bivariate(2, 5));
  for (auto _ : state) {
    RatFun c = a * b + a.derive(0) - b.derive(1);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_RatFunArithmetic);

const char* const kModules[] = {
    "field: Q(t)\nmodule: 3\n"
    "gens: -3/2*t*e3''' - 5*e1''\n"
    "gens: (-3/2*t + 1/2)*e2''' + 1/3/(t + 1/3)*e1''' + e1\n",
    "field: Q(t1,t2) derivations: 2\nmodule: 2\n"
    "gens: (3*t1 - 1/2)*e2_(2,0) + (3/2*t1 + 1/2*t2 - 1)*e1_(2,0) + (-t2 - 2/3)*e1\n"
    "gens: (1/3*t1 + 1)*e2_(2,0)\n"
    "gens: -e2_(0,2) + (2/3*t1 - 1)/(t2 - 1/3)*e1_(0,2) + 3*t2*e1_(1,0)\n",
};

void BM_CharacteristicSet(benchmark::State& state) {
  const cli::ProblemFile file = cli::parse_input(kModules[state.range(0)]);
  const Ranking rk = Ranking::orderly(*file.module_rank);
  for (auto _ : state) benchmark::DoNotOptimize(characteristic_set(file.cfg, file.generators, rk));
}
BENCHMARK(BM_CharacteristicSet)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ClassifyTangent(benchmark::State& state) {
  const cli::ProblemFile file = cli::parse_input(kModules[0]);
  const OreMatrix r = OreMatrix::from_relations(file.cfg, *file.module_rank, file.generators);
  for (auto _ : state) benchmark::DoNotOptimize(classify_tangent(r));
}
BENCHMARK(BM_ClassifyTangent)->Unit(benchmark::kMillisecond);

void BM_Diagonalize(benchmark::State& state) {
  const cli::ProblemFile file =
      cli::parse_input("field: Q(t)\nmodule: 2\ngens: [d^2 - t, t*d]; [d, d^2 + 1]\n");
  const OreMatrix r = OreMatrix::from_relations(file.cfg, *file.module_rank, file.generators);
  for (auto _ : state) benchmark::DoNotOptimize(diagonalize(r));
}
BENCHMARK(BM_Diagonalize);

void BM_TangentPipeline(benchmark::State& state) {
  const cli::ProblemFile file =
      cli::parse_input("field: Q(t)\nvars: z y\npoint: z = 1, y = 0\neqs: z*y' - y\n");
  const VarietyPoint x{*file.point};
  const Ranking rk = Ranking::orderly(file.var_names.size());
  for (auto _ : state) benchmark::DoNotOptimize(tangent_pipeline(file.equations, x, rk));
}
BENCHMARK(BM_TangentPipeline);

Antichain staircase(std::size_t m, std::size_t size) {
  Antichain a;
  a.m = m;
  a.components.emplace_back();
  // Points on the hyperplane x_1 + ... + x_m = size are pairwise incomparable.
  for (std::size_t i = 0; i < size; ++i) {
    ExponentVector e(m, 0);
    e[0] = static_cast<std::uint32_t>(i);
    e[1] = static_cast<std::uint32_t>(size - 1 - i);
    a.components.front().push_back(e);
  }
  return a;
}

void BM_CountCofilter(benchmark::State& state) {
  const Antichain a = staircase(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(count_cofilter(a));
}
BENCHMARK(BM_CountCofilter)->Args({2, 4})->Args({2, 8})->Args({3, 8})->Args({3, 12});

void BM_BruteCount(benchmark::State& state) {
  const Antichain a = staircase(3, 8);
  for (auto _ : state) benchmark::DoNotOptimize(brute_count(a, static_cast<std::uint32_t>(state.range(0))));
}
BENCHMARK(BM_BruteCount)->Arg(10)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
