#include <benchmark/benchmark.h>

#include <random>

#include "kw4/realize.hpp"

using namespace kw4;

namespace {

Rational rand_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  return Rational(num(rng), den(rng));
}

LieAlgebra4<Rational> sample_algebra(std::mt19937& rng) {
  return family_algebra(
      FamilyParams<Rational>::para(rand_rational(rng), rand_rational(rng),
                                   rand_rational(rng), rand_rational(rng),
                                   rand_rational(rng), rand_rational(rng)),
      ModelKind::Para);
}

void BM_HodgeStar_Exact(benchmark::State& state) {
  const auto fr = BasisFrame<Rational>::psi_frame();
  std::mt19937 rng(1);
  KForm<Rational> f(2);
  for (int i = 0; i < 6; ++i) f[i] = rand_rational(rng);
  for (auto _ : state) benchmark::DoNotOptimize(fr.hodge_star(f));
}
BENCHMARK(BM_HodgeStar_Exact);

void BM_JacobiDefect_Exact(benchmark::State& state) {
  std::mt19937 rng(2);
  const auto L = sample_algebra(rng);
  for (auto _ : state) benchmark::DoNotOptimize(jacobi_defect(L));
}
BENCHMARK(BM_JacobiDefect_Exact);

void BM_CheckSuite_Exact(benchmark::State& state) {
  std::mt19937 rng(3);
  const auto L = sample_algebra(rng);
  const auto m = ModelSpace<Rational>::build(ModelKind::Para);
  for (auto _ : state) benchmark::DoNotOptimize(check_suite(L, m));
}
BENCHMARK(BM_CheckSuite_Exact);

void BM_CheckSuite_Float(benchmark::State& state) {
  const auto L = family_algebra(FamilyParams<double>::para(2, 5, 1, 1, 0.5, 3),
                                ModelKind::Para);
  const auto m = ModelSpace<double>::build(ModelKind::Para);
  for (auto _ : state) benchmark::DoNotOptimize(check_suite(L, m));
}
BENCHMARK(BM_CheckSuite_Float);

void BM_SolveParaExact(benchmark::State& state) {
  std::mt19937 rng(4);
  const auto m = ModelSpace<Rational>::build(ModelKind::Para);
  KForm<Rational> target(2);
  for (int k = 2; k <= 5; ++k) target += rand_rational(rng) * m.theta(k);
  for (auto _ : state) benchmark::DoNotOptimize(solve_para(m, target));
}
BENCHMARK(BM_SolveParaExact);

void BM_SolveHermitianAlign_Float(benchmark::State& state) {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-2, 2);
  const auto m = ModelSpace<FloatComplex>::build(ModelKind::Hermitian);
  KForm<FloatComplex> target(2);
  for (int k = 1; k <= 5; ++k) target += FloatComplex(u(rng), 0) * m.theta(k);
  for (auto _ : state)
    benchmark::DoNotOptimize(solve_hermitian(m, target, HermitianMode::ExactAlign));
}
BENCHMARK(BM_SolveHermitianAlign_Float);

void BM_SymbolicRhoA(benchmark::State& state) {
  auto table = std::make_shared<SymbolTable>();
  for (const char* n : {"e1", "e1t", "a2", "a2t", "a3", "a3t"}) table->add_real(n);
  auto v = [&](const char* n) { return ParamPoly::variable(table, n); };
  const auto L = family_algebra(
      FamilyParams<ParamPoly>::para(v("e1"), v("e1t"), v("a2"), v("a2t"), v("a3"),
                                    v("a3t")),
      ModelKind::Para);
  const auto m = ModelSpace<ParamPoly>::build(ModelKind::Para);
  for (auto _ : state) {
    auto curv = curvature(weyl_connection(L, m), L, m);
    benchmark::DoNotOptimize(curv.rho_a_form);
  }
}
BENCHMARK(BM_SymbolicRhoA);

}  // namespace

BENCHMARK_MAIN();
