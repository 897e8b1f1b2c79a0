#include <benchmark/benchmark.h>

#include "phimod/isoclass.hpp"

using namespace phimod;

namespace {

FieldPtr sqrt_field(long p) { return FieldSpec::make(p, {Integer(-p), Integer(0), Integer(1)}); }

// Split module over an unramified extension of degree f, written in the
// basis P = ((1, 1), (1, 2)) so that normalisation has work to do.
FilteredModule split_module(long p, int f) {
  FieldPtr F = FieldSpec::rationals(p);
  Extension ext = trivial_extension(p, f, 1);
  const size_t n = static_cast<size_t>(f);
  FilteredModule D;
  D.phi = {F, ext.spec,
           Mat2F::diag(VecF::constant(FieldElement(F, p), n), VecF::constant(FieldElement(F, 2L), n)),
           Mat2F::zero(F, n)};
  D.group = ext.group;
  D.action = GaloisAction::trivial(F, 1);
  std::vector<FieldElement> x, y;
  for (int i = 0; i < f; ++i) {
    x.emplace_back(F, 1L);
    y.emplace_back(F, static_cast<long>(i + 2));
  }
  D.fil = {weight_profile(std::vector<long>(n, 1)), VecM(x), VecM(y)};
  Mat2 P{FieldElement(F, 1L), FieldElement(F, 1L), FieldElement(F, 1L), FieldElement(F, 2L)};
  return apply_basechange(D, Mat2F::constant(P, n));
}

void BM_FieldMultiply(benchmark::State& state) {
  FieldPtr F = sqrt_field(3);
  FieldElement a(F, {Rational(3, 7), Rational(-2, 5)}), b(F, {Rational(11, 3), Rational(1, 2)});
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_FieldMultiply);

void BM_FieldInverse(benchmark::State& state) {
  FieldPtr F = sqrt_field(3);
  FieldElement a(F, {Rational(3, 7), Rational(-2, 5)});
  for (auto _ : state) benchmark::DoNotOptimize(a.inverse());
}
BENCHMARK(BM_FieldInverse);

void BM_Valuation(benchmark::State& state) {
  FieldPtr F = sqrt_field(5);
  FieldElement a(F, {Rational(50), Rational(15)});
  for (auto _ : state) benchmark::DoNotOptimize(a.vp());
}
BENCHMARK(BM_Valuation);

void BM_Normalize(benchmark::State& state) {
  FilteredModule D = split_module(3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(normalize(D));
}
BENCHMARK(BM_Normalize)->Arg(1)->Arg(2)->Arg(4);

void BM_CheckWa(benchmark::State& state) {
  NormalizedModule n = normalize(split_module(3, static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(check_wa(n.module));
}
BENCHMARK(BM_CheckWa)->Arg(1)->Arg(2)->Arg(4);

void BM_DecideIsomorphic(benchmark::State& state) {
  FilteredModule A = split_module(3, static_cast<int>(state.range(0)));
  NormalizedModule B = normalize(A);
  for (auto _ : state) benchmark::DoNotOptimize(decide_isomorphic(A, B.module));
}
BENCHMARK(BM_DecideIsomorphic)->Arg(1)->Arg(2)->Arg(4);

void BM_IsomorphicLinearAlgebra(benchmark::State& state) {
  FilteredModule A = split_module(3, static_cast<int>(state.range(0)));
  NormalizedModule B = normalize(A);
  for (auto _ : state) benchmark::DoNotOptimize(isomorphic_by_linear_algebra(A, B.module));
}
BENCHMARK(BM_IsomorphicLinearAlgebra)->Arg(1)->Arg(2);

}  // namespace

BENCHMARK_MAIN();
