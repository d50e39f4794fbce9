// Serial versus OpenMP kernels, plus the dense Bareiss reference.
#include <benchmark/benchmark.h>

#include "pilab/codim.hpp"

using namespace pilab::codim;

namespace {

EvaluationTarget envelope_sl2() { return EvaluationTarget::envelope(pilab::algebras::builtin("sl2-cartan")); }

void quotient(benchmark::State& state, pilab::ExecPolicy policy, Arithmetic arith) {
  const auto t = envelope_sl2();
  const int n = static_cast<int>(state.range(0));
  EngineOptions o;
  o.policy = policy;
  o.arithmetic = arith;
  for (auto _ : state) {
    QuotientModel m(t, VariableSet::untyped(n), o);
    benchmark::DoNotOptimize(m.dim());
  }
}

void BM_SpinModularSerial(benchmark::State& s) { quotient(s, pilab::ExecPolicy::serial, Arithmetic::modular); }
void BM_SpinModularParallel(benchmark::State& s) { quotient(s, pilab::ExecPolicy::parallel, Arithmetic::modular); }
void BM_SpinExactSerial(benchmark::State& s) { quotient(s, pilab::ExecPolicy::serial, Arithmetic::exact); }
void BM_SpinExactParallel(benchmark::State& s) { quotient(s, pilab::ExecPolicy::parallel, Arithmetic::exact); }

void cocharacter_bench(benchmark::State& state, pilab::ExecPolicy policy) {
  const auto t = envelope_sl2();
  EngineOptions o;
  o.policy = policy;
  o.arithmetic = Arithmetic::modular;
  const QuotientModel m(t, VariableSet::untyped(static_cast<int>(state.range(0))), o);
  for (auto _ : state) benchmark::DoNotOptimize(cocharacter(m).colength());
}

void BM_TracesSerial(benchmark::State& s) { cocharacter_bench(s, pilab::ExecPolicy::serial); }
void BM_TracesParallel(benchmark::State& s) { cocharacter_bench(s, pilab::ExecPolicy::parallel); }

void BM_DenseBareiss(benchmark::State& state) {
  const auto t = envelope_sl2();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(reference_codimension(t, VariableSet::untyped(n), SpanningKind::all_bracketings));
  }
}

}  // namespace

BENCHMARK(BM_SpinModularSerial)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SpinModularParallel)->DenseRange(5, 7)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SpinExactSerial)->DenseRange(4, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SpinExactParallel)->DenseRange(4, 5)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_TracesSerial)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TracesParallel)->DenseRange(5, 7)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_DenseBareiss)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
