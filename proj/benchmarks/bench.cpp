#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "phalg/compile.hpp"
#include "phalg/eval.hpp"
#include "phalg/prelude.hpp"
#include "phalg/term.hpp"
#include "phalg/translate.hpp"

using namespace phalg;

namespace {

Word alternating(std::size_t n) {
  std::string bits;
  for (std::size_t i = 0; i < n; ++i) bits.push_back(i % 2 ? '1' : '0');
  return Word::fromBits(bits);
}

Word ones(std::size_t n) { return Word::ones(n); }

// Interpreter steps of chi_preceq on two words of length n.
void BM_ChiPreceqInterpreter(benchmark::State& state) {
  DefTable t = stdlibTable("chi_preceq.fa");
  std::size_t n = static_cast<std::size_t>(state.range(0));
  std::vector<Word> args{alternating(n), ones(n)};
  std::size_t steps = 0;
  for (auto _ : state) {
    EvalOutcome r = evalNamed(t, "chi_preceq", args);
    steps = r.steps;
    benchmark::DoNotOptimize(r.value);
  }
  state.counters["steps"] = static_cast<double>(steps);
}
BENCHMARK(BM_ChiPreceqInterpreter)->RangeMultiplier(2)->Range(1, 32);

// grow runs a chain of nu(y)+1 steps.
void BM_GrowChain(benchmark::State& state) {
  DefTable t = stdlibTable("examples.fa");
  std::vector<Word> args{ones(static_cast<std::size_t>(state.range(0)))};
  std::size_t steps = 0;
  for (auto _ : state) {
    EvalOutcome r = evalNamed(t, "grow", args);
    steps = r.steps;
    benchmark::DoNotOptimize(r.value);
  }
  state.counters["steps"] = static_cast<double>(steps);
}
BENCHMARK(BM_GrowChain)->DenseRange(2, 12, 2);

void BM_ChiPreceqReduction(benchmark::State& state) {
  const CombTerm& chi = cPreceqTerm();
  std::size_t n = static_cast<std::size_t>(state.range(0));
  CombTerm t = term::app(chi, {numeral(alternating(n)), numeral(ones(n))});
  std::size_t steps = 0;
  for (auto _ : state) {
    Reduction r = reduce(t);
    steps = r.steps;
    benchmark::DoNotOptimize(r.term);
  }
  state.counters["steps"] = static_cast<double>(steps);
}
BENCHMARK(BM_ChiPreceqReduction)->RangeMultiplier(2)->Range(1, 8);

void BM_CompileStdlib(benchmark::State& state) {
  DefTable t = stdlibTable("pairing.fa");
  for (auto _ : state) {
    CompiledFn fn = compile(t, "proj1");
    benchmark::DoNotOptimize(fn.term);
  }
}
BENCHMARK(BM_CompileStdlib);

void BM_TranslateToSorted(benchmark::State& state) {
  DefTable t = stdlibTable("examples.fa");
  for (auto _ : state) {
    DefTable s = unsortedToSorted(t);
    benchmark::DoNotOptimize(s.size());
  }
}
BENCHMARK(BM_TranslateToSorted);

void BM_SortedGrowTranslated(benchmark::State& state) {
  DefTable s = unsortedToSorted(stdlibTable("examples.fa"));
  std::vector<Word> args{ones(static_cast<std::size_t>(state.range(0)))};
  std::size_t steps = 0;
  for (auto _ : state) {
    EvalOutcome r = evalNamed(s, "grow", args);
    steps = r.steps;
    benchmark::DoNotOptimize(r.value);
  }
  state.counters["steps"] = static_cast<double>(steps);
}
BENCHMARK(BM_SortedGrowTranslated)->DenseRange(1, 5, 1);

}  // namespace

BENCHMARK_MAIN();
