#include <benchmark/benchmark.h>

#include "twsolve/pipeline.hpp"

using namespace tws;

static void BM_TermsUpTo1000(benchmark::State& state) {
  const auto& spec = sequence_spec(SequenceId::Padovan);
  for (auto _ : state) {
    auto terms = terms_up_to(spec, 1000);
    benchmark::DoNotOptimize(terms);
  }
}
BENCHMARK(BM_TermsUpTo1000);

static void BM_DominantRoot(benchmark::State& state) {
  const auto prec = static_cast<mpfr_prec_t>(state.range(0));
  Cubic pad{1, 0, -1, -1};
  for (auto _ : state) {
    auto r = dominant_root(pad, prec);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_DominantRoot)->Arg(192)->Arg(1024)->Arg(4096);

static void BM_PartialQuotients50(benchmark::State& state) {
  for (auto _ : state) {
    auto cf = partial_quotients(make_tau(SequenceId::Padovan, 2), 50);
    benchmark::DoNotOptimize(cf);
  }
}
BENCHMARK(BM_PartialQuotients50);

static void BM_FamilyBound(benchmark::State& state) {
  EquationFamily fam{SequenceId::Narayana, BaseSign::Plus, TailSign::Minus};
  for (auto _ : state) {
    auto m = family_bound(fam, 10);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_FamilyBound);

static void BM_BakerDavenport(benchmark::State& state) {
  EquationFamily fam{SequenceId::Padovan, BaseSign::Plus, TailSign::Minus};
  auto fc = family_constants(SequenceId::Padovan);
  auto B = dominant_root(sequence_spec(SequenceId::Padovan).char_poly,
                         kDefaultPrecision);
  mpz_class M("18200000000000000");
  for (auto _ : state) {
    auto res = baker_davenport(make_tau(SequenceId::Padovan, 10),
                               make_mu(fam, 10), fc.reduction_A, B, M);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_BakerDavenport);

static void BM_EnumerateSolutions(benchmark::State& state) {
  EquationFamily fam{SequenceId::Padovan, BaseSign::Plus, TailSign::Minus};
  for (auto _ : state) {
    auto sols = enumerate_solutions(fam, 2, 10, 300);
    benchmark::DoNotOptimize(sols);
  }
}
BENCHMARK(BM_EnumerateSolutions);

static void BM_RunFamily(benchmark::State& state) {
  EquationFamily fam{SequenceId::Perrin, BaseSign::Minus, TailSign::Plus};
  for (auto _ : state) {
    auto rep = run_family(fam, 2, 10);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_RunFamily);

BENCHMARK_MAIN();
