#include <btg/graph/obligations.hpp>
#include <btg/kernel/operations.hpp>
#include <btg/meaning/syntactic_class.hpp>
#include <btg/rng.hpp>
#include <btg/text/report.hpp>
#include <btg/text/theory_file.hpp>
#include <btg/transformers/builtins.hpp>

#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

using namespace btg;

namespace {

std::string corpus() {
  std::ifstream in(std::string(BTG_CORPUS_DIR) + "/nat_ring.btg");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const graph::TheoryGraph& bundled() {
  static const graph::TheoryGraph g = text::parse(corpus());
  return g;
}

std::vector<kernel::Term> polys(std::size_t n, std::size_t depth) {
  const meaning::PolyTermClass cls{kernel::Sort{"R"}, std::vector<std::string>{"x", "y", "z"}, {}};
  Rng rng(42);
  std::vector<kernel::Term> out;
  while (out.size() < n) {
    if (auto t = meaning::random_member(cls, bundled().theory("Ring").signature, rng, depth)) out.push_back(*t);
  }
  return out;
}

void BM_ParseCorpus(benchmark::State& state) {
  const std::string text = corpus();
  for (auto _ : state) benchmark::DoNotOptimize(text::parse(text));
}
BENCHMARK(BM_ParseCorpus)->Unit(benchmark::kMillisecond);

void BM_EnumerateArith(benchmark::State& state) {
  const auto& sig = bundled().theory("Arith").signature;
  const auto depth = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernel::enumerate_terms(sig, kernel::Sort{"E"}, depth, {0, 1, 2}));
}
BENCHMARK(BM_EnumerateArith)->Arg(1)->Arg(2);

void BM_Factor(benchmark::State& state) {
  const Integer n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(transformers::factor_integer(n));
}
BENCHMARK(BM_Factor)->Arg(6)->Arg(9973)->Arg(1'000'000'007);

void BM_ModPow(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(transformers::modpow(5, state.range(0), 379));
}
BENCHMARK(BM_ModPow)->Arg(256)->Arg(1 << 20);

void BM_NormalizePoly(benchmark::State& state) {
  const auto terms = polys(100, static_cast<std::size_t>(state.range(0)));
  const kernel::Sort r{"R"};
  for (auto _ : state) {
    for (const auto& t : terms) benchmark::DoNotOptimize(transformers::normalize_poly(t, r));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(terms.size()));
}
BENCHMARK(BM_NormalizePoly)->Arg(4)->Arg(6);

void BM_CheckMorphisms(benchmark::State& state) {
  text::VerifyOptions o;
  o.samples = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(text::run_checks(bundled(), o));
}
BENCHMARK(BM_CheckMorphisms)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_VerifyBundled(benchmark::State& state) {
  const text::VerifyOptions o;
  for (auto _ : state) benchmark::DoNotOptimize(text::run_verify(bundled(), o));
}
BENCHMARK(BM_VerifyBundled)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
