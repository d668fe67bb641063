#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "ordmon/checker.hpp"
#include "ordmon/orderiso.hpp"

using namespace ordmon;

namespace {

  MonoidParameter const B_w1 = MonoidParameter::omega_plus_one();

  // terms w^w*c, w^6*c, ..., c with random coefficients, about half present
  std::vector<Ordinal> sample_ordinals(std::size_t n) {
    std::mt19937_64 rng(7);
    std::vector<Ordinal> out;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<CnfTerm> ts;
      if (rng() % 2) ts.push_back({Ordinal::omega(), Natural(rng() % 5 + 1)});
      for (int e = 6; e >= 0; --e) {
        if (rng() % 2) ts.push_back({Ordinal(e), Natural(rng() % 5 + 1)});
      }
      out.push_back(Ordinal::from_terms(std::move(ts)));
    }
    return out;
  }

}  // namespace

static void BM_OrdinalAdd(benchmark::State& state) {
  auto const xs = sample_ordinals(1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(add(xs[i & 1023], xs[(i * 7 + 3) & 1023]));
    ++i;
  }
}
BENCHMARK(BM_OrdinalAdd);

static void BM_OrdinalCompare(benchmark::State& state) {
  auto const xs = sample_ordinals(1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(xs[i & 1023] < xs[(i * 7 + 3) & 1023]);
    ++i;
  }
}
BENCHMARK(BM_OrdinalCompare);

static void BM_Multiply(benchmark::State& state) {
  auto const xs = sample_ordinals(1024);
  std::vector<BicyclicElement> es;
  for (std::size_t i = 0; i < 1024; ++i) {
    es.emplace_back(B_w1, xs[i], xs[(i * 13 + 5) & 1023]);
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(es[i & 1023] * es[(i * 7 + 3) & 1023]);
    ++i;
  }
}
BENCHMARK(BM_Multiply);

static void BM_ComposeIso(benchmark::State& state) {
  auto const xs = sample_ordinals(1024);
  std::vector<UpperSetIso> fs;
  for (std::size_t i = 0; i < 1024; ++i) {
    fs.push_back(represent(BicyclicElement(B_w1, xs[i], xs[(i * 13 + 5) & 1023])));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(compose(fs[i & 1023], fs[(i * 7 + 3) & 1023]));
    ++i;
  }
}
BENCHMARK(BM_ComposeIso);

// One 2.1.1 continuity query; the window grows with the argument.
static void BM_VerifyQuery(benchmark::State& state) {
  BicyclicElement const x = parse_element("(w^w + w^3, w^w + w^2)", B_w1);
  BicyclicElement const y = parse_element("(w^w*2, w^w)", B_w1);
  ContinuityQuery const q{x, y, 1, static_cast<std::uint64_t>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_multiplication_continuity(q));
  }
}
BENCHMARK(BM_VerifyQuery)->Arg(10)->Arg(50)->Arg(200);

// Center times center checks a full window squared.
static void BM_VerifyCenterQuery(benchmark::State& state) {
  ContinuityQuery const q{BasicNeighborhood(1, 1, 0).center(),
                          BasicNeighborhood(2, 1, 0).center(), 2,
                          static_cast<std::uint64_t>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_multiplication_continuity(q));
  }
}
BENCHMARK(BM_VerifyCenterQuery)->Arg(10)->Arg(50);

BENCHMARK_MAIN();
