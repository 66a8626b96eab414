#include <benchmark/benchmark.h>

#include "deltalab/association.hpp"

namespace {

using namespace deltalab;
using namespace deltalab::exactcalc;
using association::extract;
using association::identity_suite;
using association::SigmaSchedule;
using association::TestFunction;
using models::PiecewiseModel;
using mollifiers::default_mollifier;
using mollifiers::derivative_net;
using mollifiers::scaled_instance;

void BM_BuildMollifier(benchmark::State& state) {
  const auto desc = mollifiers::default_geometry();
  for (auto _ : state) benchmark::DoNotOptimize(mollifiers::build_mollifier(desc));
}
BENCHMARK(BM_BuildMollifier);

void BM_ScaledNet(benchmark::State& state) {
  const auto m = default_mollifier();
  const Rational sigma = rat(1, 1L << state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(scaled_instance(m, sigma));
}
BENCHMARK(BM_ScaledNet)->Arg(3)->Arg(8);

void BM_ConvolveStep(benchmark::State& state) {
  const auto m = default_mollifier();
  const Rational sigma = rat(1, 1L << state.range(0));
  const Rational reach = sigma * m.support_radius();
  const auto f = PiecewiseModel::heaviside();
  for (auto _ : state) benchmark::DoNotOptimize(models::model(f, m, sigma, reach));
}
BENCHMARK(BM_ConvolveStep)->Arg(3)->Arg(8);

void BM_ProductPairing(benchmark::State& state) {
  const auto m = default_mollifier();
  const auto psi = TestFunction::monomial_plateau(0, rat(1, 4), rat(1, 2), 6);
  const Rational sigma = rat(1, 1L << state.range(0));
  const auto f = PiecewiseModel::heaviside();
  for (auto _ : state)
    benchmark::DoNotOptimize(association::product_pairing(f, m, 1, sigma, psi));
}
BENCHMARK(BM_ProductPairing)->Arg(3)->Arg(8);

void BM_IdentitySuite(benchmark::State& state) {
  const auto m = default_mollifier();
  for (auto _ : state) benchmark::DoNotOptimize(identity_suite(m, rat(1, 8)));
}
BENCHMARK(BM_IdentitySuite);

void BM_ExtractStep(benchmark::State& state) {
  const auto m = default_mollifier();
  const auto schedule = SigmaSchedule::dyadic(3, 8);
  for (auto _ : state)
    benchmark::DoNotOptimize(extract(PiecewiseModel::heaviside(), m, 1, schedule, 1));
}
BENCHMARK(BM_ExtractStep);

}  // namespace

BENCHMARK_MAIN();
