#include <benchmark/benchmark.h>

#include "hkgeom/configuration/configuration.hpp"
#include "hkgeom/delpezzo/delpezzo.hpp"
#include "hkgeom/hk/hk.hpp"
#include "hkgeom/kummer/certificate.hpp"

using namespace hkgeom;

namespace {

void BM_DeterminantGeneric(benchmark::State& state) {
  auto k = static_cast<std::size_t>(state.range(0));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k * k; ++i) names.push_back("a" + std::to_string(i));
  exact::Variables vars(names);
  exact::PolyMatrix m(vars, k, k);
  for (std::size_t i = 0; i < k * k; ++i) m.set(i / k, i % k, exact::MultiPoly::variable(vars, i));
  for (auto _ : state) benchmark::DoNotOptimize(exact::determinant(m));
}
BENCHMARK(BM_DeterminantGeneric)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_DelPezzoFive(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(delpezzo::dp5_presentation(delpezzo::Dp5Variant::symmetric));
}
BENCHMARK(BM_DelPezzoFive)->Unit(benchmark::kMillisecond);

void BM_CertifyQuadrangle(benchmark::State& state) {
  auto cover = kummer::cover_equations(config::catalog("complete-quadrangle"), static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kummer::certify_triviality(cover));
}
BENCHMARK(BM_CertifyQuadrangle)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_CertifyHesse(benchmark::State& state) {
  auto cover = kummer::cover_equations(kummer::normalize_basis(config::catalog("hesse")).config, 3);
  for (auto _ : state) benchmark::DoNotOptimize(kummer::certify_triviality(cover));
}
BENCHMARK(BM_CertifyHesse)->Unit(benchmark::kMillisecond);

void BM_Smoothness(benchmark::State& state) {
  hk::SmoothnessOptions o;
  o.n = 5;
  o.prime = 11;
  o.trials = 200;
  o.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hk::smoothness_sample(o));
}
BENCHMARK(BM_Smoothness)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
