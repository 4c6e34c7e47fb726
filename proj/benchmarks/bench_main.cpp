#include <benchmark/benchmark.h>

#include "mukai/coxeter.hpp"
#include "mukai/entropy.hpp"
#include "mukai/spectral.hpp"
#include "mukai/surface_io.hpp"
#include "mukai/verify.hpp"

namespace {

using namespace mukai;

void BM_ComposeWord(benchmark::State& state) {
  const SurfaceModel m = preset("E8");
  const auto words = random_words(m, 64, 1);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(compose_word(m, words[i++ % words.size()]));
}
BENCHMARK(BM_ComposeWord);

void BM_CharPoly(benchmark::State& state) {
  const SurfaceModel m = preset(state.range(0) == 0 ? "A2" : "E8");
  const ActionMatrix a = compose_word(m, random_words(m, 1, 7).front());
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(a));
}
BENCHMARK(BM_CharPoly)->Arg(0)->Arg(1);

void BM_SpectralRadius(benchmark::State& state) {
  const SurfaceModel m = preset("Pell");
  const CharPoly chi = char_poly(compose_word(m, Word({Tensor{std::string("B")}, Pullback{"M"}, Pullback{"M"}})));
  for (auto _ : state) benchmark::DoNotOptimize(spectral_radius(chi));
}
BENCHMARK(BM_SpectralRadius);

void BM_Thm42(benchmark::State& state) {
  const SurfaceModel m = preset("D4");
  const auto words = random_words(m, 64, 3);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(verify_thm42(m, words[i++ % words.size()]));
}
BENCHMARK(BM_Thm42);

void BM_WeylClosure(benchmark::State& state) {
  const auto gens = twist_h2_generators(preset(state.range(0) == 0 ? "D4" : "E6"));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_matrix_group(gens));
}
BENCHMARK(BM_WeylClosure)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_EntropySequence(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(entropy_lower_bound({-2, -3, -1}, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EntropySequence)->Arg(200)->Arg(2000);

}  // namespace

BENCHMARK_MAIN();
