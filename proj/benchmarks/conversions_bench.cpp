#include <benchmark/benchmark.h>

#include "colorlab/bench.hpp"
#include "colorlab/image.hpp"
#include "colorlab/metrics.hpp"
#include "colorlab/transforms.hpp"

namespace {

using namespace colorlab;

const std::vector<Rgb8>& inputs() {
  static const auto pixels = bench::random_pixels(4096, 7);
  return pixels;
}

void BM_Forward(benchmark::State& state) {
  const auto model = static_cast<ColorModel>(state.range(0));
  const auto& px = inputs();
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(to_model(px[i++ & 4095], model));
  }
  state.SetLabel(std::string(to_string(model)));
}

void BM_RoundTrip(benchmark::State& state) {
  const auto model = static_cast<ColorModel>(state.range(0));
  const auto& px = inputs();
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(to_rgb8(to_model(px[i++ & 4095], model)));
  }
  state.SetLabel(std::string(to_string(model)));
}

void BM_Image200(benchmark::State& state) {
  const auto model = static_cast<ColorModel>(state.range(0));
  const PixelBuffer image(200, 200, bench::random_pixels(200 * 200, 11));
  CoordBuffer out(200, 200);
  for (auto _ : state) {
    convert_image_into(image, model, out);
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * 200 * 200);
  state.SetLabel(std::string(to_string(model)));
}

void BM_DeltaE2000(benchmark::State& state) {
  const Lab a{50.0, 2.6772, -79.7751};
  const Lab b{50.0, 0.0, -82.7485};
  for (auto _ : state) benchmark::DoNotOptimize(delta_e_2000(a, b));
}

void all_models(benchmark::internal::Benchmark* b) {
  for (ColorModel m : kAllModels) b->Arg(static_cast<int>(m));
}

}  // namespace

BENCHMARK(BM_Forward)->Apply(all_models);
BENCHMARK(BM_RoundTrip)->Apply(all_models);
BENCHMARK(BM_Image200)->Apply(all_models)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_DeltaE2000);

BENCHMARK_MAIN();
