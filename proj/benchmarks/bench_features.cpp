#include <benchmark/benchmark.h>

#include <random>

#include "spg/colorspace.hpp"
#include "spg/features.hpp"

namespace {

using namespace spg;

RgbImage noise_image(int side) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dist(0, 255);
  RgbImage img(side, side);
  for (Rgb& px : img.pixels()) {
    px = Rgb{static_cast<std::uint8_t>(dist(rng)), static_cast<std::uint8_t>(dist(rng)),
             static_cast<std::uint8_t>(dist(rng))};
  }
  return img;
}

void BM_ConvertImage(benchmark::State& state) {
  const RgbImage img = noise_image(160);
  for (auto _ : state) benchmark::DoNotOptimize(convert_image(img));
  state.SetItemsProcessed(state.iterations() * 160 * 160);
}

// One 160x160 image at the given grid count.
void BM_ExtractScale(benchmark::State& state) {
  const HsiImage img = convert_image(noise_image(160));
  const int grid = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(extract_scale(img, grid));
}

void BM_ExtractMultiscale(benchmark::State& state) {
  const HsiImage img = convert_image(noise_image(160));
  const ScaleSpec scales({32, 16, 8, 4});
  for (auto _ : state) benchmark::DoNotOptimize(extract_multiscale(img, scales));
}

}  // namespace

BENCHMARK(BM_ConvertImage);
BENCHMARK(BM_ExtractScale)->Arg(32)->Arg(16)->Arg(8)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExtractMultiscale)->Unit(benchmark::kMillisecond);
