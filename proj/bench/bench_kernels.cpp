// OpenMP kernels against the serial reference implementations.
//
//   ./bench_kernels --benchmark_filter=Tenengrad
//   OMP_NUM_THREADS=1 ./bench_kernels    # single-thread comparison

#include <random>

#include <benchmark/benchmark.h>

#include "geomaug/core/image.hpp"
#include "geomaug/filters/convolution.hpp"
#include "geomaug/filters/gaussian.hpp"
#include "geomaug/filters/geometric.hpp"
#include "geomaug/filters/histogram.hpp"
#include "geomaug/filters/morphology.hpp"
#include "geomaug/reference/reference.hpp"

namespace {

using namespace geomaug;

ImageU8 noise_image(int n) {
  std::mt19937 gen(42);
  ImageU8 img(n, n, 1);
  for (auto& v : img.samples()) v = static_cast<std::uint8_t>(gen() & 0xFF);
  return img;
}

void BM_Convolve_Parallel(benchmark::State& state) {
  const ImageF img = to_float(noise_image(static_cast<int>(state.range(0))));
  const auto k = filters::Kernel3x3::scharr_x();
  for (auto _ : state) benchmark::DoNotOptimize(filters::convolve3x3(img, k));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(img.size()));
}
void BM_Convolve_Reference(benchmark::State& state) {
  const ImageF img = to_float(noise_image(static_cast<int>(state.range(0))));
  const auto k = filters::Kernel3x3::scharr_x().weights();
  for (auto _ : state) benchmark::DoNotOptimize(reference::convolve3x3(img, k));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(img.size()));
}

void BM_Tenengrad_Parallel(benchmark::State& state) {
  const ImageU8 img = noise_image(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(filters::tenengrad(img));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(img.size()));
}
void BM_Tenengrad_Reference(benchmark::State& state) {
  const ImageU8 img = noise_image(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::tenengrad(img));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(img.size()));
}

void BM_GaussianBlur21_Parallel(benchmark::State& state) {
  const ImageF img = to_float(noise_image(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(filters::gaussian_blur(img, 21));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(img.size()));
}
void BM_GaussianBlur21_Reference(benchmark::State& state) {
  const ImageF img = to_float(noise_image(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(reference::gaussian_blur(img, 21));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(img.size()));
}

void BM_Dilate5_Parallel(benchmark::State& state) {
  const ImageU8 img = noise_image(static_cast<int>(state.range(0)));
  const auto se = filters::StructuringElement::square(5);
  for (auto _ : state) benchmark::DoNotOptimize(filters::dilate(img, se));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(img.size()));
}
void BM_Dilate5_Reference(benchmark::State& state) {
  const ImageU8 img = noise_image(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::dilate(img, 5, 5));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(img.size()));
}

void BM_ImageToSketch_Parallel(benchmark::State& state) {
  const ImageU8 img = noise_image(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(filters::image_to_sketch(img));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(img.size()));
}
void BM_ImageToSketch_Reference(benchmark::State& state) {
  const ImageU8 img = noise_image(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::image_to_sketch(img));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(img.size()));
}

}  // namespace

BENCHMARK(BM_Convolve_Parallel)->Arg(224)->Arg(1024);
BENCHMARK(BM_Convolve_Reference)->Arg(224)->Arg(1024);
BENCHMARK(BM_Tenengrad_Parallel)->Arg(224)->Arg(1024);
BENCHMARK(BM_Tenengrad_Reference)->Arg(224)->Arg(1024);
BENCHMARK(BM_GaussianBlur21_Parallel)->Arg(224)->Arg(1024);
BENCHMARK(BM_GaussianBlur21_Reference)->Arg(224);
BENCHMARK(BM_Dilate5_Parallel)->Arg(224)->Arg(1024);
BENCHMARK(BM_Dilate5_Reference)->Arg(224)->Arg(1024);
BENCHMARK(BM_ImageToSketch_Parallel)->Arg(224);
BENCHMARK(BM_ImageToSketch_Reference)->Arg(224);

BENCHMARK_MAIN();
