// Copyright 2026 The Pendant Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "pendant/heightfield.h"
#include "pendant/mesh.h"
#include "pendant/metrics.h"
#include "pendant/pipeline.h"
#include "pendant/region.h"
#include "pendant/stl.h"

namespace pendant {
namespace {

GrayImage noise_image(int w, int h) {
  std::mt19937 rng(1);
  std::uniform_real_distribution<double> u(0, 1);
  GrayImage g(w, h);
  for (double& v : g.luma) v = u(rng);
  return g;
}

HeightField logo_field(int n) {
  return attach_range(pad(quantize(noise_image(n, n), top_step_function()), 1, 7),
                      {-55, 50}, {-55, 50});
}

const BuildResult& recipe() {
  static const BuildResult result =
      build(load_config(std::string(PENDANT_RECIPE_DIR) + "/pendant.json"));
  return result;
}

void BM_Quantize(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GrayImage g = noise_image(n, n);
  const StepFunction f = top_step_function();
  for (auto _ : state) benchmark::DoNotOptimize(quantize(g, f));
  state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_Quantize)->Arg(128)->Arg(512);

void BM_HeightfieldToSolid(benchmark::State& state) {
  const HeightField hf = logo_field(static_cast<int>(state.range(0)));
  const Region2D clip = pendant_outline();
  for (auto _ : state) benchmark::DoNotOptimize(heightfield_to_solid(hf, clip, 7));
  state.SetItemsProcessed(state.iterations() * hf.rows * hf.cols);
}
BENCHMARK(BM_HeightfieldToSolid)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_ExtrudeRing(benchmark::State& state) {
  const Region2D ring = region_and(pendant_outline(), Region2D::cheby_band(1, 2.8, 55));
  const int res = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(extrude_region(ring, 0, 6, res, Box2{-80, 80, -80, 80}));
  }
}
BENCHMARK(BM_ExtrudeRing)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_WriteBinaryStl(benchmark::State& state) {
  const Assembly& a = recipe().assembly;
  for (auto _ : state) {
    std::ostringstream out;
    write_binary(a, out);
    benchmark::DoNotOptimize(out);
  }
  state.SetBytesProcessed(state.iterations() * (84 + 50 * a.triangle_count()));
}
BENCHMARK(BM_WriteBinaryStl)->Unit(benchmark::kMillisecond);

void BM_UnionVolume(benchmark::State& state) {
  const Assembly& a = recipe().assembly;
  const Box3 box = a.bounds();
  const double voxel = std::max(box.max.x - box.min.x, box.max.y - box.min.y) /
                       static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(union_volume(a, voxel));
}
BENCHMARK(BM_UnionVolume)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_VolumeProfile(benchmark::State& state) {
  const Assembly& a = recipe().assembly;
  for (auto _ : state) benchmark::DoNotOptimize(volume_profile(a, 100));
}
BENCHMARK(BM_VolumeProfile)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace pendant

BENCHMARK_MAIN();
