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
#pragma once

#include <filesystem>
#include <utility>
#include <vector>

#include "pendant/mesh.h"
#include "pendant/raster.h"

namespace pendant {

/// Colors surfaces by height: the first band with z <= z_upper wins,
/// anything above the last band gets `fallback`.
class HeightBandPalette {
 public:
  HeightBandPalette(std::vector<std::pair<double, Rgb>> bands, Rgb fallback);

  Rgb operator()(double z) const;
  const std::vector<std::pair<double, Rgb>>& bands() const { return bands_; }
  Rgb fallback() const { return fallback_; }

 private:
  std::vector<std::pair<double, Rgb>> bands_;
  Rgb fallback_;
};

/// Gold base up to 4, black to 10, dark green to 13, pink above.
HeightBandPalette pendant_palette();

inline constexpr Rgb kBackground{0.12, 0.12, 0.16};

struct ImageSize {
  int width = 256;
  int height = 256;
};

/// Orthographic view straight down, framed on the xy bounds. Each pixel
/// takes the palette color of the highest surface point above it.
RasterImage render_topdown(const Assembly& a, const HeightBandPalette& palette, ImageSize size);

inline constexpr Vec3 kTurntablePivot{0, -10, 0};

/// Frame j of an orbit about the y axis through kTurntablePivot, at angle
/// 2 pi (j mod n_frames) / n_frames. Orthographic, shaded by depth, with -y
/// up on screen. The framing is fixed across frames.
RasterImage render_turntable_frame(const Assembly& a, int j, int n_frames, ImageSize size);

std::vector<RasterImage> render_turntable(const Assembly& a, int n_frames, ImageSize size);

/// Writes frame_NNN.ppm files (at least three digits). Refuses to replace
/// existing files unless `overwrite` is set; nothing is written in that case.
std::vector<std::filesystem::path> write_frames(const std::vector<RasterImage>& frames,
                                                const std::filesystem::path& dir, bool overwrite);

/// Writes one PPM, refusing to replace an existing file unless `overwrite`.
void write_ppm(const RasterImage& img, const std::filesystem::path& path, bool overwrite);

}  // namespace pendant
