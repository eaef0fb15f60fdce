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

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pendant {

struct Rgb {
  double r = 0, g = 0, b = 0;
  friend bool operator==(Rgb, Rgb) = default;
};

/// Decoded pixel grid, row-major, row 0 at the top of the image. Channels
/// are normalized to [0, 1].
struct RasterImage {
  int width = 0;
  int height = 0;
  std::vector<Rgb> pixels;

  RasterImage() = default;
  RasterImage(int width, int height, Rgb fill = {});

  Rgb& at(int row, int col) { return pixels[index(row, col)]; }
  const Rgb& at(int row, int col) const { return pixels[index(row, col)]; }
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * width + col;
  }
  friend bool operator==(const RasterImage&, const RasterImage&) = default;
};

/// Per-pixel luminance on a 0-1 scale.
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<double> luma;

  GrayImage() = default;
  GrayImage(int width, int height, double fill = 0.0);

  double& at(int row, int col) { return luma[index(row, col)]; }
  double at(int row, int col) const { return luma[index(row, col)]; }
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * width + col;
  }
  friend bool operator==(const GrayImage&, const GrayImage&) = default;
};

enum class ImageFormat { kPpm, kPng };

/// Sniffs the container from magic bytes. Throws UnsupportedFormatError for
/// anything other than binary PNM (P5/P6) or PNG.
ImageFormat detect_format(std::span<const std::uint8_t> bytes);

/// Decodes PNG or binary PNM (P6 color, P5 grayscale, maxval up to 65535).
/// Grayscale sources are replicated across all three channels.
RasterImage decode_image(std::span<const std::uint8_t> bytes);

/// Binary P6 with maxval 255. Channels are rounded to the nearest 8-bit code.
std::vector<std::uint8_t> encode_ppm(const RasterImage& img);

enum class PngColor { kRgb, kGray };

/// 8-bit PNG. With PngColor::kGray only the red channel is stored.
std::vector<std::uint8_t> encode_png(const RasterImage& img,
                                     PngColor color = PngColor::kRgb);

enum class LumaFormula {
  kBt601,         // 0.299 r + 0.587 g + 0.114 b
  kHslLightness,  // (max + min) / 2
};

LumaFormula parse_luma_formula(std::string_view name);
std::string_view to_string(LumaFormula formula);

double luminance(Rgb c, LumaFormula formula = LumaFormula::kBt601);

GrayImage to_luminance(const RasterImage& img,
                       LumaFormula formula = LumaFormula::kBt601);

/// Reverses column order. Applying it twice returns the input exactly.
GrayImage flip_horizontal(const GrayImage& img);

std::vector<std::uint8_t> read_file(const std::string& path);
void write_file(const std::string& path, std::span<const std::uint8_t> bytes);

}  // namespace pendant
