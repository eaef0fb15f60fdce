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


// Writes the bundled recipe's fixture images: a letters band (black glyphs
// with a green halo on white) and a four-tone logo (white, green, black,
// pink). Output is deterministic so the images can be checked in.
//
// The letters are stored mirrored; the recipe flips them back so they read
// correctly on the back of the print.

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include "pendant/raster.h"

namespace {

using pendant::RasterImage;
using pendant::Rgb;

constexpr Rgb kWhite{1, 1, 1};
constexpr Rgb kBlack{0, 0, 0};
constexpr Rgb kGreen{37 / 255.0, 140 / 255.0, 35 / 255.0};
constexpr Rgb kPink{1.0, 160 / 255.0, 190 / 255.0};

using Glyph = std::array<const char*, 7>;

constexpr Glyph kZ = {"11111", "00001", "00010", "00100", "01000", "10000", "11111"};
constexpr Glyph kU = {"10001", "10001", "10001", "10001", "10001", "10001", "01110"};
constexpr Glyph kF = {"11111", "10000", "10000", "11110", "10000", "10000", "10000"};
constexpr Glyph kP = {"11110", "10001", "10001", "11110", "10000", "10000", "10000"};

void stamp(RasterImage& img, const Glyph& g, int top, int left, int scale, Rgb color) {
  for (int r = 0; r < 7; ++r) {
    for (int c = 0; c < 5; ++c) {
      if (g[r][c] != '1') continue;
      for (int y = 0; y < scale; ++y) {
        for (int x = 0; x < scale; ++x) img.at(top + r * scale + y, left + c * scale + x) = color;
      }
    }
  }
}

RasterImage letters() {
  RasterImage img(224, 80, kWhite);
  const int scale = 8, advance = 52, left = 14, top = 12;
  int k = 0;
  for (const Glyph* g : {&kZ, &kU, &kF, &kP}) stamp(img, *g, top, left + advance * k++, scale, kBlack);
  // Green halo: every white pixel within 4 pixels of ink.
  RasterImage out = img;
  for (int r = 0; r < img.height; ++r) {
    for (int c = 0; c < img.width; ++c) {
      if (img.at(r, c) == kBlack) continue;
      for (int dr = -4; dr <= 4; ++dr) {
        for (int dc = -4; dc <= 4; ++dc) {
          const int rr = r + dr, cc = c + dc;
          if (rr >= 0 && rr < img.height && cc >= 0 && cc < img.width && img.at(rr, cc) == kBlack) {
            out.at(r, c) = kGreen;
          }
        }
      }
    }
  }
  RasterImage mirrored = out;
  for (int r = 0; r < out.height; ++r) {
    for (int c = 0; c < out.width; ++c) mirrored.at(r, c) = out.at(r, out.width - 1 - c);
  }
  return mirrored;
}

RasterImage logo() {
  RasterImage img(128, 128, kWhite);
  auto fill_disk = [&](double cx, double cy, double radius, Rgb color) {
    for (int r = 0; r < img.height; ++r) {
      for (int c = 0; c < img.width; ++c) {
        const double dx = c + 0.5 - cx, dy = r + 0.5 - cy;
        if (dx * dx + dy * dy < radius * radius) img.at(r, c) = color;
      }
    }
  };
  auto fill_rect = [&](int r0, int r1, int c0, int c1, Rgb color) {
    for (int r = r0; r < r1; ++r) {
      for (int c = c0; c < c1; ++c) img.at(r, c) = color;
    }
  };
  fill_rect(70, 122, 30, 98, kBlack);
  fill_rect(73, 119, 33, 95, kGreen);
  fill_disk(64, 42, 31, kBlack);
  fill_disk(64, 42, 28, kPink);
  fill_disk(53, 36, 4, kBlack);
  fill_disk(75, 36, 4, kBlack);
  fill_rect(52, 55, 52, 76, kBlack);
  stamp(img, kZ, 82, 54, 4, kPink);
  return img;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: %s OUTPUT_DIR\n", argv[0]);
    return 1;
  }
  const std::filesystem::path dir = argv[1];
  try {
    std::filesystem::create_directories(dir);
    pendant::write_file((dir / "letters.ppm").string(), pendant::encode_ppm(letters()));
    pendant::write_file((dir / "logo.ppm").string(), pendant::encode_ppm(logo()));
  } catch (const std::exception& e) {
    std::fprintf(stderr, "make_fixtures: %s\n", e.what());
    return 3;
  }
  return 0;
}
