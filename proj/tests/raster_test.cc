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


#include <gtest/gtest.h>

#include <random>
#include <string>

#include "pendant/error.h"
#include "pendant/raster.h"

namespace pendant {
namespace {

std::vector<std::uint8_t> bytes(const std::string& s) { return {s.begin(), s.end()}; }

TEST(Decode, PpmNormalizesChannels) {
  std::string s = "P6\n2 1\n255\n";
  s += {'\xff', '\0', '\0', '\0', '\0', '\0'};
  const RasterImage img = decode_image(bytes(s));
  ASSERT_EQ(img.width, 2);
  ASSERT_EQ(img.height, 1);
  EXPECT_EQ(img.at(0, 0), (Rgb{1, 0, 0}));
  EXPECT_EQ(img.at(0, 1), (Rgb{0, 0, 0}));
}

TEST(Decode, PpmCommentsAndWideSamples) {
  std::string s = "P6 # comment\n1 # width\n1\n65535\n";
  s += {'\xff', '\xff', '\x80', '\x00', '\x00', '\x00'};
  const RasterImage img = decode_image(bytes(s));
  EXPECT_DOUBLE_EQ(img.at(0, 0).r, 1.0);
  EXPECT_DOUBLE_EQ(img.at(0, 0).g, 32768.0 / 65535.0);
  EXPECT_DOUBLE_EQ(img.at(0, 0).b, 0.0);
}

TEST(Decode, GrayscaleIsReplicated) {
  RasterImage src(1, 1, Rgb{128 / 255.0, 0, 0});
  const RasterImage png = decode_image(encode_png(src, PngColor::kGray));
  EXPECT_EQ(png.at(0, 0), (Rgb{128 / 255.0, 128 / 255.0, 128 / 255.0}));

  std::string pgm = "P5\n1 1\n255\n";
  pgm += '\x80';
  EXPECT_EQ(decode_image(bytes(pgm)).at(0, 0), png.at(0, 0));
}

TEST(Decode, TruncatedStreamReportsOffset) {
  std::string s = "P6\n2 2\n255\n";
  s += std::string(5, '\x10');
  try {
    decode_image(bytes(s));
    FAIL() << "expected DecodeError";
  } catch (const DecodeError& e) {
    EXPECT_EQ(e.offset(), s.size());
  }
  const std::vector<std::uint8_t> png = encode_png(RasterImage(4, 4, Rgb{0.5, 0.5, 0.5}));
  EXPECT_THROW(decode_image(std::span(png).first(png.size() / 2)), DecodeError);
}

TEST(Decode, RejectsUnsupportedFormats) {
  EXPECT_THROW(decode_image(bytes("\xff\xd8\xff\xe0 jpeg")), UnsupportedFormatError);
  EXPECT_THROW(decode_image(bytes("GIF89a")), UnsupportedFormatError);
  EXPECT_THROW(decode_image(bytes("P3\n1 1\n255\n0 0 0\n")), UnsupportedFormatError);
}

TEST(Decode, LosslessRoundTripIsExact) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> code(0, 255);
  RasterImage img(17, 9);
  for (Rgb& p : img.pixels) p = {code(rng) / 255.0, code(rng) / 255.0, code(rng) / 255.0};
  const RasterImage via_ppm = decode_image(encode_ppm(img));
  const RasterImage via_png = decode_image(encode_png(img));
  EXPECT_EQ(via_ppm, img);
  EXPECT_EQ(via_png, img);
  EXPECT_EQ(encode_ppm(via_png), encode_ppm(img));
}

TEST(Luminance, ReferenceColors) {
  EXPECT_DOUBLE_EQ(luminance({1, 1, 1}), 1.0);
  EXPECT_DOUBLE_EQ(luminance({0, 0, 0}), 0.0);
  const Rgb green{37 / 255.0, 140 / 255.0, 35 / 255.0};
  EXPECT_NEAR(luminance(green), 0.3813, 1e-4);
  EXPECT_NEAR(luminance(green, LumaFormula::kHslLightness), 175.0 / 510.0, 1e-12);
}

TEST(Luminance, MonotonePerChannel) {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(0, 1);
  for (int k = 0; k < 1000; ++k) {
    Rgb c{u(rng), u(rng), u(rng)};
    Rgb d = c;
    double* ch[] = {&d.r, &d.g, &d.b};
    *ch[k % 3] = std::min(1.0, *ch[k % 3] + u(rng) * 0.3);
    for (LumaFormula f : {LumaFormula::kBt601, LumaFormula::kHslLightness}) {
      EXPECT_LE(luminance(c, f), luminance(d, f));
    }
  }
}

TEST(Luminance, FormulaNames) {
  EXPECT_EQ(parse_luma_formula("bt601"), LumaFormula::kBt601);
  EXPECT_EQ(parse_luma_formula("hsl"), LumaFormula::kHslLightness);
  EXPECT_EQ(to_string(LumaFormula::kHslLightness), "hsl");
  EXPECT_THROW(parse_luma_formula("paint"), InvalidArgument);
}

TEST(Luminance, KeepsDimensions) {
  const GrayImage g = to_luminance(RasterImage(3, 2, Rgb{1, 1, 1}));
  EXPECT_EQ(g.width, 3);
  EXPECT_EQ(g.height, 2);
  for (double v : g.luma) EXPECT_DOUBLE_EQ(v, 1.0);
}

TEST(Flip, Examples) {
  GrayImage g(2, 1);
  g.luma = {0.2, 0.8};
  EXPECT_EQ(flip_horizontal(g).luma, (std::vector<double>{0.8, 0.2}));
  GrayImage one(1, 1, 0.5);
  EXPECT_EQ(flip_horizontal(one), one);
}

TEST(Flip, Involution) {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(0, 1);
  std::uniform_int_distribution<int> dim(1, 40);
  for (int k = 0; k < 100; ++k) {
    GrayImage g(dim(rng), dim(rng));
    for (double& v : g.luma) v = u(rng);
    EXPECT_EQ(flip_horizontal(flip_horizontal(g)), g);
  }
}

TEST(Files, MissingFileIsIoError) {
  try {
    read_file("/nonexistent/pendant/file.ppm");
    FAIL();
  } catch (const IoError& e) {
    EXPECT_EQ(e.category(), ErrorCategory::kIo);
  }
}

}  // namespace
}  // namespace pendant
