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
#include "pendant/raster.h"

#include <png.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>

#include "pendant/error.h"

namespace pendant {

RasterImage::RasterImage(int w, int h, Rgb fill) : width(w), height(h) {
  if (w < 1 || h < 1) throw InvalidArgument("image dimensions must be >= 1");
  pixels.assign(static_cast<std::size_t>(w) * h, fill);
}

GrayImage::GrayImage(int w, int h, double fill) : width(w), height(h) {
  if (w < 1 || h < 1) throw InvalidArgument("image dimensions must be >= 1");
  luma.assign(static_cast<std::size_t>(w) * h, fill);
}

namespace {

constexpr std::uint8_t kPngMagic[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};

class PnmReader {
 public:
  explicit PnmReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  // Header integers are separated by whitespace; '#' starts a comment that
  // runs to end of line.
  unsigned long header_int(const char* field) {
    skip_space_and_comments();
    std::size_t start = pos_;
    unsigned long value = 0;
    while (pos_ < bytes_.size() && bytes_[pos_] >= '0' && bytes_[pos_] <= '9') {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > 0xffffffUL) throw DecodeError(std::string("PNM ") + field + " too large", start);
      ++pos_;
    }
    if (pos_ == start) {
      throw DecodeError(std::string("PNM header: expected ") + field, pos_);
    }
    return value;
  }

  void single_whitespace() {
    if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) {
      throw DecodeError("PNM header: missing whitespace before raster", pos_);
    }
    ++pos_;
  }

  std::size_t pos() const { return pos_; }
  void advance(std::size_t n) { pos_ += n; }

 private:
  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      if (std::isspace(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 2;
};

RasterImage decode_pnm(std::span<const std::uint8_t> bytes) {
  const bool color = bytes[1] == '6';
  PnmReader reader(bytes);
  const auto width = reader.header_int("width");
  const auto height = reader.header_int("height");
  const auto maxval = reader.header_int("maxval");
  if (width < 1 || height < 1) throw DecodeError("PNM has zero dimension", reader.pos());
  if (maxval < 1 || maxval > 65535) throw DecodeError("PNM maxval out of range", reader.pos());
  reader.single_whitespace();

  const std::size_t sample_bytes = maxval > 255 ? 2 : 1;
  const std::size_t channels = color ? 3 : 1;
  const std::size_t need = width * height * channels * sample_bytes;
  const std::size_t have = bytes.size() - reader.pos();
  if (have < need) {
    throw DecodeError("PNM raster truncated: need " + std::to_string(need) +
                          " bytes, have " + std::to_string(have),
                      bytes.size());
  }

  RasterImage img(static_cast<int>(width), static_cast<int>(height));
  const std::uint8_t* p = bytes.data() + reader.pos();
  const double denom = static_cast<double>(maxval);
  auto sample = [&](std::size_t offset) -> double {
    unsigned v = sample_bytes == 2 ? (p[offset] << 8) | p[offset + 1] : p[offset];
    if (v > maxval) {
      throw DecodeError("PNM sample exceeds maxval", reader.pos() + offset);
    }
    return v / denom;
  };
  for (std::size_t i = 0; i < img.pixels.size(); ++i) {
    const std::size_t base = i * channels * sample_bytes;
    if (color) {
      img.pixels[i] = {sample(base), sample(base + sample_bytes),
                       sample(base + 2 * sample_bytes)};
    } else {
      const double v = sample(base);
      img.pixels[i] = {v, v, v};
    }
  }
  return img;
}

RasterImage decode_png(std::span<const std::uint8_t> bytes) {
  png_image image;
  std::memset(&image, 0, sizeof image);
  image.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_memory(&image, bytes.data(), bytes.size())) {
    throw DecodeError(std::string("PNG: ") + image.message);
  }
  // 16-bit sources are read as 16-bit linear; everything else stays in its
  // 8-bit encoding so gray replication is exact.
  const bool wide = (image.format & PNG_FORMAT_FLAG_LINEAR) != 0;
  image.format = wide ? PNG_FORMAT_LINEAR_RGB : PNG_FORMAT_RGB;
  const std::size_t count = PNG_IMAGE_SIZE(image);
  const int width = static_cast<int>(image.width);
  const int height = static_cast<int>(image.height);
  RasterImage img(width, height);
  if (wide) {
    std::vector<png_uint_16> buffer(count / 2);
    if (!png_image_finish_read(&image, nullptr, buffer.data(), 0, nullptr)) {
      throw DecodeError(std::string("PNG: ") + image.message);
    }
    for (std::size_t i = 0; i < img.pixels.size(); ++i) {
      img.pixels[i] = {buffer[3 * i] / 65535.0, buffer[3 * i + 1] / 65535.0,
                       buffer[3 * i + 2] / 65535.0};
    }
  } else {
    std::vector<png_byte> buffer(count);
    if (!png_image_finish_read(&image, nullptr, buffer.data(), 0, nullptr)) {
      throw DecodeError(std::string("PNG: ") + image.message);
    }
    for (std::size_t i = 0; i < img.pixels.size(); ++i) {
      img.pixels[i] = {buffer[3 * i] / 255.0, buffer[3 * i + 1] / 255.0,
                       buffer[3 * i + 2] / 255.0};
    }
  }
  return img;
}

std::uint8_t to_byte(double v) {
  return static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 1.0) * 255.0));
}

}  // namespace

ImageFormat detect_format(std::span<const std::uint8_t> bytes) {
  if (bytes.size() >= 8 && std::equal(std::begin(kPngMagic), std::end(kPngMagic), bytes.begin())) {
    return ImageFormat::kPng;
  }
  if (bytes.size() >= 2 && bytes[0] == 'P' && (bytes[1] == '5' || bytes[1] == '6')) {
    return ImageFormat::kPpm;
  }
  if (bytes.size() >= 3 && bytes[0] == 0xff && bytes[1] == 0xd8 && bytes[2] == 0xff) {
    throw UnsupportedFormatError("JPEG input is not supported; convert to PNG or PPM");
  }
  if (bytes.size() < 2) throw DecodeError("image stream too short", bytes.size());
  throw UnsupportedFormatError("unrecognized image format");
}

RasterImage decode_image(std::span<const std::uint8_t> bytes) {
  switch (detect_format(bytes)) {
    case ImageFormat::kPng:
      return decode_png(bytes);
    case ImageFormat::kPpm:
      return decode_pnm(bytes);
  }
  throw UnsupportedFormatError("unrecognized image format");
}

std::vector<std::uint8_t> encode_ppm(const RasterImage& img) {
  const std::string header = "P6\n" + std::to_string(img.width) + " " +
                             std::to_string(img.height) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.reserve(header.size() + img.pixels.size() * 3);
  for (const Rgb& c : img.pixels) {
    out.push_back(to_byte(c.r));
    out.push_back(to_byte(c.g));
    out.push_back(to_byte(c.b));
  }
  return out;
}

std::vector<std::uint8_t> encode_png(const RasterImage& img, PngColor color) {
  png_image image;
  std::memset(&image, 0, sizeof image);
  image.version = PNG_IMAGE_VERSION;
  image.width = static_cast<png_uint_32>(img.width);
  image.height = static_cast<png_uint_32>(img.height);
  const bool gray = color == PngColor::kGray;
  image.format = gray ? PNG_FORMAT_GRAY : PNG_FORMAT_RGB;

  std::vector<png_byte> raw;
  raw.reserve(img.pixels.size() * (gray ? 1 : 3));
  for (const Rgb& c : img.pixels) {
    raw.push_back(to_byte(c.r));
    if (!gray) {
      raw.push_back(to_byte(c.g));
      raw.push_back(to_byte(c.b));
    }
  }
  png_alloc_size_t size = 0;
  if (!png_image_write_to_memory(&image, nullptr, &size, 0, raw.data(), 0, nullptr)) {
    throw Error(std::string("PNG encode: ") + image.message);
  }
  std::vector<std::uint8_t> out(size);
  if (!png_image_write_to_memory(&image, out.data(), &size, 0, raw.data(), 0, nullptr)) {
    throw Error(std::string("PNG encode: ") + image.message);
  }
  out.resize(size);
  return out;
}

LumaFormula parse_luma_formula(std::string_view name) {
  if (name == "bt601") return LumaFormula::kBt601;
  if (name == "hsl") return LumaFormula::kHslLightness;
  throw InvalidArgument("unknown luma formula '" + std::string(name) +
                        "' (expected bt601 or hsl)");
}

std::string_view to_string(LumaFormula formula) {
  return formula == LumaFormula::kBt601 ? "bt601" : "hsl";
}

double luminance(Rgb c, LumaFormula formula) {
  double v = 0;
  switch (formula) {
    case LumaFormula::kBt601:
      v = 0.299 * c.r + 0.587 * c.g + 0.114 * c.b;
      break;
    case LumaFormula::kHslLightness:
      v = 0.5 * (std::max({c.r, c.g, c.b}) + std::min({c.r, c.g, c.b}));
      break;
  }
  // The weights sum to 1 only up to rounding.
  return std::clamp(v, 0.0, 1.0);
}

GrayImage to_luminance(const RasterImage& img, LumaFormula formula) {
  GrayImage out(img.width, img.height);
  std::transform(img.pixels.begin(), img.pixels.end(), out.luma.begin(),
                 [formula](const Rgb& c) { return luminance(c, formula); });
  return out;
}

GrayImage flip_horizontal(const GrayImage& img) {
  GrayImage out = img;
  for (int row = 0; row < img.height; ++row) {
    auto first = out.luma.begin() + static_cast<std::ptrdiff_t>(img.index(row, 0));
    std::reverse(first, first + img.width);
  }
  return out;
}

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace pendant
