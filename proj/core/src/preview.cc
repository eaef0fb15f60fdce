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

#include "pendant/preview.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "pendant/error.h"

namespace pendant {

HeightBandPalette::HeightBandPalette(std::vector<std::pair<double, Rgb>> bands, Rgb fallback)
    : bands_(std::move(bands)), fallback_(fallback) {
  for (std::size_t k = 0; k < bands_.size(); ++k) {
    if (!std::isfinite(bands_[k].first)) throw InvalidArgument("palette band bound must be finite");
    if (k > 0 && !(bands_[k].first > bands_[k - 1].first)) {
      throw InvalidArgument("palette band bounds must be strictly increasing");
    }
  }
}

Rgb HeightBandPalette::operator()(double z) const {
  for (const auto& [upper, color] : bands_) {
    if (z <= upper) return color;
  }
  return fallback_;
}

HeightBandPalette pendant_palette() {
  return HeightBandPalette({{4.0, {0.85, 0.62, 0.125}},
                            {10.0, {0.0, 0.0, 0.0}},
                            {13.0, {0.0, 0.4, 0.0}}},
                           {1.0, 0.5, 0.5});
}

namespace {

void check_size(ImageSize size) {
  if (size.width < 1 || size.height < 1 || size.width > 16384 || size.height > 16384) {
    throw InvalidArgument("image size must be between 1x1 and 16384x16384");
  }
}

struct ScreenPoint {
  double x, y, depth;  // pixel units; larger depth is closer to the viewer
};

// Depth buffer that keeps the largest depth per pixel. Pixel centers on a
// triangle edge count as covered, so the result is independent of the
// order of triangles and of vertices within a triangle.
class DepthBuffer {
 public:
  DepthBuffer(int width, int height)
      : width_(width), height_(height),
        depth_(static_cast<std::size_t>(width) * height, -std::numeric_limits<double>::infinity()) {}

  void draw(ScreenPoint a, ScreenPoint b, ScreenPoint c) {
    const double area = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    if (area == 0 || !std::isfinite(area)) return;
    const int x0 = std::max(0, static_cast<int>(std::ceil(std::min({a.x, b.x, c.x}) - 0.5)));
    const int x1 = std::min(width_ - 1, static_cast<int>(std::floor(std::max({a.x, b.x, c.x}) - 0.5)));
    const int y0 = std::max(0, static_cast<int>(std::ceil(std::min({a.y, b.y, c.y}) - 0.5)));
    const int y1 = std::min(height_ - 1, static_cast<int>(std::floor(std::max({a.y, b.y, c.y}) - 0.5)));
    for (int py = y0; py <= y1; ++py) {
      for (int px = x0; px <= x1; ++px) {
        const double x = px + 0.5, y = py + 0.5;
        const double wa = ((b.x - x) * (c.y - y) - (b.y - y) * (c.x - x)) / area;
        const double wb = ((c.x - x) * (a.y - y) - (c.y - y) * (a.x - x)) / area;
        const double wc = ((a.x - x) * (b.y - y) - (a.y - y) * (b.x - x)) / area;
        if (wa < 0 || wb < 0 || wc < 0) continue;
        const double d = (wa * a.depth + wb * b.depth + wc * c.depth) / (wa + wb + wc);
        double& slot = depth_[static_cast<std::size_t>(py) * width_ + px];
        slot = std::max(slot, d);
      }
    }
  }

  template <class Project>
  void draw(const Assembly& a, Project&& project) {
    std::vector<ScreenPoint> screen;
    for (const TriangleMesh& m : a.shells) {
      screen.resize(m.vertices.size());
      std::transform(m.vertices.begin(), m.vertices.end(), screen.begin(), project);
      for (const Triangle& t : m.triangles) draw(screen[t[0]], screen[t[1]], screen[t[2]]);
    }
  }

  bool hit(int row, int col) const { return std::isfinite(depth(row, col)); }
  double depth(int row, int col) const { return depth_[static_cast<std::size_t>(row) * width_ + col]; }

 private:
  int width_, height_;
  std::vector<double> depth_;
};

void require_geometry(const Assembly& a) {
  if (a.triangle_count() == 0) throw InvalidArgument("cannot render an empty assembly");
}

}  // namespace

RasterImage render_topdown(const Assembly& a, const HeightBandPalette& palette, ImageSize size) {
  require_geometry(a);
  check_size(size);
  const Box3 box = a.bounds();
  const double cx = 0.5 * (box.min.x + box.max.x), cy = 0.5 * (box.min.y + box.max.y);
  const double ex = std::max(box.max.x - box.min.x, 1e-12);
  const double ey = std::max(box.max.y - box.min.y, 1e-12);
  const double scale = 0.96 * std::min(size.width / ex, size.height / ey);
  const double half_w = 0.5 * size.width, half_h = 0.5 * size.height;

  DepthBuffer buffer(size.width, size.height);
  buffer.draw(a, [&](const Vec3& p) {
    return ScreenPoint{half_w + (p.x - cx) * scale, half_h - (p.y - cy) * scale, p.z};
  });
  RasterImage img(size.width, size.height, kBackground);
  for (int r = 0; r < size.height; ++r) {
    for (int c = 0; c < size.width; ++c) {
      if (buffer.hit(r, c)) img.at(r, c) = palette(buffer.depth(r, c));
    }
  }
  return img;
}

RasterImage render_turntable_frame(const Assembly& a, int j, int n_frames, ImageSize size) {
  require_geometry(a);
  check_size(size);
  if (n_frames < 1) throw InvalidArgument("turntable needs at least one frame");
  const int step = ((j % n_frames) + n_frames) % n_frames;
  const double angle = 2 * std::numbers::pi * step / n_frames;
  const double s = std::sin(angle), c = std::cos(angle);

  // Camera at pivot + R_y(angle) (0, 0, 200) looking at the pivot.
  const Vec3 toward_camera{s, 0, c};
  const Vec3 up{0, -1, 0};
  const Vec3 right = cross(Vec3{-s, 0, -c}, up);

  // Same framing for every frame: the bounding sphere about the pivot.
  const Box3 box = a.bounds();
  double radius = 0;
  for (int k = 0; k < 8; ++k) {
    const Vec3 corner{k & 1 ? box.max.x : box.min.x, k & 2 ? box.max.y : box.min.y,
                      k & 4 ? box.max.z : box.min.z};
    radius = std::max(radius, length(corner - kTurntablePivot));
  }
  radius = std::max(radius, 1e-12);
  const double scale = 0.5 * std::min(size.width, size.height) / (1.02 * radius);
  const double half_w = 0.5 * size.width, half_h = 0.5 * size.height;

  DepthBuffer buffer(size.width, size.height);
  buffer.draw(a, [&](const Vec3& p) {
    const Vec3 d = p - kTurntablePivot;
    return ScreenPoint{half_w + dot(d, right) * scale, half_h - dot(d, up) * scale,
                       dot(d, toward_camera)};
  });
  RasterImage img(size.width, size.height, kBackground);
  for (int r = 0; r < size.height; ++r) {
    for (int col = 0; col < size.width; ++col) {
      if (!buffer.hit(r, col)) continue;
      const double t = std::clamp((buffer.depth(r, col) + radius) / (2 * radius), 0.0, 1.0);
      const double shade = 0.25 + 0.75 * t;
      img.at(r, col) = {shade * 0.92, shade * 0.88, shade * 0.80};
    }
  }
  return img;
}

std::vector<RasterImage> render_turntable(const Assembly& a, int n_frames, ImageSize size) {
  if (n_frames < 1) throw InvalidArgument("turntable needs at least one frame");
  std::vector<RasterImage> frames;
  frames.reserve(static_cast<std::size_t>(n_frames));
  for (int j = 0; j < n_frames; ++j) frames.push_back(render_turntable_frame(a, j, n_frames, size));
  return frames;
}

void write_ppm(const RasterImage& img, const std::filesystem::path& path, bool overwrite) {
  if (!overwrite && std::filesystem::exists(path)) {
    throw IoError(path.string() + " already exists (pass --overwrite to replace it)");
  }
  write_file(path.string(), encode_ppm(img));
}

std::vector<std::filesystem::path> write_frames(const std::vector<RasterImage>& frames,
                                                const std::filesystem::path& dir, bool overwrite) {
  int digits = 3;
  for (std::size_t n = frames.size(); n >= 1000; n /= 10) ++digits;
  std::vector<std::filesystem::path> paths;
  for (std::size_t j = 0; j < frames.size(); ++j) {
    char name[32];
    std::snprintf(name, sizeof name, "frame_%0*zu.ppm", digits, j);
    paths.push_back(dir / name);
  }
  if (!overwrite) {
    for (const auto& p : paths) {
      if (std::filesystem::exists(p)) {
        throw IoError(p.string() + " already exists (pass --overwrite to replace frames)");
      }
    }
  }
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  for (std::size_t j = 0; j < frames.size(); ++j) write_file(paths[j].string(), encode_ppm(frames[j]));
  return paths;
}

}  // namespace pendant
