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

#include <cmath>
#include <numbers>

#include "contour.h"
#include "triangulate.h"

namespace pendant::detail {
namespace {

double area(const ContourSet& c, const std::vector<std::uint32_t>& loop) {
  return signed_area(c.points, loop);
}

TEST(Contour, DiskIsOneCounterClockwiseLoop) {
  const ContourSet c = extract_contours(Region2D::disk(0, 0, 10), {-12, 12, -12, 12}, 100);
  ASSERT_EQ(c.loops.size(), 1u);
  const double a = area(c, c.loops[0]);
  EXPECT_GT(a, 0);
  EXPECT_NEAR(a, std::numbers::pi * 100, 0.01 * std::numbers::pi * 100);
  for (std::uint32_t i : c.loops[0]) {
    EXPECT_NEAR(std::hypot(c.points[i].x, c.points[i].y), 10, 1e-9);
  }
}

TEST(Contour, HoleRunsClockwise) {
  const ContourSet c = extract_contours(pendant_outline(), {-80, 80, -80, 80}, 200);
  ASSERT_EQ(c.loops.size(), 2u);
  int outer = 0, holes = 0;
  for (const auto& loop : c.loops) (area(c, loop) > 0 ? outer : holes)++;
  EXPECT_EQ(outer, 1);
  EXPECT_EQ(holes, 1);
}

TEST(Contour, WindowClipsRegion) {
  // A half-plane is unbounded; the window closes it into a square.
  const ContourSet c = extract_contours(Region2D::half_plane(1, 0, 0), {-1, 1, -1, 1}, 20);
  ASSERT_EQ(c.loops.size(), 1u);
  EXPECT_NEAR(area(c, c.loops[0]), 2.0, 1e-9);
}

TEST(Contour, EmptyRegion) {
  const ContourSet c = extract_contours(Region2D::disk(100, 100, 1), {-1, 1, -1, 1}, 20);
  EXPECT_TRUE(c.loops.empty());
}

TEST(Triangulate, SquareWithHole) {
  const std::vector<Vec2> pts = {{0, 0}, {4, 0}, {4, 4}, {0, 4}, {1, 1}, {1, 3}, {3, 3}, {3, 1}};
  const std::vector<std::vector<std::uint32_t>> rings = {{0, 1, 2, 3}, {4, 5, 6, 7}};
  const auto tris = triangulate_polygon(pts, rings);
  EXPECT_EQ(tris.size(), 8u);
  double total = 0;
  for (const auto& t : tris) {
    const double a = cross(pts[t[1]] - pts[t[0]], pts[t[2]] - pts[t[0]]) / 2;
    EXPECT_GT(a, 0);
    total += a;
  }
  EXPECT_DOUBLE_EQ(total, 12.0);
}

TEST(Triangulate, ClockwiseInputIsNormalized) {
  const std::vector<Vec2> pts = {{0, 0}, {0, 2}, {3, 2}, {3, 0}};
  const std::vector<std::vector<std::uint32_t>> rings = {{0, 1, 2, 3}};
  const auto tris = triangulate_polygon(pts, rings);
  ASSERT_EQ(tris.size(), 2u);
  for (const auto& t : tris) EXPECT_GT(cross(pts[t[1]] - pts[t[0]], pts[t[2]] - pts[t[0]]), 0);
}

}  // namespace
}  // namespace pendant::detail
