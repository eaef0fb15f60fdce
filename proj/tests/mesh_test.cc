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
#include <random>

#include "pendant/error.h"
#include "pendant/mesh.h"
#include "pendant/metrics.h"

namespace pendant {
namespace {

const Region2D kEverything = Region2D::disk(0, 0, 1e9);

void expect_solid(const TriangleMesh& m) {
  const MeshReport r = validate(m);
  EXPECT_TRUE(r.edge_manifold()) << r.boundary_edges.size() << " boundary, " << r.non_manifold_edges
                                 << " non-manifold";
  EXPECT_TRUE(r.oriented()) << r.misoriented_edges << " misoriented";
  EXPECT_GT(r.signed_volume, 0);
  EXPECT_EQ(r.degenerate_count, 0u);
}

// Sum of cell area times height above the base over included cells.
double stepped_volume(const HeightField& hf, const Region2D& clip, double z_base) {
  double v = 0;
  for (int r = 0; r + 1 < hf.rows; ++r) {
    for (int c = 0; c + 1 < hf.cols; ++c) {
      double h = 0;
      bool inside = true;
      for (auto [dr, dc] : {std::pair{0, 0}, {0, 1}, {1, 0}, {1, 1}}) {
        h = std::max(h, hf.at(r + dr, c + dc));
        inside = inside && clip.contains(hf.node_position(r + dr, c + dc));
      }
      if (!inside || !(h > z_base)) continue;
      const Vec2 a = hf.node_position(r, c), b = hf.node_position(r + 1, c + 1);
      v += (b.x - a.x) * (b.y - a.y) * (h - z_base);
    }
  }
  return v;
}

TEST(HeightfieldSolid, FlatGridIsABox) {
  const HeightField hf = attach_range(HeightField(3, 3, 5), {0, 2}, {0, 2});
  const TriangleMesh m = heightfield_to_solid(hf, kEverything, 0);
  expect_solid(m);
  EXPECT_NEAR(shell_volume(m), 20, 1e-12);
  EXPECT_EQ(validate(m).euler_characteristic, 2);
  const Box3 b = m.bounds();
  EXPECT_EQ(b.min.x, 0);
  EXPECT_EQ(b.max.y, 2);
  EXPECT_EQ(b.max.z, 5);
}

TEST(HeightfieldSolid, AllZeroIsEmpty) {
  const HeightField hf = attach_range(HeightField(4, 4, 0), {0, 1}, {0, 1});
  EXPECT_THROW(heightfield_to_solid(hf, kEverything, 0), EmptySolidError);
  const HeightField high = attach_range(HeightField(4, 4, 3), {0, 1}, {0, 1});
  EXPECT_THROW(heightfield_to_solid(high, Region2D::disk(50, 50, 1), 0), EmptySolidError);
  EXPECT_THROW(heightfield_to_solid(HeightField(4, 4, 3), kEverything, 0), InvalidArgument);
}

TEST(HeightfieldSolid, CheckerboardContactsStayManifold) {
  // Cells that touch only along a vertical edge or at a corner.
  HeightField hf(5, 5, 0);
  hf.at(0, 0) = 3;
  hf.at(2, 2) = 3;
  hf.at(1, 3) = 5;
  hf.at(3, 1) = 5;
  hf.at(4, 4) = 4;
  const HeightField ranged = attach_range(hf, {0, 4}, {0, 4});
  const TriangleMesh m = heightfield_to_solid(ranged, kEverything, 0);
  expect_solid(m);
  EXPECT_NEAR(shell_volume(m), stepped_volume(ranged, kEverything, 0), 1e-9);
}

TEST(HeightfieldSolid, LettersHeights) {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> u(0, 1);
  GrayImage g(60, 20);
  for (double& v : g.luma) v = u(rng);
  const HeightField hf =
      attach_range(pad(quantize(g, base_step_function()), 1, 0), {-56, 56}, {-20, 20});
  const TriangleMesh m = heightfield_to_solid(hf, Region2D::disk(0, -10, 70), 0);
  expect_solid(m);
  for (const Vec3& v : m.vertices) {
    EXPECT_TRUE(v.z == 0 || v.z == 3 || v.z == 5) << v.z;
  }
}

TEST(HeightfieldSolid, VolumeMatchesCellSum) {
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> dim(2, 30), level(0, 4);
  for (int k = 0; k < 40; ++k) {
    HeightField hf(dim(rng), dim(rng));
    for (double& v : hf.heights) v = level(rng) * 2.5;
    hf = attach_range(hf, {-10, 12}, {-7, 9});
    const Region2D clip = Region2D::disk(1, 1, 11);
    const double z_base = k % 2 ? 0.0 : 2.5;
    double expected = stepped_volume(hf, clip, z_base);
    if (expected == 0) {
      EXPECT_THROW(heightfield_to_solid(hf, clip, z_base), EmptySolidError);
      continue;
    }
    const TriangleMesh m = heightfield_to_solid(hf, clip, z_base);
    expect_solid(m);
    EXPECT_NEAR(shell_volume(m), expected, 1e-6 * expected);
  }
}

TEST(HeightfieldSolid, SmoothingStillClosed) {
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> level(0, 3);
  HeightField hf(20, 20);
  for (double& v : hf.heights) v = level(rng) * 3.0;
  hf = attach_range(hf, {0, 19}, {0, 19});
  expect_solid(heightfield_to_solid(hf, kEverything, 0, {.smooth = true}));
}

TEST(HeightfieldSolid, Deterministic) {
  std::mt19937 rng(10);
  std::uniform_int_distribution<int> level(0, 3);
  HeightField hf(16, 12);
  for (double& v : hf.heights) v = level(rng);
  hf = attach_range(hf, {0, 1}, {0, 1});
  const TriangleMesh a = heightfield_to_solid(hf, kEverything, 0);
  const TriangleMesh b = heightfield_to_solid(hf, kEverything, 0);
  EXPECT_EQ(a.triangles, b.triangles);
  ASSERT_EQ(a.vertices.size(), b.vertices.size());
  for (std::size_t k = 0; k < a.vertices.size(); ++k) {
    EXPECT_EQ(a.vertices[k].x, b.vertices[k].x);
    EXPECT_EQ(a.vertices[k].z, b.vertices[k].z);
  }
}

TEST(Extrude, DiskPrism) {
  const TriangleMesh m = extrude_region(Region2D::disk(0, 0, 70), 5, 8, 400);
  expect_solid(m);
  const double exact = std::numbers::pi * 4900 * 3;
  EXPECT_NEAR(shell_volume(m), exact, 0.01 * exact);
  EXPECT_EQ(validate(m).euler_characteristic, 2);
  EXPECT_EQ(m.bounds().min.z, 5);
  EXPECT_EQ(m.bounds().max.z, 8);
}

TEST(Extrude, AnnulusPrism) {
  const TriangleMesh m = extrude_region(pendant_outline(), 5, 8, 400);
  expect_solid(m);
  const double exact = std::numbers::pi * (4900 - 49) * 3;
  EXPECT_NEAR(shell_volume(m), exact, 0.01 * exact);
  EXPECT_EQ(validate(m).euler_characteristic, 0);
}

TEST(Extrude, SeveralIslandsAndHoles) {
  const Region2D r = region_or(
      region_and(Region2D::rect(0, 10, 0, 10),
                 region_not(region_or(Region2D::closed_disk(3, 3, 1.5), Region2D::closed_disk(7, 7, 1.5)))),
      Region2D::disk(20, 5, 3));
  const TriangleMesh m = extrude_region(r, 0, 1, 200, Box2{-1, 24, -1, 11});
  expect_solid(m);
  const double exact = 100 - 2 * std::numbers::pi * 2.25 + std::numbers::pi * 9;
  EXPECT_NEAR(shell_volume(m), exact, 0.01 * exact);
  // A plate with two holes (-2) plus a disk prism (2).
  EXPECT_EQ(validate(m).euler_characteristic, 0);
}

TEST(Extrude, ConvergesOnDisk) {
  const double exact = std::numbers::pi * 4900 * 3;
  double previous = INFINITY;
  for (int res : {100, 200, 400}) {
    const double err = std::abs(shell_volume(extrude_region(Region2D::disk(0, 0, 70), 5, 8, res)) - exact);
    EXPECT_LT(err, previous) << res;
    previous = err;
  }
}

TEST(Extrude, Errors) {
  EXPECT_THROW(extrude_region(Region2D::disk(0, 0, 1), 1, 1, 50), InvalidArgument);
  EXPECT_THROW(extrude_region(Region2D::disk(0, 0, 1), 0, 1, 4), InvalidArgument);
  EXPECT_THROW(extrude_region(Region2D::half_plane(1, 0, 0), 0, 1, 50), InvalidArgument);
  EXPECT_THROW(extrude_region(Region2D::disk(0, 0, 1), 0, 1, 50, Box2{5, 6, 5, 6}), EmptySolidError);
  EXPECT_NO_THROW(extrude_region(Region2D::half_plane(1, 0, 0), 0, 1, 50, Box2{-1, 1, -1, 1}));
}

TEST(Assemble, KeepsShellsInOrder) {
  const TriangleMesh a = make_box({0, 0, 0}, {1, 1, 1});
  const TriangleMesh b = make_box({0.5, 0, 0}, {1.5, 1, 1});
  const Assembly asm2 = assemble({a, b});
  EXPECT_EQ(asm2.shells.size(), 2u);
  EXPECT_EQ(asm2.triangle_count(), 24u);
  EXPECT_EQ(asm2.shells[1].vertices[0].x, 0.5);
  EXPECT_EQ(assemble({}).triangle_count(), 0u);
}

TEST(Assemble, NamesBrokenShell) {
  TriangleMesh open = make_box({0, 0, 0}, {1, 1, 1});
  open.triangles.pop_back();
  try {
    assemble({make_box({0, 0, 0}, {1, 1, 1}), open});
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("shell 1"), std::string::npos) << e.what();
  }
}

TEST(Scale, ToDiameter) {
  const Assembly cube = assemble({make_box({0, 0, 0}, {1, 1, 1})});
  const ScaledAssembly s = scale_to_diameter(cube, 25);
  EXPECT_DOUBLE_EQ(s.scale, 25);
  EXPECT_EQ(s.assembly.bounds().max.z, 25);
  EXPECT_NEAR(shell_volume(s.assembly.shells[0]), 25.0 * 25 * 25, 1e-9 * 25 * 25 * 25);

  const Assembly wide = assemble({make_box({-70, -80, 0}, {70, 60, 8})});
  const ScaledAssembly p = scale_to_diameter(wide, 50);
  EXPECT_NEAR(p.scale, 5.0 / 14.0, 1e-15);
  const Box3 b = p.assembly.bounds();
  EXPECT_NEAR(b.max.x - b.min.x, 50, 1e-12);

  const ScaledAssembly same = scale_to_diameter(cube, 1);
  EXPECT_EQ(same.scale, 1);
  EXPECT_EQ(same.assembly.shells[0].vertices[6].y, cube.shells[0].vertices[6].y);
  EXPECT_THROW(scale_to_diameter(Assembly{}, 50), InvalidArgument);
  EXPECT_THROW(scale_to_diameter(cube, 0), InvalidArgument);
}

TEST(Transforms, ReversedNegatesVolume) {
  const TriangleMesh box = make_box({0, 0, 0}, {2, 3, 4});
  EXPECT_NEAR(shell_volume(reversed(box)), -24, 1e-12);
  EXPECT_NEAR(shell_volume(translated(box, {10, -5, 3})), 24, 1e-9);
  EXPECT_NEAR(shell_volume(scaled(box, 0.5)), 3, 1e-12);
}

}  // namespace
}  // namespace pendant
