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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pendant/geometry.h"
#include "pendant/heightfield.h"
#include "pendant/region.h"

namespace pendant {

using Triangle = std::array<std::uint32_t, 3>;

/// Indexed triangle surface. Triangles wind counter-clockwise seen from
/// outside, so the right-hand normal points out of the solid.
struct TriangleMesh {
  std::vector<Vec3> vertices;
  std::vector<Triangle> triangles;

  bool empty() const { return triangles.empty(); }
  Box3 bounds() const;
};

/// Ordered collection of closed shells. Shells may overlap; nothing is
/// merged.
struct Assembly {
  std::string name;
  std::vector<TriangleMesh> shells;

  std::size_t triangle_count() const;
  Box3 bounds() const;
};

struct SolidOptions {
  /// Run one 3x3 averaging pass over the heights before meshing.
  bool smooth = false;
};

/// Closed stepped solid over a height field.
///
/// Cells are the quads between adjacent grid nodes. A cell is kept when all
/// four corner nodes are inside `clip` and its height, the maximum of its
/// corner heights, is above `z_base`. Each kept cell becomes a column from
/// `z_base` up to its height; vertical walls close every step and the clip
/// boundary. Throws EmptySolidError when no cell is kept.
TriangleMesh heightfield_to_solid(const HeightField& hf, const Region2D& clip,
                                  double z_base, SolidOptions options = {});

/// Prism between z0 and z1 over the region, polygonized by marching squares
/// on a resolution x resolution sample grid spanning `window` (or the
/// region's bounding box when no window is given).
TriangleMesh extrude_region(const Region2D& region, double z0, double z1,
                            int resolution,
                            std::optional<Box2> window = std::nullopt);

/// Validates every shell and wraps them in order. Throws ValidationError
/// naming the first shell that is not watertight.
Assembly assemble(std::vector<TriangleMesh> shells, std::string name = "pendant");

struct ScaledAssembly {
  Assembly assembly;
  double scale;
};

/// Uniform scale about the origin so the x extent equals `target`.
ScaledAssembly scale_to_diameter(const Assembly& a, double target);

TriangleMesh scaled(const TriangleMesh& m, double s);
TriangleMesh translated(const TriangleMesh& m, Vec3 offset);
/// Same surface with every triangle wound the other way.
TriangleMesh reversed(const TriangleMesh& m);

/// Axis-aligned box with 8 vertices and 12 outward triangles.
TriangleMesh make_box(Vec3 min, Vec3 max);

}  // namespace pendant
