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
#include <utility>
#include <vector>

#include "pendant/geometry.h"
#include "pendant/mesh.h"

namespace pendant::detail {

/// Intersects vertical lines with a closed mesh. Triangles are bucketed by
/// their xy footprint; points on shared edges or vertices are assigned to
/// exactly one triangle with a top-left rule so parity stays consistent.
class ColumnCaster {
 public:
  ColumnCaster(const TriangleMesh& mesh, double bucket_size);

  /// Heights where the vertical line through p crosses the surface, sorted.
  void crossings(Vec2 p, std::vector<double>& out) const;

  /// Inside intervals along the line through p, from crossing parity.
  void intervals(Vec2 p, std::vector<std::pair<double, double>>& out) const;

 private:
  struct Projected {
    Vec2 a, b, c;     // counter-clockwise in the xy plane
    double za, zb, zc;
  };

  const TriangleMesh& mesh_;
  std::vector<Projected> tris_;
  Box2 box_{};
  double cell_ = 1;
  int nx_ = 0, ny_ = 0;
  std::vector<std::vector<std::uint32_t>> buckets_;
  mutable std::vector<double> scratch_;
};

/// Merges overlapping intervals in place (sorted by start on return).
void merge_intervals(std::vector<std::pair<double, double>>& v);

}  // namespace pendant::detail
