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

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "pendant/mesh.h"

namespace pendant {

/// Signed volume by the divergence theorem. Positive for outward winding.
double shell_volume(const TriangleMesh& m);

/// Topology and orientation summary of a mesh.
struct MeshReport {
  std::size_t vertex_count = 0;  // vertices referenced by some triangle
  std::size_t edge_count = 0;
  std::size_t triangle_count = 0;
  std::size_t degenerate_count = 0;  // area below 1e-9
  /// Undirected edges used by exactly one triangle.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> boundary_edges;
  /// Undirected edges used by more than two triangles.
  std::size_t non_manifold_edges = 0;
  /// Edges shared by two triangles that traverse them in the same direction.
  std::size_t misoriented_edges = 0;
  long long euler_characteristic = 0;
  double signed_volume = 0;

  bool edge_manifold() const { return boundary_edges.empty() && non_manifold_edges == 0; }
  bool oriented() const { return misoriented_edges == 0; }
  bool watertight() const { return edge_manifold() && oriented(); }
  /// Watertight, consistently oriented and enclosing positive volume.
  bool valid_solid() const { return watertight() && signed_volume > 0; }
};

MeshReport validate(const TriangleMesh& m);

/// Union volume of all shells: voxel centers inside at least one shell
/// (ray parity per shell) times voxel^3. The error is on the order of
/// surface area x voxel.
double union_volume(const Assembly& a, double voxel);

/// Cumulative printed-volume fraction as a function of height.
struct VolumeProfile {
  std::vector<double> z_samples;
  std::vector<double> cumulative_fraction;
  double total_volume = 0;
};

/// Integrates the union of all shells slab by slab along voxel columns.
/// Samples are n_slices + 1 evenly spaced heights from the bottom to the top
/// of the assembly. `voxel` <= 0 picks the largest xy extent / 200.
VolumeProfile volume_profile(const Assembly& a, int n_slices, double voxel = 0);

/// Fraction of the total volume printed below each break height, by linear
/// interpolation in the profile.
std::vector<double> filament_breaks(const VolumeProfile& p, const std::vector<double>& z_breaks);

}  // namespace pendant
