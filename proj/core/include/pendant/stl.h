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
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pendant/mesh.h"

namespace pendant {

struct StlFacet {
  std::array<float, 3> normal{};
  std::array<float, 9> vertices{};  // v0, v1, v2 as x, y, z triples
  std::uint16_t attribute = 0;
};

/// Binary STL is an 80 byte header, a little-endian u32 facet count and 50
/// bytes per facet. For ASCII files `header` holds the solid name.
struct StlDocument {
  std::string header;
  std::vector<StlFacet> facets;
  bool ascii = false;

  std::size_t binary_size() const { return 84 + 50 * facets.size(); }
};

inline constexpr std::string_view kStlProductTag = "pendant relief STL";

/// Facets for all shells in order. Vertices are rounded to float32 first
/// and normals come from the rounded vertices, so the result survives a
/// write/read cycle unchanged. Degenerate facets get a zero normal.
StlDocument to_document(const Assembly& a);

void serialize_binary(const StlDocument& doc, std::ostream& out);
std::vector<std::uint8_t> serialize_binary(const StlDocument& doc);
/// Nine significant digits, which round-trips float32 exactly.
std::string serialize_ascii(const StlDocument& doc);

std::vector<std::uint8_t> write_binary(const Assembly& a);
/// Streams facets without building the whole byte buffer.
void write_binary(const Assembly& a, std::ostream& out);
std::string write_ascii(const Assembly& a);

/// Binary when the size matches the facet count field, otherwise ASCII if the
/// data starts with "solid". Throws DecodeError with a byte offset.
StlDocument read_stl(std::span<const std::uint8_t> bytes);
StlDocument read_stl(std::string_view text);

/// Indexed mesh with exactly coincident vertices merged. Facet order kept.
TriangleMesh to_mesh(const StlDocument& doc);

/// Splits into groups of triangles connected through shared vertices, in
/// order of each group's first triangle.
std::vector<TriangleMesh> split_components(const TriangleMesh& m);

}  // namespace pendant
