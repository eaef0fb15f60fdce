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

#include <cstring>
#include <random>
#include <sstream>

#include "pendant/error.h"
#include "pendant/metrics.h"
#include "pendant/stl.h"

namespace pendant {
namespace {

Assembly cube() { return assemble({make_box({0, 0, 0}, {1, 1, 1})}); }

// A closed mesh with awkward coordinates: a randomly jittered, scaled box.
TriangleMesh random_mesh(std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-100, 100), j(-0.3, 0.3);
  const Vec3 lo{u(rng), u(rng), u(rng)};
  TriangleMesh m = make_box(lo, lo + Vec3{1 + std::abs(u(rng)), 1 + std::abs(u(rng)), 1 + std::abs(u(rng))});
  for (Vec3& v : m.vertices) v = v + 1e-3 * Vec3{j(rng), j(rng), j(rng)};
  return m;
}

TEST(StlBinary, CubeSize) {
  const std::vector<std::uint8_t> bytes = write_binary(cube());
  EXPECT_EQ(bytes.size(), 684u);
  std::uint32_t count = 0;
  std::memcpy(&count, bytes.data() + 80, 4);
  EXPECT_EQ(count, 12u);
  EXPECT_EQ(std::string(reinterpret_cast<const char*>(bytes.data()), kStlProductTag.size()),
            kStlProductTag);
  EXPECT_EQ(bytes[kStlProductTag.size()], 0);
}

TEST(StlBinary, EmptyAssembly) {
  const std::vector<std::uint8_t> bytes = write_binary(Assembly{});
  ASSERT_EQ(bytes.size(), 84u);
  EXPECT_EQ(bytes[80] | bytes[81] | bytes[82] | bytes[83], 0);
}

TEST(StlBinary, StreamingMatchesBuffer) {
  std::mt19937 rng(1);
  const Assembly a = assemble({random_mesh(rng), random_mesh(rng)});
  std::ostringstream out;
  write_binary(a, out);
  const std::string s = out.str();
  const std::vector<std::uint8_t> buffer = write_binary(a);
  EXPECT_EQ(std::vector<std::uint8_t>(s.begin(), s.end()), buffer);
}

TEST(StlBinary, NormalsFollowWinding) {
  std::mt19937 rng(2);
  const StlDocument doc = to_document(assemble({random_mesh(rng)}));
  for (const StlFacet& f : doc.facets) {
    const Vec3 a{f.vertices[0], f.vertices[1], f.vertices[2]};
    const Vec3 b{f.vertices[3], f.vertices[4], f.vertices[5]};
    const Vec3 c{f.vertices[6], f.vertices[7], f.vertices[8]};
    const Vec3 n{f.normal[0], f.normal[1], f.normal[2]};
    EXPECT_GE(dot(n, cross(b - a, c - a)), 0);
    EXPECT_NEAR(length(n), 1, 1e-5);
  }
}

TEST(StlBinary, DegenerateFacetHasZeroNormal) {
  TriangleMesh m;
  m.vertices = {{0, 0, 0}, {1, 1, 1}, {2, 2, 2}};
  m.triangles = {{0, 1, 2}};
  const StlDocument doc = to_document(Assembly{"line", {m}});
  EXPECT_EQ(doc.facets[0].normal, (std::array<float, 3>{0, 0, 0}));
}

TEST(StlBinary, RoundTripIsByteIdentical) {
  std::mt19937 rng(3);
  for (int k = 0; k < 20; ++k) {
    const Assembly a = assemble({random_mesh(rng), random_mesh(rng)});
    const std::vector<std::uint8_t> first = write_binary(a);
    const StlDocument doc = read_stl(first);
    EXPECT_EQ(serialize_binary(doc), first);
    const Assembly again{"again", {to_mesh(doc)}};
    EXPECT_EQ(write_binary(again), first);
  }
}

TEST(StlAscii, Grammar) {
  TriangleMesh m;
  m.vertices = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}};
  m.triangles = {{0, 1, 2}};
  const std::string text = write_ascii(Assembly{"tri", {m}});
  std::istringstream in(text);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  ASSERT_EQ(lines.size(), 9u);
  EXPECT_EQ(lines.front(), "solid tri");
  EXPECT_EQ(lines[1], "  facet normal 0 0 1");
  EXPECT_EQ(lines[3], "      vertex 0 0 0");
  EXPECT_EQ(lines.back(), "endsolid tri");
  EXPECT_EQ(write_ascii(Assembly{"empty", {}}), "solid empty\nendsolid empty\n");
}

TEST(StlAscii, RoundTripKeepsFloat32Values) {
  std::mt19937 rng(4);
  const Assembly a = assemble({random_mesh(rng), random_mesh(rng)});
  const StlDocument doc = read_stl(std::string_view(write_ascii(a)));
  const StlDocument ref = to_document(a);
  ASSERT_EQ(doc.facets.size(), ref.facets.size());
  for (std::size_t k = 0; k < doc.facets.size(); ++k) {
    EXPECT_EQ(doc.facets[k].vertices, ref.facets[k].vertices);
    EXPECT_EQ(doc.facets[k].normal, ref.facets[k].normal);
  }
  EXPECT_EQ(serialize_binary(doc).size(), write_binary(a).size());
}

TEST(StlRead, SizeMismatchAndTruncation) {
  std::vector<std::uint8_t> bytes = write_binary(cube());
  bytes.pop_back();
  try {
    read_stl(bytes);
    FAIL();
  } catch (const DecodeError& e) {
    EXPECT_NE(std::string(e.what()).find("683"), std::string::npos) << e.what();
  }
  EXPECT_THROW(read_stl(std::span(bytes).first(40)), DecodeError);
}

TEST(StlRead, MalformedAsciiIsPositioned) {
  const std::string text = "solid x\n  facet normal 0 0 1\n    outer loop\n      vertex 0 0 zero\n";
  try {
    read_stl(std::string_view(text));
    FAIL();
  } catch (const DecodeError& e) {
    EXPECT_EQ(e.offset(), text.find("zero"));
  }
  EXPECT_THROW(read_stl(std::string_view("solid x\n facet normal 0 0 1\n")), DecodeError);
  EXPECT_THROW(read_stl(std::string_view("solid x\n banana\n")), DecodeError);
}

TEST(StlRead, BinaryHeaderStartingWithSolid) {
  std::vector<std::uint8_t> bytes = write_binary(cube());
  std::memcpy(bytes.data(), "solid but binary", 16);
  EXPECT_EQ(read_stl(bytes).facets.size(), 12u);
}

TEST(StlMesh, WeldAndSplit) {
  const Assembly a = assemble({make_box({0, 0, 0}, {1, 1, 1}), make_box({3, 0, 0}, {4, 1, 1})});
  const TriangleMesh welded = to_mesh(to_document(a));
  EXPECT_EQ(welded.vertices.size(), 16u);
  const std::vector<TriangleMesh> parts = split_components(welded);
  ASSERT_EQ(parts.size(), 2u);
  for (const TriangleMesh& p : parts) {
    EXPECT_TRUE(validate(p).valid_solid());
    EXPECT_NEAR(shell_volume(p), 1, 1e-6);
  }
}

}  // namespace
}  // namespace pendant
