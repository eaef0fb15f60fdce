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
#include "pendant/stl.h"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "pendant/error.h"

namespace pendant {

namespace {

void put_u32(std::ostream& out, std::uint32_t v) {
  const char b[4] = {static_cast<char>(v), static_cast<char>(v >> 8), static_cast<char>(v >> 16),
                     static_cast<char>(v >> 24)};
  out.write(b, 4);
}

void put_f32(std::ostream& out, float f) { put_u32(out, std::bit_cast<std::uint32_t>(f)); }

std::uint32_t get_u32(const std::uint8_t* p) {
  return static_cast<std::uint32_t>(p[0]) | static_cast<std::uint32_t>(p[1]) << 8 |
         static_cast<std::uint32_t>(p[2]) << 16 | static_cast<std::uint32_t>(p[3]) << 24;
}

float get_f32(const std::uint8_t* p) { return std::bit_cast<float>(get_u32(p)); }

std::uint32_t checked_count(std::size_t n) {
  if (n > std::numeric_limits<std::uint32_t>::max()) {
    throw InvalidArgument("STL facet count " + std::to_string(n) + " exceeds 32 bits");
  }
  return static_cast<std::uint32_t>(n);
}

// GCC 11 at -O3 has been seen to vectorize the float rounding below away
// and leave a coordinate at full precision. An opaque call keeps it honest.
[[gnu::noinline]] Vec3 round_to_float(const Vec3& v, float* out) {
  out[0] = static_cast<float>(v.x);
  out[1] = static_cast<float>(v.y);
  out[2] = static_cast<float>(v.z);
  return {out[0], out[1], out[2]};
}

StlFacet make_facet(const Vec3& a, const Vec3& b, const Vec3& c) {
  StlFacet f;
  // Normals come from the stored float coordinates so that a reread file
  // reproduces them.
  const Vec3 r[3] = {round_to_float(a, &f.vertices[0]), round_to_float(b, &f.vertices[3]),
                     round_to_float(c, &f.vertices[6])};
  const Vec3 n = cross(r[1] - r[0], r[2] - r[0]);
  const double len = length(n);
  if (len > 0 && std::isfinite(len)) {
    f.normal = {static_cast<float>(n.x / len), static_cast<float>(n.y / len),
                static_cast<float>(n.z / len)};
  }
  return f;
}

std::string binary_header() {
  std::string h(kStlProductTag);
  h.resize(80, '\0');
  return h;
}

void write_facet(std::ostream& out, const StlFacet& f) {
  for (float v : f.normal) put_f32(out, v);
  for (float v : f.vertices) put_f32(out, v);
  const char attr[2] = {static_cast<char>(f.attribute), static_cast<char>(f.attribute >> 8)};
  out.write(attr, 2);
}

void append_g9(std::string& s, float v) {
  char buf[32];
  const int n = std::snprintf(buf, sizeof buf, "%.9g", static_cast<double>(v));
  s.append(buf, static_cast<std::size_t>(n));
}

StlDocument read_binary(std::span<const std::uint8_t> bytes) {
  StlDocument doc;
  const auto* header = reinterpret_cast<const char*>(bytes.data());
  doc.header.assign(header, 80);
  const std::size_t count = get_u32(bytes.data() + 80);
  doc.facets.resize(count);
  const std::uint8_t* p = bytes.data() + 84;
  for (StlFacet& f : doc.facets) {
    for (int k = 0; k < 3; ++k) f.normal[k] = get_f32(p + 4 * k);
    for (int k = 0; k < 9; ++k) f.vertices[k] = get_f32(p + 12 + 4 * k);
    f.attribute = static_cast<std::uint16_t>(p[48] | p[49] << 8);
    p += 50;
  }
  return doc;
}

class AsciiReader {
 public:
  explicit AsciiReader(std::string_view text) : s_(text) {}

  StlDocument parse() {
    StlDocument doc;
    doc.ascii = true;
    expect("solid");
    doc.header = rest_of_line();
    for (;;) {
      const std::size_t at = pos_;
      const std::string_view word = token();
      if (word == "endsolid") break;
      if (word != "facet") fail(at, "expected 'facet' or 'endsolid', got '" + std::string(word) + "'");
      StlFacet f;
      expect("normal");
      for (float& v : f.normal) v = number();
      expect("outer");
      expect("loop");
      for (int k = 0; k < 3; ++k) {
        expect("vertex");
        for (int c = 0; c < 3; ++c) f.vertices[3 * k + c] = number();
      }
      expect("endloop");
      expect("endfacet");
      doc.facets.push_back(f);
    }
    return doc;
  }

 private:
  [[noreturn]] void fail(std::size_t at, const std::string& what) const {
    throw DecodeError("ASCII STL: " + what, at);
  }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string_view token() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail(start, "unexpected end of data");
    return s_.substr(start, pos_ - start);
  }

  void expect(std::string_view word) {
    const std::size_t at = pos_;
    const std::string_view got = token();
    if (got != word) fail(at, "expected '" + std::string(word) + "', got '" + std::string(got) + "'");
  }

  std::string rest_of_line() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
    const std::size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] != '\n' && s_[pos_] != '\r') ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  float number() {
    skip_space();
    const std::size_t at = pos_;
    const std::string_view t = token();
    const char* first = t.data();
    if (!t.empty() && t.front() == '+') ++first;
    float v = 0;
    const auto [ptr, ec] = std::from_chars(first, t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size()) {
      fail(at, "malformed number '" + std::string(t) + "'");
    }
    return v;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

bool starts_with_solid(std::span<const std::uint8_t> bytes) {
  std::size_t k = 0;
  while (k < bytes.size() && std::isspace(bytes[k])) ++k;
  return bytes.size() - k >= 5 && std::memcmp(bytes.data() + k, "solid", 5) == 0;
}

struct Vec3Hash {
  std::size_t operator()(const Vec3& v) const {
    std::size_t h = std::hash<double>{}(v.x);
    h = h * 1000003u ^ std::hash<double>{}(v.y);
    return h * 1000003u ^ std::hash<double>{}(v.z);
  }
};

struct Vec3Equal {
  bool operator()(const Vec3& a, const Vec3& b) const {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }
};

}  // namespace

StlDocument to_document(const Assembly& a) {
  StlDocument doc;
  doc.header = binary_header();
  checked_count(a.triangle_count());
  doc.facets.reserve(a.triangle_count());
  for (const TriangleMesh& m : a.shells) {
    for (const Triangle& t : m.triangles) {
      doc.facets.push_back(make_facet(m.vertices[t[0]], m.vertices[t[1]], m.vertices[t[2]]));
    }
  }
  return doc;
}

void serialize_binary(const StlDocument& doc, std::ostream& out) {
  std::string header = doc.ascii ? binary_header() : doc.header;
  header.resize(80, '\0');
  out.write(header.data(), 80);
  put_u32(out, checked_count(doc.facets.size()));
  for (const StlFacet& f : doc.facets) write_facet(out, f);
}

std::vector<std::uint8_t> serialize_binary(const StlDocument& doc) {
  std::ostringstream out(std::ios::binary);
  serialize_binary(doc, out);
  const std::string s = std::move(out).str();
  return {s.begin(), s.end()};
}

std::string serialize_ascii(const StlDocument& doc) {
  std::string name = doc.ascii ? doc.header : std::string(kStlProductTag);
  std::string s = "solid " + name + "\n";
  for (const StlFacet& f : doc.facets) {
    s += "  facet normal ";
    for (int k = 0; k < 3; ++k) {
      if (k) s += ' ';
      append_g9(s, f.normal[k]);
    }
    s += "\n    outer loop\n";
    for (int v = 0; v < 3; ++v) {
      s += "      vertex ";
      for (int k = 0; k < 3; ++k) {
        if (k) s += ' ';
        append_g9(s, f.vertices[3 * v + k]);
      }
      s += '\n';
    }
    s += "    endloop\n  endfacet\n";
  }
  s += "endsolid " + name + "\n";
  return s;
}

std::vector<std::uint8_t> write_binary(const Assembly& a) { return serialize_binary(to_document(a)); }

void write_binary(const Assembly& a, std::ostream& out) {
  const std::string header = binary_header();
  out.write(header.data(), 80);
  put_u32(out, checked_count(a.triangle_count()));
  for (const TriangleMesh& m : a.shells) {
    for (const Triangle& t : m.triangles) {
      write_facet(out, make_facet(m.vertices[t[0]], m.vertices[t[1]], m.vertices[t[2]]));
    }
  }
}

std::string write_ascii(const Assembly& a) {
  StlDocument doc = to_document(a);
  doc.ascii = true;
  doc.header = a.name.empty() ? std::string(kStlProductTag) : a.name;
  return serialize_ascii(doc);
}

StlDocument read_stl(std::span<const std::uint8_t> bytes) {
  if (bytes.size() >= 84) {
    const std::uint64_t count = get_u32(bytes.data() + 80);
    if (84 + 50 * count == bytes.size()) return read_binary(bytes);
  }
  if (starts_with_solid(bytes)) {
    return AsciiReader({reinterpret_cast<const char*>(bytes.data()), bytes.size()}).parse();
  }
  if (bytes.size() < 84) {
    throw DecodeError("binary STL truncated inside the 84 byte header", bytes.size());
  }
  const std::uint64_t count = get_u32(bytes.data() + 80);
  throw DecodeError("binary STL size " + std::to_string(bytes.size()) + " does not match " +
                        std::to_string(count) + " facets (expected " +
                        std::to_string(84 + 50 * count) + ")",
                    std::min<std::uint64_t>(bytes.size(), 84 + 50 * count));
}

StlDocument read_stl(std::string_view text) {
  return read_stl(std::span<const std::uint8_t>(reinterpret_cast<const std::uint8_t*>(text.data()),
                                                text.size()));
}

TriangleMesh to_mesh(const StlDocument& doc) {
  TriangleMesh m;
  std::unordered_map<Vec3, std::uint32_t, Vec3Hash, Vec3Equal> index;
  index.reserve(doc.facets.size());
  m.triangles.reserve(doc.facets.size());
  for (const StlFacet& f : doc.facets) {
    Triangle t{};
    for (int k = 0; k < 3; ++k) {
      const Vec3 v{f.vertices[3 * k], f.vertices[3 * k + 1], f.vertices[3 * k + 2]};
      const auto [it, inserted] = index.try_emplace(v, static_cast<std::uint32_t>(m.vertices.size()));
      if (inserted) m.vertices.push_back(v);
      t[k] = it->second;
    }
    m.triangles.push_back(t);
  }
  return m;
}

std::vector<TriangleMesh> split_components(const TriangleMesh& m) {
  std::vector<std::uint32_t> parent(m.vertices.size());
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const Triangle& t : m.triangles) {
    for (int k = 1; k < 3; ++k) {
      const std::uint32_t a = find(t[0]), b = find(t[k]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<TriangleMesh> out;
  std::unordered_map<std::uint32_t, std::size_t> component;
  std::vector<std::uint32_t> remap(m.vertices.size(), std::numeric_limits<std::uint32_t>::max());
  for (const Triangle& t : m.triangles) {
    const auto [it, inserted] = component.try_emplace(find(t[0]), out.size());
    if (inserted) out.emplace_back();
    TriangleMesh& c = out[it->second];
    Triangle local{};
    for (int k = 0; k < 3; ++k) {
      if (remap[t[k]] == std::numeric_limits<std::uint32_t>::max()) {
        remap[t[k]] = static_cast<std::uint32_t>(c.vertices.size());
        c.vertices.push_back(m.vertices[t[k]]);
      }
      local[k] = remap[t[k]];
    }
    c.triangles.push_back(local);
  }
  return out;
}

}  // namespace pendant
