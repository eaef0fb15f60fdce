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
#include "pendant/mesh.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "contour.h"
#include "pendant/error.h"
#include "pendant/metrics.h"
#include "triangulate.h"

namespace pendant {

Box3 TriangleMesh::bounds() const {
  Box3 box;
  for (const Triangle& t : triangles) {
    for (std::uint32_t v : t) box.extend(vertices[v]);
  }
  return box;
}

std::size_t Assembly::triangle_count() const {
  std::size_t n = 0;
  for (const TriangleMesh& m : shells) n += m.triangles.size();
  return n;
}

Box3 Assembly::bounds() const {
  Box3 box;
  for (const TriangleMesh& m : shells) box.extend(m.bounds());
  return box;
}

namespace {

// Vertex splitting around a grid node of a stepped solid.
//
// Near a vertex the eight octants around it are each solid or empty. Faces
// lie on the twelve quarter-planes (pieces) between face-adjacent octants.
// Pieces that meet along one of the six axis rays belong to the same surface
// sheet when they bound the same run of solid octants around that ray. When
// two diagonal columns touch only along a vertical line the sheets separate
// and the vertex is split, one copy per sheet, so every edge keeps exactly
// two faces.
//
// Octant bits: 1 = +x side, 2 = +y side, 4 = above.
// Piece ids: axis * 4 + (the two remaining bits in axis order).
constexpr int kPieces = 12;

int piece_id(int axis, int octant) {
  const int a = (axis + 1) % 3, b = (axis + 2) % 3;
  const int lo = std::min(a, b), hi = std::max(a, b);
  return axis * 4 + ((octant >> lo) & 1) + 2 * ((octant >> hi) & 1);
}

struct SplitTable {
  struct Entry {
    std::array<std::int8_t, kPieces> component;
    int components = 0;
    // Per component: preferred horizontal push side (diagonal rotated a
    // quarter turn clockwise), zero when the sheet spans several quadrants.
    std::array<Vec2, kPieces> push;
  };
  std::array<Entry, 256> entries;

  SplitTable() {
    for (int mask = 0; mask < 256; ++mask) entries[mask] = build(mask);
  }

  static Entry build(int mask) {
    auto solid = [mask](int o) { return ((mask >> o) & 1) != 0; };
    std::array<int, kPieces> parent;
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::array<bool, kPieces> active{};
    std::array<int, kPieces> solid_octant{};
    for (int axis = 0; axis < 3; ++axis) {
      for (int o = 0; o < 8; ++o) {
        if (o & (1 << axis)) continue;
        const int o2 = o | (1 << axis);
        if (solid(o) != solid(o2)) {
          const int id = piece_id(axis, o);
          active[id] = true;
          solid_octant[id] = solid(o) ? o : o2;
        }
      }
    }
    for (int axis = 0; axis < 3; ++axis) {
      const int a = (axis + 1) % 3, b = (axis + 2) % 3;
      const int u = std::min(a, b), v = std::max(a, b);
      for (int side = 0; side < 2; ++side) {
        const int base = side << axis;
        const int cycle[4] = {base, base | (1 << u), base | (1 << u) | (1 << v),
                              base | (1 << v)};
        // Piece between cycle[k] and cycle[k+1].
        int between[4];
        for (int k = 0; k < 4; ++k) {
          const int diff = cycle[k] ^ cycle[(k + 1) % 4];
          const int piece_axis = diff == (1 << u) ? u : v;
          between[k] = piece_id(piece_axis, cycle[k]);
        }
        for (int k = 0; k < 4; ++k) {
          if (!solid(cycle[k]) || solid(cycle[(k + 3) % 4])) continue;
          int end = k;
          while (solid(cycle[(end + 1) % 4])) end = (end + 1) % 4;
          const int first = between[(k + 3) % 4];
          const int last = between[end];
          parent[find(first)] = find(last);
        }
      }
    }
    Entry e;
    e.component.fill(-1);
    std::array<int, kPieces> root_to_component;
    root_to_component.fill(-1);
    std::array<int, kPieces> quadrant;
    quadrant.fill(-1);
    for (int p = 0; p < kPieces; ++p) {
      if (!active[p]) continue;
      const int root = find(p);
      if (root_to_component[root] < 0) root_to_component[root] = e.components++;
      const int comp = root_to_component[root];
      e.component[p] = static_cast<std::int8_t>(comp);
      const int q = solid_octant[p] & 3;
      quadrant[comp] = quadrant[comp] == -1 || quadrant[comp] == q ? q : -2;
    }
    for (int c = 0; c < e.components; ++c) {
      if (quadrant[c] < 0) continue;
      const double dx = (quadrant[c] & 1) ? 1 : -1;
      const double dy = (quadrant[c] & 2) ? 1 : -1;
      e.push[c] = {dy, -dx};
    }
    return e;
  }
};

const SplitTable& split_table() {
  static const SplitTable table;
  return table;
}

class StepSolidBuilder {
 public:
  StepSolidBuilder(const HeightField& hf, const Region2D& clip, double z_base)
      : hf_(hf), z_base_(z_base), cell_rows_(hf.rows - 1), cell_cols_(hf.cols - 1) {
    std::vector<char> node_in(hf.heights.size());
    for (int r = 0; r < hf.rows; ++r) {
      for (int c = 0; c < hf.cols; ++c) {
        node_in[hf.index(r, c)] = clip.contains(hf.node_position(r, c));
      }
    }
    cell_height_.assign(static_cast<std::size_t>(cell_rows_) * cell_cols_,
                        std::numeric_limits<double>::quiet_NaN());
    for (int i = 0; i < cell_rows_; ++i) {
      for (int j = 0; j < cell_cols_; ++j) {
        const std::size_t corners[4] = {hf.index(i, j), hf.index(i, j + 1),
                                        hf.index(i + 1, j + 1), hf.index(i + 1, j)};
        bool all_in = true;
        double h = -std::numeric_limits<double>::infinity();
        for (std::size_t k : corners) {
          all_in = all_in && node_in[k];
          h = std::max(h, hf.heights[k]);
        }
        if (all_in && h > z_base_) cell_height_[cell(i, j)] = h;
      }
    }

    levels_.resize(hf.heights.size());
    for (int r = 0; r < hf.rows; ++r) {
      for (int c = 0; c < hf.cols; ++c) {
        std::vector<double>& lv = levels_[hf.index(r, c)];
        for (int qy = 0; qy < 2; ++qy) {
          for (int qx = 0; qx < 2; ++qx) {
            if (auto h = height(r - 1 + qy, c - 1 + qx)) lv.push_back(*h);
          }
        }
        if (lv.empty()) continue;
        lv.push_back(z_base_);
        std::sort(lv.begin(), lv.end());
        lv.erase(std::unique(lv.begin(), lv.end()), lv.end());
      }
    }
    push_ = 1e-3 * std::min(hf.dx(), hf.dy());
    vertex_slots_.resize(hf.heights.size());
  }

  TriangleMesh build() {
    for (int i = 0; i < cell_rows_; ++i) {
      for (int j = 0; j < cell_cols_; ++j) {
        const auto h = height(i, j);
        if (!h) continue;
        emit_cell(i, j, *h);
      }
    }
    if (mesh_.triangles.empty()) {
      throw EmptySolidError("height field has no printable cell inside the clip region");
    }
    apply_pushes();
    return std::move(mesh_);
  }

 private:
  struct Node {
    int r, c;
  };
  struct Slot {
    double z;
    int component;
    std::uint32_t id;
  };

  std::size_t cell(int i, int j) const {
    return static_cast<std::size_t>(i) * cell_cols_ + j;
  }

  std::optional<double> height(int i, int j) const {
    if (i < 0 || j < 0 || i >= cell_rows_ || j >= cell_cols_) return std::nullopt;
    const double h = cell_height_[cell(i, j)];
    if (std::isnan(h)) return std::nullopt;
    return h;
  }

  bool solid(Node n, double z, int octant) const {
    const auto h = height(n.r - 1 + ((octant >> 1) & 1), n.c - 1 + (octant & 1));
    if (!h) return false;
    return (octant & 4) ? (z >= z_base_ && z < *h) : (z > z_base_ && z <= *h);
  }

  std::uint32_t vertex(Node n, double z, int piece) {
    int mask = 0;
    for (int o = 0; o < 8; ++o) mask |= solid(n, z, o) << o;
    const SplitTable::Entry& e = split_table().entries[mask];
    const int comp = e.component[piece];
    if (comp < 0) throw Error("internal: face on an inactive vertex piece");

    std::vector<Slot>& slots = vertex_slots_[hf_.index(n.r, n.c)];
    for (const Slot& s : slots) {
      if (s.z == z && s.component == comp) return s.id;
    }
    const Vec2 p = hf_.node_position(n.r, n.c);
    const auto id = static_cast<std::uint32_t>(mesh_.vertices.size());
    mesh_.vertices.push_back({p.x, p.y, z});
    slots.push_back({z, comp, id});
    if (e.components > 1) pushes_.push_back({id, e.push[comp]});
    return id;
  }

  // Separates split copies horizontally. The enclosed volume is linear in
  // each single vertex, with gradient proportional to the summed incident
  // area vectors, so moving one copy perpendicular to that gradient keeps the
  // volume exactly. Copies move one at a time so shared faces see the
  // already-moved neighbours.
  void apply_pushes() {
    if (pushes_.empty()) return;
    std::vector<int> slot(mesh_.vertices.size(), -1);
    for (std::size_t k = 0; k < pushes_.size(); ++k) slot[pushes_[k].id] = static_cast<int>(k);
    std::vector<std::vector<std::uint32_t>> incident(pushes_.size());
    for (std::uint32_t f = 0; f < mesh_.triangles.size(); ++f) {
      for (std::uint32_t v : mesh_.triangles[f]) {
        if (slot[v] >= 0) incident[slot[v]].push_back(f);
      }
    }
    for (std::size_t k = 0; k < pushes_.size(); ++k) {
      const std::uint32_t id = pushes_[k].id;
      Vec3& v = mesh_.vertices[id];
      Vec2 g{0, 0};
      for (std::uint32_t f : incident[k]) {
        const Triangle& t = mesh_.triangles[f];
        const int at = t[0] == id ? 0 : t[1] == id ? 1 : 2;
        const Vec3 a = cross(mesh_.vertices[t[(at + 1) % 3]] - v,
                             mesh_.vertices[t[(at + 2) % 3]] - v);
        g = g + Vec2{a.x, a.y};
      }
      const Vec2 side = pushes_[k].side;
      const double len = std::hypot(g.x, g.y);
      Vec2 dir = (1 / std::hypot(side.x, side.y)) * side;
      if (len > 0) {
        dir = Vec2{-g.y / len, g.x / len};
        if (dir.x * side.x + dir.y * side.y < 0) dir = -1.0 * dir;
      }
      v.x += push_ * dir.x;
      v.y += push_ * dir.y;
    }
  }

  void emit_cell(int i, int j, double h) {
    const Node corner[4] = {{i, j}, {i, j + 1}, {i + 1, j + 1}, {i + 1, j}};
    // Horizontal piece of this cell as seen from each corner.
    const int quad_piece[4] = {piece_id(2, 3), piece_id(2, 2), piece_id(2, 0),
                               piece_id(2, 1)};
    std::uint32_t top[4], bottom[4];
    for (int k = 0; k < 4; ++k) {
      top[k] = vertex(corner[k], h, quad_piece[k]);
      bottom[k] = vertex(corner[k], z_base_, quad_piece[k]);
    }
    mesh_.triangles.push_back({top[0], top[1], top[2]});
    mesh_.triangles.push_back({top[0], top[2], top[3]});
    mesh_.triangles.push_back({bottom[0], bottom[2], bottom[1]});
    mesh_.triangles.push_back({bottom[0], bottom[3], bottom[2]});

    // Walls towards -y, +x, +y, -x. Each runs from corner k (left, seen from
    // outside) to corner k+1 (right).
    const int neighbor_di[4] = {-1, 0, 1, 0};
    const int neighbor_dj[4] = {0, 1, 0, -1};
    for (int k = 0; k < 4; ++k) {
      const double lo = height(i + neighbor_di[k], j + neighbor_dj[k]).value_or(z_base_);
      if (lo >= h) continue;
      emit_wall(corner[k], corner[(k + 1) % 4], lo, h);
    }
  }

  std::vector<double> column(Node n, double lo, double hi) const {
    std::vector<double> out;
    for (double z : levels_[hf_.index(n.r, n.c)]) {
      if (z >= lo && z <= hi) out.push_back(z);
    }
    return out;
  }

  // Piece of a wall running from `at` towards `other`, above or below the
  // vertex.
  static int wall_piece(Node at, Node other, bool above) {
    const int qz = above ? 4 : 0;
    if (at.r == other.r) {
      return piece_id(1, (other.c > at.c ? 1 : 0) | qz);
    }
    return piece_id(0, (other.r > at.r ? 2 : 0) | qz);
  }

  void emit_wall(Node left, Node right, double lo, double hi) {
    const std::vector<double> lz = column(left, lo, hi);
    const std::vector<double> rz = column(right, lo, hi);
    std::size_t a = 0, b = 0;
    auto corner = [&](Node n, Node other, double z, double centroid_z) {
      return vertex(n, z, wall_piece(n, other, centroid_z > z));
    };
    while (a + 1 < lz.size() || b + 1 < rz.size()) {
      const bool step_right = b + 1 < rz.size() && (a + 1 == lz.size() || rz[b + 1] <= lz[a + 1]);
      if (step_right) {
        const double cz = (lz[a] + rz[b] + rz[b + 1]) / 3;
        mesh_.triangles.push_back({corner(left, right, lz[a], cz),
                                   corner(right, left, rz[b], cz),
                                   corner(right, left, rz[b + 1], cz)});
        ++b;
      } else {
        const double cz = (lz[a] + rz[b] + lz[a + 1]) / 3;
        mesh_.triangles.push_back({corner(left, right, lz[a], cz),
                                   corner(right, left, rz[b], cz),
                                   corner(left, right, lz[a + 1], cz)});
        ++a;
      }
    }
  }

  const HeightField& hf_;
  double z_base_;
  int cell_rows_, cell_cols_;
  std::vector<double> cell_height_;
  std::vector<std::vector<double>> levels_;
  std::vector<std::vector<Slot>> vertex_slots_;
  struct Push {
    std::uint32_t id;
    Vec2 side;
  };
  double push_ = 0;
  std::vector<Push> pushes_;
  TriangleMesh mesh_;
};

void require_valid(const TriangleMesh& m, const char* what) {
  const MeshReport report = validate(m);
  if (!report.valid_solid()) {
    throw Error(std::string("internal: ") + what + " produced an invalid shell (" +
                std::to_string(report.boundary_edges.size()) + " boundary, " +
                std::to_string(report.non_manifold_edges) + " non-manifold, " +
                std::to_string(report.misoriented_edges) + " misoriented edges)");
  }
}

}  // namespace

TriangleMesh heightfield_to_solid(const HeightField& input, const Region2D& clip,
                                  double z_base, SolidOptions options) {
  if (!input.has_range()) {
    throw InvalidArgument("height field needs an attached data range before meshing");
  }
  if (!std::isfinite(z_base)) throw InvalidArgument("z_base must be finite");
  for (double h : input.heights) {
    if (!std::isfinite(h) || h < 0) {
      throw InvalidArgument("height field values must be finite and >= 0");
    }
  }
  if (input.rows < 2 || input.cols < 2) {
    throw EmptySolidError("height field needs at least 2x2 nodes to form a cell");
  }
  const HeightField hf = options.smooth ? smooth(input) : input;
  TriangleMesh mesh = StepSolidBuilder(hf, clip, z_base).build();
  require_valid(mesh, "heightfield_to_solid");
  return mesh;
}

TriangleMesh extrude_region(const Region2D& region, double z0, double z1, int resolution,
                            std::optional<Box2> window) {
  if (!(z0 < z1) || !std::isfinite(z0) || !std::isfinite(z1)) {
    throw InvalidArgument("extrusion needs finite z0 < z1");
  }
  if (resolution < 8) throw InvalidArgument("extrusion resolution must be >= 8");
  if (!window) window = region.bounding_box();
  if (!window) {
    throw InvalidArgument("region '" + region.to_string() +
                          "' is unbounded; give an explicit sampling window");
  }
  if (window->empty() || !(window->x_min < window->x_max) ||
      !(window->y_min < window->y_max)) {
    throw EmptySolidError("region '" + region.to_string() + "' has an empty bounding box");
  }

  const detail::ContourSet contours = detail::extract_contours(region, *window, resolution);
  if (contours.loops.empty()) {
    throw EmptySolidError("region '" + region.to_string() + "' is empty inside the window");
  }

  // Holes go to the smallest outer loop that contains them.
  std::vector<double> area(contours.loops.size());
  std::vector<std::size_t> outers;
  for (std::size_t k = 0; k < contours.loops.size(); ++k) {
    area[k] = detail::signed_area(contours.points, contours.loops[k]);
    if (area[k] > 0) outers.push_back(k);
  }
  auto point_in_loop = [&](Vec2 p, const std::vector<std::uint32_t>& loop) {
    bool in = false;
    for (std::size_t a = 0, b = loop.size() - 1; a < loop.size(); b = a++) {
      const Vec2 u = contours.points[loop[a]], v = contours.points[loop[b]];
      if ((u.y > p.y) != (v.y > p.y) && p.x < (v.x - u.x) * (p.y - u.y) / (v.y - u.y) + u.x) {
        in = !in;
      }
    }
    return in;
  };
  std::vector<std::vector<std::vector<std::uint32_t>>> polygons(outers.size());
  for (std::size_t k = 0; k < outers.size(); ++k) {
    polygons[k].push_back(contours.loops[outers[k]]);
  }
  for (std::size_t k = 0; k < contours.loops.size(); ++k) {
    if (area[k] > 0) continue;
    const Vec2 probe = contours.points[contours.loops[k][0]];
    std::size_t best = outers.size();
    for (std::size_t o = 0; o < outers.size(); ++o) {
      if (!point_in_loop(probe, contours.loops[outers[o]])) continue;
      if (best == outers.size() || area[outers[o]] < area[outers[best]]) best = o;
    }
    if (best == outers.size()) throw Error("internal: contour hole without an outer loop");
    polygons[best].push_back(contours.loops[k]);
  }

  TriangleMesh mesh;
  std::vector<std::uint32_t> bottom_id(contours.points.size(), UINT32_MAX);
  std::vector<std::uint32_t> top_id(contours.points.size(), UINT32_MAX);
  auto ids = [&](std::uint32_t p) {
    if (bottom_id[p] == UINT32_MAX) {
      const Vec2 q = contours.points[p];
      bottom_id[p] = static_cast<std::uint32_t>(mesh.vertices.size());
      mesh.vertices.push_back({q.x, q.y, z0});
      top_id[p] = static_cast<std::uint32_t>(mesh.vertices.size());
      mesh.vertices.push_back({q.x, q.y, z1});
    }
    return std::pair{bottom_id[p], top_id[p]};
  };

  for (const auto& rings : polygons) {
    for (const auto& t : detail::triangulate_polygon(contours.points, rings)) {
      const auto [b0, t0] = ids(t[0]);
      const auto [b1, t1] = ids(t[1]);
      const auto [b2, t2] = ids(t[2]);
      mesh.triangles.push_back({t0, t1, t2});
      mesh.triangles.push_back({b0, b2, b1});
    }
    // Loops keep the inside on their left, so the outward side is on the
    // right of each edge.
    for (const auto& ring : rings) {
      for (std::size_t k = 0; k < ring.size(); ++k) {
        const auto [a0, a1] = ids(ring[k]);
        const auto [b0, b1] = ids(ring[(k + 1) % ring.size()]);
        mesh.triangles.push_back({a0, b0, b1});
        mesh.triangles.push_back({a0, b1, a1});
      }
    }
  }
  require_valid(mesh, "extrude_region");
  return mesh;
}

Assembly assemble(std::vector<TriangleMesh> shells, std::string name) {
  for (std::size_t k = 0; k < shells.size(); ++k) {
    const MeshReport report = validate(shells[k]);
    if (!report.watertight()) {
      throw ValidationError("shell " + std::to_string(k) + " is not watertight (" +
                            std::to_string(report.boundary_edges.size()) +
                            " boundary edges, " +
                            std::to_string(report.non_manifold_edges) +
                            " non-manifold edges, " +
                            std::to_string(report.misoriented_edges) +
                            " misoriented edges)");
    }
  }
  return Assembly{std::move(name), std::move(shells)};
}

ScaledAssembly scale_to_diameter(const Assembly& a, double target) {
  if (!(target > 0) || !std::isfinite(target)) {
    throw InvalidArgument("target diameter must be positive");
  }
  const Box3 box = a.bounds();
  if (box.empty()) throw InvalidArgument("cannot scale an empty assembly");
  const double extent = box.max.x - box.min.x;
  if (!(extent > 0)) throw InvalidArgument("assembly has zero x extent");
  const double s = target / extent;
  Assembly out{a.name, {}};
  out.shells.reserve(a.shells.size());
  for (const TriangleMesh& m : a.shells) out.shells.push_back(scaled(m, s));
  return {std::move(out), s};
}

TriangleMesh scaled(const TriangleMesh& m, double s) {
  TriangleMesh out = m;
  if (s == 1.0) return out;
  for (Vec3& v : out.vertices) v = s * v;
  return out;
}

TriangleMesh translated(const TriangleMesh& m, Vec3 offset) {
  TriangleMesh out = m;
  for (Vec3& v : out.vertices) v = v + offset;
  return out;
}

TriangleMesh reversed(const TriangleMesh& m) {
  TriangleMesh out = m;
  for (Triangle& t : out.triangles) std::swap(t[1], t[2]);
  return out;
}

TriangleMesh make_box(Vec3 lo, Vec3 hi) {
  if (!(lo.x < hi.x && lo.y < hi.y && lo.z < hi.z)) {
    throw InvalidArgument("box needs min < max on every axis");
  }
  TriangleMesh m;
  for (int k = 0; k < 8; ++k) {
    m.vertices.push_back({(k & 1) ? hi.x : lo.x, (k & 2) ? hi.y : lo.y,
                          (k & 4) ? hi.z : lo.z});
  }
  m.triangles = {
      {0, 2, 1}, {1, 2, 3},  // z = lo
      {4, 5, 6}, {5, 7, 6},  // z = hi
      {0, 1, 4}, {1, 5, 4},  // y = lo
      {2, 6, 3}, {3, 6, 7},  // y = hi
      {0, 4, 2}, {2, 4, 6},  // x = lo
      {1, 3, 5}, {3, 7, 5},  // x = hi
  };
  return m;
}

}  // namespace pendant
