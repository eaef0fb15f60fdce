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
#include "pendant/metrics.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "column_caster.h"
#include "pendant/error.h"

namespace pendant {

namespace detail {

namespace {

// Antisymmetric in (a, b) bit for bit, so a point on a shared edge gets
// exactly opposite signs from the two triangles that use it.
double orient(Vec2 a, Vec2 b, Vec2 p) {
  if (a.x < b.x || (a.x == b.x && a.y < b.y)) return cross(b - a, p - a);
  return -cross(a - b, p - b);
}

bool top_left(Vec2 from, Vec2 to) {
  const double dx = to.x - from.x, dy = to.y - from.y;
  return dy < 0 || (dy == 0 && dx < 0);
}

bool covers(Vec2 a, Vec2 b, double w) { return w > 0 || (w == 0 && top_left(a, b)); }

}  // namespace

ColumnCaster::ColumnCaster(const TriangleMesh& mesh, double bucket_size) : mesh_(mesh) {
  box_ = {std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(),
          std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (const Triangle& t : mesh.triangles) {
    Vec3 p[3] = {mesh.vertices[t[0]], mesh.vertices[t[1]], mesh.vertices[t[2]]};
    Vec2 a{p[0].x, p[0].y}, b{p[1].x, p[1].y}, c{p[2].x, p[2].y};
    const double d = cross(b - a, c - a);
    if (d == 0) continue;  // vertical in xy; a vertical line never crosses it
    if (d < 0) {
      std::swap(b, c);
      std::swap(p[1], p[2]);
    }
    tris_.push_back({a, b, c, p[0].z, p[1].z, p[2].z});
    for (Vec2 q : {a, b, c}) {
      box_.x_min = std::min(box_.x_min, q.x);
      box_.x_max = std::max(box_.x_max, q.x);
      box_.y_min = std::min(box_.y_min, q.y);
      box_.y_max = std::max(box_.y_max, q.y);
    }
  }
  if (tris_.empty()) return;
  cell_ = bucket_size > 0 ? bucket_size : 1;
  nx_ = std::max(1, static_cast<int>(std::ceil((box_.x_max - box_.x_min) / cell_)) + 1);
  ny_ = std::max(1, static_cast<int>(std::ceil((box_.y_max - box_.y_min) / cell_)) + 1);
  buckets_.resize(static_cast<std::size_t>(nx_) * ny_);
  auto bucket_x = [&](double x) {
    return std::clamp(static_cast<int>((x - box_.x_min) / cell_), 0, nx_ - 1);
  };
  auto bucket_y = [&](double y) {
    return std::clamp(static_cast<int>((y - box_.y_min) / cell_), 0, ny_ - 1);
  };
  for (std::uint32_t k = 0; k < tris_.size(); ++k) {
    const Projected& t = tris_[k];
    const int x0 = bucket_x(std::min({t.a.x, t.b.x, t.c.x}));
    const int x1 = bucket_x(std::max({t.a.x, t.b.x, t.c.x}));
    const int y0 = bucket_y(std::min({t.a.y, t.b.y, t.c.y}));
    const int y1 = bucket_y(std::max({t.a.y, t.b.y, t.c.y}));
    for (int y = y0; y <= y1; ++y) {
      for (int x = x0; x <= x1; ++x) buckets_[static_cast<std::size_t>(y) * nx_ + x].push_back(k);
    }
  }
}

void ColumnCaster::crossings(Vec2 p, std::vector<double>& out) const {
  out.clear();
  if (tris_.empty() || p.x < box_.x_min || p.x > box_.x_max || p.y < box_.y_min ||
      p.y > box_.y_max) {
    return;
  }
  const int bx = std::clamp(static_cast<int>((p.x - box_.x_min) / cell_), 0, nx_ - 1);
  const int by = std::clamp(static_cast<int>((p.y - box_.y_min) / cell_), 0, ny_ - 1);
  for (std::uint32_t k : buckets_[static_cast<std::size_t>(by) * nx_ + bx]) {
    const Projected& t = tris_[k];
    const double wa = orient(t.b, t.c, p);
    if (!covers(t.b, t.c, wa)) continue;
    const double wb = orient(t.c, t.a, p);
    if (!covers(t.c, t.a, wb)) continue;
    const double wc = orient(t.a, t.b, p);
    if (!covers(t.a, t.b, wc)) continue;
    const double sum = wa + wb + wc;
    out.push_back(sum > 0 ? (wa * t.za + wb * t.zb + wc * t.zc) / sum
                          : (t.za + t.zb + t.zc) / 3);
  }
  std::sort(out.begin(), out.end());
}

void ColumnCaster::intervals(Vec2 p, std::vector<std::pair<double, double>>& out) const {
  crossings(p, scratch_);
  for (std::size_t k = 0; k + 1 < scratch_.size(); k += 2) {
    if (scratch_[k + 1] > scratch_[k]) out.emplace_back(scratch_[k], scratch_[k + 1]);
  }
}

void merge_intervals(std::vector<std::pair<double, double>>& v) {
  if (v.empty()) return;
  std::sort(v.begin(), v.end());
  std::size_t w = 0;
  for (std::size_t k = 1; k < v.size(); ++k) {
    if (v[k].first <= v[w].second) {
      v[w].second = std::max(v[w].second, v[k].second);
    } else {
      v[++w] = v[k];
    }
  }
  v.resize(w + 1);
}

}  // namespace detail

double shell_volume(const TriangleMesh& m) {
  double sum = 0;
  for (const Triangle& t : m.triangles) {
    sum += dot(m.vertices[t[0]], cross(m.vertices[t[1]], m.vertices[t[2]]));
  }
  return sum / 6.0;
}

MeshReport validate(const TriangleMesh& m) {
  MeshReport r;
  r.triangle_count = m.triangles.size();
  struct Directed {
    std::uint32_t lo, hi;
    bool forward;
    auto operator<=>(const Directed&) const = default;
  };
  std::vector<Directed> edges;
  edges.reserve(m.triangles.size() * 3);
  std::vector<char> used(m.vertices.size(), 0);
  for (const Triangle& t : m.triangles) {
    for (int k = 0; k < 3; ++k) {
      const std::uint32_t a = t[k], b = t[(k + 1) % 3];
      if (a >= m.vertices.size() || b >= m.vertices.size()) {
        throw InvalidArgument("triangle references vertex out of range");
      }
      used[a] = 1;
      edges.push_back({std::min(a, b), std::max(a, b), a < b});
    }
    const Vec3 n = cross(m.vertices[t[1]] - m.vertices[t[0]], m.vertices[t[2]] - m.vertices[t[0]]);
    if (0.5 * length(n) < 1e-9) ++r.degenerate_count;
  }
  std::sort(edges.begin(), edges.end());
  for (std::size_t k = 0; k < edges.size();) {
    std::size_t end = k, forward = 0;
    while (end < edges.size() && edges[end].lo == edges[k].lo && edges[end].hi == edges[k].hi) {
      forward += edges[end].forward;
      ++end;
    }
    const std::size_t count = end - k;
    ++r.edge_count;
    if (count == 1) {
      r.boundary_edges.emplace_back(edges[k].lo, edges[k].hi);
    } else if (count > 2) {
      ++r.non_manifold_edges;
    } else if (forward != 1) {
      ++r.misoriented_edges;
    }
    k = end;
  }
  r.vertex_count = static_cast<std::size_t>(std::count(used.begin(), used.end(), 1));
  r.euler_characteristic = static_cast<long long>(r.vertex_count) -
                           static_cast<long long>(r.edge_count) +
                           static_cast<long long>(r.triangle_count);
  r.signed_volume = shell_volume(m);
  return r;
}

namespace {

struct ColumnGrid {
  double voxel;
  Box3 box;
  int nx, ny;

  Vec2 center(int i, int j) const {
    // Keeps sample lines off grid-aligned edges and vertices.
    const double jitter_x = (std::numbers::sqrt2 - 1) * 1e-7 * voxel;
    const double jitter_y = (std::numbers::sqrt3 - 1) * 1e-7 * voxel;
    return {box.min.x + (i + 0.5) * voxel + jitter_x, box.min.y + (j + 0.5) * voxel + jitter_y};
  }
};

ColumnGrid make_grid(const Assembly& a, double voxel) {
  if (!(voxel > 0) || !std::isfinite(voxel)) throw InvalidArgument("voxel size must be > 0");
  const Box3 box = a.bounds();
  if (box.empty()) return {voxel, box, 0, 0};
  const auto count = [voxel](double extent) {
    return std::max(1, static_cast<int>(std::ceil(extent / voxel)));
  };
  const double cells = std::ceil((box.max.x - box.min.x) / voxel) *
                       std::ceil((box.max.y - box.min.y) / voxel);
  if (cells > 4e8) throw InvalidArgument("voxel size too small for the assembly extent");
  return {voxel, box, count(box.max.x - box.min.x), count(box.max.y - box.min.y)};
}

// Union of all shells' inside intervals along every column, column-major.
template <class Visit>
void for_each_column(const Assembly& a, const ColumnGrid& grid, Visit&& visit) {
  std::vector<detail::ColumnCaster> casters;
  casters.reserve(a.shells.size());
  for (const TriangleMesh& m : a.shells) casters.emplace_back(m, 2 * grid.voxel);
  std::vector<std::pair<double, double>> spans;
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      spans.clear();
      const Vec2 p = grid.center(i, j);
      for (const auto& caster : casters) caster.intervals(p, spans);
      detail::merge_intervals(spans);
      visit(spans);
    }
  }
}

}  // namespace

double union_volume(const Assembly& a, double voxel) {
  const ColumnGrid grid = make_grid(a, voxel);
  const double z0 = grid.box.min.z;
  long long inside = 0;
  for_each_column(a, grid, [&](const std::vector<std::pair<double, double>>& spans) {
    for (const auto& [lo, hi] : spans) {
      // Voxel centers z0 + (k + 0.5) * voxel strictly inside (lo, hi).
      const long long first = static_cast<long long>(std::floor((lo - z0) / voxel - 0.5)) + 1;
      const long long last = static_cast<long long>(std::ceil((hi - z0) / voxel - 0.5)) - 1;
      if (last >= first) inside += last - first + 1;
    }
  });
  return static_cast<double>(inside) * voxel * voxel * voxel;
}

VolumeProfile volume_profile(const Assembly& a, int n_slices, double voxel) {
  if (n_slices < 2) throw InvalidArgument("volume profile needs at least 2 slices");
  const Box3 box = a.bounds();
  if (box.empty()) throw InvalidArgument("volume profile of an empty assembly");
  if (voxel <= 0) {
    voxel = std::max(box.max.x - box.min.x, box.max.y - box.min.y) / 200.0;
  }
  const ColumnGrid grid = make_grid(a, voxel);

  std::vector<std::pair<double, double>> all;
  for_each_column(a, grid, [&](const std::vector<std::pair<double, double>>& spans) {
    all.insert(all.end(), spans.begin(), spans.end());
  });

  VolumeProfile p;
  const double z0 = box.min.z, z1 = box.max.z;
  p.z_samples.resize(static_cast<std::size_t>(n_slices) + 1);
  for (int s = 0; s <= n_slices; ++s) {
    p.z_samples[s] = s == n_slices ? z1 : z0 + (z1 - z0) * s / n_slices;
  }
  // Difference array over slabs: each interval contributes its overlap with
  // every slab; summing slabs in order keeps the cumulative curve monotone.
  std::vector<double> slab(static_cast<std::size_t>(n_slices), 0.0);
  const double height = z1 - z0;
  for (const auto& [lo, hi] : all) {
    if (!(height > 0)) break;
    int s0 = std::clamp(static_cast<int>((lo - z0) / height * n_slices), 0, n_slices - 1);
    for (int s = s0; s < n_slices; ++s) {
      const double a0 = p.z_samples[s], a1 = p.z_samples[s + 1];
      if (a0 >= hi) break;
      const double overlap = std::min(hi, a1) - std::max(lo, a0);
      if (overlap > 0) slab[s] += overlap;
    }
  }
  const double area = voxel * voxel;
  std::vector<double> cumulative(p.z_samples.size(), 0.0);
  for (int s = 0; s < n_slices; ++s) cumulative[s + 1] = cumulative[s] + slab[s] * area;
  p.total_volume = cumulative.back();
  if (!(p.total_volume > 0)) throw InvalidArgument("assembly encloses no volume");
  p.cumulative_fraction.resize(cumulative.size());
  for (std::size_t s = 0; s < cumulative.size(); ++s) {
    p.cumulative_fraction[s] = std::min(1.0, cumulative[s] / p.total_volume);
  }
  p.cumulative_fraction.front() = 0.0;
  p.cumulative_fraction.back() = 1.0;
  return p;
}

std::vector<double> filament_breaks(const VolumeProfile& p, const std::vector<double>& z_breaks) {
  if (p.z_samples.size() < 2) throw InvalidArgument("volume profile has no samples");
  const double z0 = p.z_samples.front(), z1 = p.z_samples.back();
  std::vector<double> out;
  out.reserve(z_breaks.size());
  for (std::size_t k = 0; k < z_breaks.size(); ++k) {
    const double z = z_breaks[k];
    if (!(z >= z0 && z <= z1)) {
      throw InvalidArgument("break height " + std::to_string(z) + " outside [" +
                            std::to_string(z0) + ", " + std::to_string(z1) + "]");
    }
    if (k > 0 && z < z_breaks[k - 1]) throw InvalidArgument("break heights must be ascending");
    const auto it = std::upper_bound(p.z_samples.begin(), p.z_samples.end(), z);
    if (it == p.z_samples.end()) {
      out.push_back(p.cumulative_fraction.back());
      continue;
    }
    const std::size_t hi = static_cast<std::size_t>(it - p.z_samples.begin());
    const std::size_t lo = hi - 1;
    const double t = (z - p.z_samples[lo]) / (p.z_samples[hi] - p.z_samples[lo]);
    out.push_back(p.cumulative_fraction[lo] +
                  t * (p.cumulative_fraction[hi] - p.cumulative_fraction[lo]));
  }
  return out;
}

}  // namespace pendant
