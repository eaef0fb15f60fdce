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
#include "contour.h"

#include <cmath>
#include <unordered_map>

#include "pendant/error.h"

namespace pendant::detail {

namespace {

constexpr int kBisectionSteps = 52;

class Sampler {
 public:
  Sampler(const Region2D& region, const Box2& window, int resolution)
      : region_(region),
        window_(window),
        n_(resolution),
        dx_((window.x_max - window.x_min) / (resolution - 1)),
        dy_((window.y_max - window.y_min) / (resolution - 1)) {}

  // Padded node coordinates: index 0 and n+1 are the outside ring.
  Vec2 node(int row, int col) const {
    return {node_coord(window_.x_min, window_.x_max, dx_, col),
            node_coord(window_.y_min, window_.y_max, dy_, row)};
  }

  bool inside(Vec2 p) const { return window_.contains(p) && region_.contains(p); }

  // a inside, b outside.
  Vec2 crossing(Vec2 a, Vec2 b) const {
    for (int step = 0; step < kBisectionSteps; ++step) {
      const Vec2 mid = 0.5 * (a + b);
      if (mid == a || mid == b) break;
      (inside(mid) ? a : b) = mid;
    }
    return 0.5 * (a + b);
  }

  int padded() const { return n_ + 2; }
  double spacing() const { return std::min(dx_, dy_); }

 private:
  double node_coord(double lo, double hi, double step, int padded_index) const {
    const int k = padded_index - 1;
    if (k == n_ - 1) return hi;
    return lo + k * step;
  }

  const Region2D& region_;
  Box2 window_;
  int n_;
  double dx_, dy_;
};

void simplify(const std::vector<Vec2>& points, std::vector<std::uint32_t>& loop,
              double merge_distance) {
  bool changed = true;
  while (changed && loop.size() >= 3) {
    changed = false;
    std::vector<std::uint32_t> kept;
    kept.reserve(loop.size());
    const std::size_t n = loop.size();
    for (std::size_t k = 0; k < n; ++k) {
      const Vec2 prev = kept.empty() ? points[loop[(k + n - 1) % n]] : points[kept.back()];
      const Vec2 cur = points[loop[k]];
      const Vec2 next = points[loop[(k + 1) % n]];
      const Vec2 u = cur - prev, v = next - cur;
      const double lu = std::hypot(u.x, u.y), lv = std::hypot(v.x, v.y);
      const bool coincident = lu <= merge_distance;
      const bool collinear =
          std::abs(cross(u, v)) <= 1e-9 * lu * lv && (u.x * v.x + u.y * v.y) > 0;
      if (coincident || collinear) {
        changed = true;
        continue;
      }
      kept.push_back(loop[k]);
    }
    loop = std::move(kept);
  }
}

}  // namespace

ContourSet extract_contours(const Region2D& region, const Box2& window, int resolution) {
  if (resolution < 2) throw InvalidArgument("contour resolution must be >= 2");
  if (!(window.x_min < window.x_max) || !(window.y_min < window.y_max)) {
    throw InvalidArgument("sampling window is empty");
  }
  const Sampler sampler(region, window, resolution);
  const int np = sampler.padded();

  std::vector<char> in(static_cast<std::size_t>(np) * np, 0);
  for (int r = 1; r <= resolution; ++r) {
    for (int c = 1; c <= resolution; ++c) {
      in[static_cast<std::size_t>(r) * np + c] = region.contains(sampler.node(r, c));
    }
  }
  auto inside = [&](int r, int c) { return in[static_cast<std::size_t>(r) * np + c] != 0; };

  ContourSet out;
  std::unordered_map<std::uint64_t, std::uint32_t> crossing_ids;
  // Edge (r, c, horizontal) joins (r, c)-(r, c+1); vertical joins (r, c)-(r+1, c).
  auto crossing_point = [&](int r0, int c0, int r1, int c1) -> std::uint32_t {
    const bool horizontal = r0 == r1;
    const int r = std::min(r0, r1), c = std::min(c0, c1);
    const std::uint64_t key =
        (static_cast<std::uint64_t>(r) * np + c) * 2 + (horizontal ? 0 : 1);
    auto [it, fresh] = crossing_ids.try_emplace(key, 0);
    if (fresh) {
      const bool a_in = inside(r0, c0);
      const Vec2 a = sampler.node(r0, c0), b = sampler.node(r1, c1);
      it->second = static_cast<std::uint32_t>(out.points.size());
      out.points.push_back(a_in ? sampler.crossing(a, b) : sampler.crossing(b, a));
    }
    return it->second;
  };

  std::vector<std::uint32_t> successor;
  auto link = [&](std::uint32_t from, std::uint32_t to) {
    if (successor.size() < out.points.size()) successor.resize(out.points.size(), UINT32_MAX);
    successor[from] = to;
  };

  struct Crossing {
    std::uint32_t id;
    bool enter;
  };
  for (int r = 0; r + 1 < np; ++r) {
    for (int c = 0; c + 1 < np; ++c) {
      // Corners counter-clockwise from bottom-left.
      const int cr[4] = {r, r, r + 1, r + 1};
      const int cc[4] = {c, c + 1, c + 1, c};
      bool corner_in[4];
      int count = 0;
      for (int k = 0; k < 4; ++k) {
        corner_in[k] = inside(cr[k], cc[k]);
        count += corner_in[k];
      }
      if (count == 0 || count == 4) continue;

      Crossing xs[4];
      int nx = 0;
      for (int k = 0; k < 4; ++k) {
        const int k1 = (k + 1) % 4;
        if (corner_in[k] == corner_in[k1]) continue;
        xs[nx++] = {crossing_point(cr[k], cc[k], cr[k1], cc[k1]), corner_in[k1]};
      }
      // Inside stays on the left when each segment runs from a leaving
      // crossing to an entering one.
      if (nx == 2) {
        const Crossing& leave = xs[0].enter ? xs[1] : xs[0];
        const Crossing& enter = xs[0].enter ? xs[0] : xs[1];
        link(leave.id, enter.id);
      } else {
        const Vec2 center = 0.5 * (sampler.node(r, c) + sampler.node(r + 1, c + 1));
        const bool joined = sampler.inside(center);
        for (int k = 0; k < 4; ++k) {
          if (xs[k].enter) continue;
          const int partner = joined ? (k + 1) % 4 : (k + 3) % 4;
          link(xs[k].id, xs[partner].id);
        }
      }
    }
  }
  successor.resize(out.points.size(), UINT32_MAX);

  std::vector<char> visited(out.points.size(), 0);
  const double merge_distance = 1e-6 * sampler.spacing();
  for (std::uint32_t start = 0; start < out.points.size(); ++start) {
    if (visited[start]) continue;
    std::vector<std::uint32_t> loop;
    std::uint32_t p = start;
    while (!visited[p]) {
      visited[p] = 1;
      loop.push_back(p);
      p = successor[p];
      if (p == UINT32_MAX) throw Error("internal: open contour in marching squares");
    }
    simplify(out.points, loop, merge_distance);
    if (loop.size() >= 3) out.loops.push_back(std::move(loop));
  }
  return out;
}

}  // namespace pendant::detail
