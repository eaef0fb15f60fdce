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
// Ear clipping with hole bridging, following the structure of mapbox/earcut
// without the z-order acceleration.

#include "triangulate.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

namespace pendant::detail {

namespace {

struct Node {
  std::uint32_t i;
  double x, y;
  Node* prev = nullptr;
  Node* next = nullptr;
  bool steiner = false;
};

using Triangles = std::vector<std::array<std::uint32_t, 3>>;

class EarClipper {
 public:
  EarClipper(std::span<const Vec2> points, Triangles& out) : points_(points), out_(out) {}

  void run(std::span<const std::vector<std::uint32_t>> rings) {
    Node* outer = linked_list(rings[0], true);
    if (!outer || outer->next == outer->prev) return;
    if (rings.size() > 1) outer = eliminate_holes(rings.subspan(1), outer);
    earcut_linked(outer, 0);
  }

 private:
  // Negative for a counter-clockwise turn p -> q -> r.
  static double area(const Node* p, const Node* q, const Node* r) {
    return (q->y - p->y) * (r->x - q->x) - (q->x - p->x) * (r->y - q->y);
  }
  static bool equals(const Node* a, const Node* b) { return a->x == b->x && a->y == b->y; }

  Node* insert_node(std::uint32_t i, Node* last) {
    Node& n = pool_.emplace_back();
    n.i = i;
    n.x = points_[i].x;
    n.y = points_[i].y;
    if (!last) {
      n.prev = &n;
      n.next = &n;
    } else {
      n.next = last->next;
      n.prev = last;
      last->next->prev = &n;
      last->next = &n;
    }
    return &n;
  }

  static void remove_node(Node* p) {
    p->next->prev = p->prev;
    p->prev->next = p->next;
  }

  Node* linked_list(const std::vector<std::uint32_t>& ring, bool ccw) {
    const bool is_ccw = signed_area(points_, ring) > 0;
    Node* last = nullptr;
    if (ccw == is_ccw) {
      for (std::uint32_t i : ring) last = insert_node(i, last);
    } else {
      for (auto it = ring.rbegin(); it != ring.rend(); ++it) last = insert_node(*it, last);
    }
    if (last && equals(last, last->next)) {
      remove_node(last);
      last = last->next;
    }
    return last;
  }

  static Node* filter_points(Node* start, Node* end = nullptr) {
    if (!start) return start;
    if (!end) end = start;
    Node* p = start;
    bool again;
    do {
      again = false;
      if (!p->steiner && (equals(p, p->next) || area(p->prev, p, p->next) == 0)) {
        remove_node(p);
        p = end = p->prev;
        if (p == p->next) break;
        again = true;
      } else {
        p = p->next;
      }
    } while (again || p != end);
    return end;
  }

  void earcut_linked(Node* ear, int pass) {
    if (!ear) return;
    Node* stop = ear;
    while (ear->prev != ear->next) {
      Node* prev = ear->prev;
      Node* next = ear->next;
      if (is_ear(ear)) {
        out_.push_back({prev->i, ear->i, next->i});
        remove_node(ear);
        ear = next->next;
        stop = next->next;
        continue;
      }
      ear = next;
      if (ear == stop) {
        if (pass == 0) {
          earcut_linked(filter_points(ear), 1);
        } else if (pass == 1) {
          ear = cure_local_intersections(filter_points(ear));
          earcut_linked(ear, 2);
        } else {
          split_earcut(ear);
        }
        break;
      }
    }
  }

  static bool point_in_triangle(double ax, double ay, double bx, double by, double cx,
                                double cy, double px, double py) {
    return (cx - px) * (ay - py) >= (ax - px) * (cy - py) &&
           (ax - px) * (by - py) >= (bx - px) * (ay - py) &&
           (bx - px) * (cy - py) >= (cx - px) * (by - py);
  }

  static bool is_ear(Node* ear) {
    const Node* a = ear->prev;
    const Node* b = ear;
    const Node* c = ear->next;
    if (area(a, b, c) >= 0) return false;  // reflex
    const double x0 = std::min({a->x, b->x, c->x}), x1 = std::max({a->x, b->x, c->x});
    const double y0 = std::min({a->y, b->y, c->y}), y1 = std::max({a->y, b->y, c->y});
    for (const Node* p = c->next; p != a; p = p->next) {
      if (p->x >= x0 && p->x <= x1 && p->y >= y0 && p->y <= y1 &&
          point_in_triangle(a->x, a->y, b->x, b->y, c->x, c->y, p->x, p->y) &&
          area(p->prev, p, p->next) >= 0) {
        return false;
      }
    }
    return true;
  }

  static int sign(double v) { return (v > 0) - (v < 0); }

  static bool on_segment(const Node* p, const Node* q, const Node* r) {
    return q->x <= std::max(p->x, r->x) && q->x >= std::min(p->x, r->x) &&
           q->y <= std::max(p->y, r->y) && q->y >= std::min(p->y, r->y);
  }

  static bool intersects(const Node* p1, const Node* q1, const Node* p2, const Node* q2) {
    const int o1 = sign(area(p1, q1, p2));
    const int o2 = sign(area(p1, q1, q2));
    const int o3 = sign(area(p2, q2, p1));
    const int o4 = sign(area(p2, q2, q1));
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && on_segment(p1, p2, q1)) return true;
    if (o2 == 0 && on_segment(p1, q2, q1)) return true;
    if (o3 == 0 && on_segment(p2, p1, q2)) return true;
    if (o4 == 0 && on_segment(p2, q1, q2)) return true;
    return false;
  }

  static bool intersects_polygon(const Node* a, const Node* b) {
    const Node* p = a;
    do {
      if (p->i != a->i && p->next->i != a->i && p->i != b->i && p->next->i != b->i &&
          intersects(p, p->next, a, b)) {
        return true;
      }
      p = p->next;
    } while (p != a);
    return false;
  }

  static bool locally_inside(const Node* a, const Node* b) {
    return area(a->prev, a, a->next) < 0
               ? area(a, b, a->next) >= 0 && area(a, a->prev, b) >= 0
               : area(a, b, a->prev) < 0 || area(a, a->next, b) < 0;
  }

  static bool middle_inside(const Node* a, const Node* b) {
    const Node* p = a;
    bool inside = false;
    const double px = (a->x + b->x) / 2, py = (a->y + b->y) / 2;
    do {
      if (((p->y > py) != (p->next->y > py)) && p->next->y != p->y &&
          (px < (p->next->x - p->x) * (py - p->y) / (p->next->y - p->y) + p->x)) {
        inside = !inside;
      }
      p = p->next;
    } while (p != a);
    return inside;
  }

  static bool is_valid_diagonal(const Node* a, const Node* b) {
    return a->next->i != b->i && a->prev->i != b->i && !intersects_polygon(a, b) &&
           ((locally_inside(a, b) && locally_inside(b, a) && middle_inside(a, b) &&
             (area(a->prev, a, b->prev) != 0 || area(a, b->prev, b) != 0)) ||
            (equals(a, b) && area(a->prev, a, a->next) > 0 &&
             area(b->prev, b, b->next) > 0));
  }

  Node* split_polygon(Node* a, Node* b) {
    Node* a2 = &pool_.emplace_back(Node{a->i, a->x, a->y});
    Node* b2 = &pool_.emplace_back(Node{b->i, b->x, b->y});
    Node* an = a->next;
    Node* bp = b->prev;
    a->next = b;
    b->prev = a;
    a2->next = an;
    an->prev = a2;
    b2->next = a2;
    a2->prev = b2;
    bp->next = b2;
    b2->prev = bp;
    return b2;
  }

  Node* cure_local_intersections(Node* start) {
    Node* p = start;
    do {
      Node* a = p->prev;
      Node* b = p->next->next;
      if (!equals(a, b) && intersects(a, p, p->next, b) && locally_inside(a, b) &&
          locally_inside(b, a)) {
        out_.push_back({a->i, p->i, b->i});
        remove_node(p);
        remove_node(p->next);
        p = start = b;
      }
      p = p->next;
    } while (p != start);
    return filter_points(p);
  }

  void split_earcut(Node* start) {
    Node* a = start;
    do {
      Node* b = a->next->next;
      while (b != a->prev) {
        if (a->i != b->i && is_valid_diagonal(a, b)) {
          Node* c = split_polygon(a, b);
          a = filter_points(a, a->next);
          c = filter_points(c, c->next);
          earcut_linked(a, 0);
          earcut_linked(c, 0);
          return;
        }
        b = b->next;
      }
      a = a->next;
    } while (a != start);
  }

  Node* eliminate_holes(std::span<const std::vector<std::uint32_t>> holes, Node* outer) {
    std::vector<Node*> queue;
    for (const auto& ring : holes) {
      Node* list = linked_list(ring, false);
      if (!list) continue;
      if (list == list->next) list->steiner = true;
      queue.push_back(leftmost(list));
    }
    std::sort(queue.begin(), queue.end(), [](const Node* a, const Node* b) {
      return a->x != b->x ? a->x < b->x : a->y < b->y;
    });
    for (Node* hole : queue) outer = eliminate_hole(hole, outer);
    return outer;
  }

  static Node* leftmost(Node* start) {
    Node* p = start;
    Node* best = start;
    do {
      if (p->x < best->x || (p->x == best->x && p->y < best->y)) best = p;
      p = p->next;
    } while (p != start);
    return best;
  }

  Node* eliminate_hole(Node* hole, Node* outer) {
    Node* bridge = find_hole_bridge(hole, outer);
    if (!bridge) return outer;
    Node* bridge_reverse = split_polygon(bridge, hole);
    filter_points(bridge_reverse, bridge_reverse->next);
    return filter_points(bridge, bridge->next);
  }

  static bool sector_contains_sector(const Node* m, const Node* p) {
    return area(m->prev, m, p->prev) < 0 && area(p->next, m, m->next) < 0;
  }

  static Node* find_hole_bridge(Node* hole, Node* outer) {
    Node* p = outer;
    const double hx = hole->x, hy = hole->y;
    double qx = -std::numeric_limits<double>::infinity();
    Node* m = nullptr;
    // Nearest outer edge crossed by a ray from the hole's leftmost point
    // towards -x.
    do {
      if (hy <= p->y && hy >= p->next->y && p->next->y != p->y) {
        const double x = p->x + (hy - p->y) * (p->next->x - p->x) / (p->next->y - p->y);
        if (x <= hx && x > qx) {
          qx = x;
          m = p->x < p->next->x ? p : p->next;
          if (x == hx) return m;
        }
      }
      p = p->next;
    } while (p != outer);
    if (!m) return nullptr;

    // Prefer a visible vertex inside the triangle (hole, crossing, m) with the
    // smallest angle to the ray.
    Node* stop = m;
    const double mx = m->x, my = m->y;
    double tan_min = std::numeric_limits<double>::infinity();
    p = m;
    do {
      if (hx >= p->x && p->x >= mx && hx != p->x &&
          point_in_triangle(hy < my ? hx : qx, hy, mx, my, hy < my ? qx : hx, hy, p->x,
                            p->y)) {
        const double tan = std::abs(hy - p->y) / (hx - p->x);
        if (locally_inside(p, hole) &&
            (tan < tan_min ||
             (tan == tan_min &&
              (p->x > m->x || (p->x == m->x && sector_contains_sector(m, p)))))) {
          m = p;
          tan_min = tan;
        }
      }
      p = p->next;
    } while (p != stop);
    return m;
  }

  std::span<const Vec2> points_;
  Triangles& out_;
  std::deque<Node> pool_;
};

}  // namespace

double signed_area(std::span<const Vec2> points, std::span<const std::uint32_t> ring) {
  double sum = 0;
  for (std::size_t k = 0, j = ring.size() - 1; k < ring.size(); j = k++) {
    sum += cross(points[ring[j]], points[ring[k]]);
  }
  return 0.5 * sum;
}

std::vector<std::array<std::uint32_t, 3>> triangulate_polygon(
    std::span<const Vec2> points, std::span<const std::vector<std::uint32_t>> rings) {
  Triangles out;
  if (rings.empty() || rings[0].size() < 3) return out;
  EarClipper(points, out).run(rings);
  return out;
}

}  // namespace pendant::detail
