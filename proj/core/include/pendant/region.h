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

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "pendant/geometry.h"

namespace pendant {

/// Implicit planar region: an immutable expression tree of point predicates.
/// Copies share structure and are cheap.
class Region2D {
 public:
  /// Open disk (x-cx)^2 + (y-cy)^2 < r^2, or closed (<=) when `closed`.
  struct Disk {
    double cx, cy, r;
    bool closed;
    friend bool operator==(const Disk&, const Disk&) = default;
  };
  /// a*x + b*y <= c
  struct HalfPlane {
    double a, b, c;
    friend bool operator==(const HalfPlane&, const HalfPlane&) = default;
  };
  /// max(kx*|x|, ky*|y|) > c, i.e. everything outside a centered rectangle.
  struct ChebyBand {
    double kx, ky, c;
    friend bool operator==(const ChebyBand&, const ChebyBand&) = default;
  };
  /// Closed rectangle [x0, x1] x [y0, y1].
  struct Rect {
    double x0, x1, y0, y1;
    friend bool operator==(const Rect&, const Rect&) = default;
  };
  struct Not;
  struct And;
  struct Or;
  using Node = std::variant<Disk, HalfPlane, ChebyBand, Rect, Not, And, Or>;

  static Region2D disk(double cx, double cy, double r);
  static Region2D closed_disk(double cx, double cy, double r);
  static Region2D half_plane(double a, double b, double c);
  static Region2D cheby_band(double kx, double ky, double c);
  static Region2D rect(double x0, double x1, double y0, double y1);

  bool contains(Vec2 p) const;

  /// Conservative bounds; nullopt when the region is unbounded. The box of an
  /// intersection may be empty.
  std::optional<Box2> bounding_box() const;

  /// Canonical text form, accepted by parse_region.
  std::string to_string() const;

  const Node& node() const;

  friend bool operator==(const Region2D& a, const Region2D& b);

 private:
  explicit Region2D(Node node);
  std::shared_ptr<const Node> node_;

  friend Region2D region_and(Region2D a, Region2D b);
  friend Region2D region_or(Region2D a, Region2D b);
  friend Region2D region_not(Region2D a);
};

struct Region2D::Not {
  Region2D child;
};
struct Region2D::And {
  Region2D lhs, rhs;
};
struct Region2D::Or {
  Region2D lhs, rhs;
};

inline const Region2D::Node& Region2D::node() const { return *node_; }

Region2D region_and(Region2D a, Region2D b);
Region2D region_or(Region2D a, Region2D b);
Region2D region_not(Region2D a);

/// Parses the region grammar:
///
///   expr    := and ('||' and)*
///   and     := unary ('&&' unary)*
///   unary   := '!' unary | '(' expr ')' | call
///   call    := name '(' number (',' number)* ')'
///   name    := disk | closed_disk | halfplane | cheby_band | rect
///
/// Throws ParseError carrying the character position of the problem.
Region2D parse_region(std::string_view text);

/// The pendant outline: disk of radius 70 about (0, -10) with
/// the closed clip hole of radius 7 about (0, -64) removed.
Region2D pendant_outline();

}  // namespace pendant
