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
#include <vector>

#include "pendant/geometry.h"
#include "pendant/region.h"

namespace pendant::detail {

/// Closed boundary loops of a region inside a window. Loops keep the region
/// on their left: outer boundaries run counter-clockwise, holes clockwise.
struct ContourSet {
  std::vector<Vec2> points;
  std::vector<std::vector<std::uint32_t>> loops;
};

/// Marching squares over resolution x resolution samples spanning the
/// window, with a ring of outside samples around it so every loop closes.
/// Crossings are located by bisection on the predicate; saddle cells are
/// resolved by the cell-center sample. Collinear and coincident points are
/// dropped.
ContourSet extract_contours(const Region2D& region, const Box2& window, int resolution);

}  // namespace pendant::detail
