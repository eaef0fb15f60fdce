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
#include <span>
#include <vector>

#include "pendant/geometry.h"

namespace pendant::detail {

/// Ear-clipping triangulation of one polygon with holes. `rings[0]` is the
/// outer boundary and the rest are holes; each ring lists indices into
/// `points`. Ring orientation is normalized internally. Output triangles
/// are counter-clockwise.
std::vector<std::array<std::uint32_t, 3>> triangulate_polygon(
    std::span<const Vec2> points,
    std::span<const std::vector<std::uint32_t>> rings);

double signed_area(std::span<const Vec2> points, std::span<const std::uint32_t> ring);

}  // namespace pendant::detail
