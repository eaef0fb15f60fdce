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

#include <optional>
#include <vector>

#include "pendant/geometry.h"
#include "pendant/raster.h"

namespace pendant {

/// Piecewise-constant map from luminance to height. Bands are tested in
/// ascending threshold order with a strict less-than; the first match wins
/// and anything that matches no band gets `default_height`.
class StepFunction {
 public:
  struct Band {
    double threshold;
    double height;
    friend bool operator==(const Band&, const Band&) = default;
  };

  /// Throws InvalidArgument unless thresholds are strictly increasing in
  /// (0, 1], there is at least one band, and all heights are finite and >= 0.
  StepFunction(std::vector<Band> bands, double default_height);

  double operator()(double luma) const;

  /// Index of the matching band, or bands().size() for the default.
  std::size_t band_index(double luma) const;

  const std::vector<Band>& bands() const { return bands_; }
  double default_height() const { return default_height_; }

  friend bool operator==(const StepFunction&, const StepFunction&) = default;

 private:
  std::vector<Band> bands_;
  double default_height_;
};

/// Letters layer: black (< 0.1) prints to 3, green (< 0.7) to 5, white not
/// at all.
StepFunction base_step_function();

/// Logo layer: ascending bands (0.1 -> 11), (0.6 -> 11), (0.9 -> 15) with 7
/// as the default. The nested form of this rule tests `x > 0.9` first and so
/// sends exactly 0.9 to 15; the bands send it to 7. That is the only
/// luminance where the two disagree.
StepFunction top_step_function();

struct Range {
  double min = 0, max = 0;
  friend bool operator==(const Range&, const Range&) = default;
};

/// Row-major height grid. Rows run along y and columns along x; once ranges
/// are attached, node (0, 0) sits at (x.min, y.min) and node
/// (rows-1, cols-1) at (x.max, y.max).
struct HeightField {
  int rows = 0;
  int cols = 0;
  std::vector<double> heights;
  std::optional<Range> x_range;
  std::optional<Range> y_range;

  HeightField() = default;
  HeightField(int rows, int cols, double fill = 0.0);

  double& at(int row, int col) { return heights[index(row, col)]; }
  double at(int row, int col) const { return heights[index(row, col)]; }
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * cols + col;
  }

  bool has_range() const { return x_range.has_value() && y_range.has_value(); }

  /// Model-space position of a grid node. Requires attached ranges.
  Vec2 node_position(int row, int col) const;
  double dx() const;
  double dy() const;

  friend bool operator==(const HeightField&, const HeightField&) = default;
};

/// Applies `f` to every pixel. The result has no attached range.
HeightField quantize(const GrayImage& img, const StepFunction& f);

/// Grows the grid by `margin` cells on every side, filled with `value`.
HeightField pad(const HeightField& hf, int margin, double value);

/// Inverse of pad: drops `margin` cells from every side.
HeightField crop(const HeightField& hf, int margin);

/// Throws InvalidArgument for an empty or inverted range.
HeightField attach_range(const HeightField& hf, Range x, Range y);

/// One pass of 3x3 neighbor averaging; border nodes average over the
/// neighbors that exist.
HeightField smooth(const HeightField& hf);

}  // namespace pendant
