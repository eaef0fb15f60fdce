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
#include "pendant/heightfield.h"

#include <cmath>
#include <string>

#include "pendant/error.h"

namespace pendant {

StepFunction::StepFunction(std::vector<Band> bands, double default_height)
    : bands_(std::move(bands)), default_height_(default_height) {
  if (bands_.empty()) throw InvalidArgument("step function needs at least one band");
  auto check_height = [](double h) {
    if (!std::isfinite(h) || h < 0) {
      throw InvalidArgument("step heights must be finite and >= 0, got " +
                            std::to_string(h));
    }
  };
  check_height(default_height_);
  double previous = 0.0;
  for (const Band& band : bands_) {
    if (!(band.threshold > previous) || band.threshold > 1.0) {
      throw InvalidArgument(
          "step thresholds must be strictly increasing within (0, 1]");
    }
    check_height(band.height);
    previous = band.threshold;
  }
}

std::size_t StepFunction::band_index(double luma) const {
  for (std::size_t i = 0; i < bands_.size(); ++i) {
    if (luma < bands_[i].threshold) return i;
  }
  return bands_.size();
}

double StepFunction::operator()(double luma) const {
  const std::size_t i = band_index(luma);
  return i < bands_.size() ? bands_[i].height : default_height_;
}

StepFunction base_step_function() { return StepFunction({{0.1, 3}, {0.7, 5}}, 0); }

StepFunction top_step_function() {
  return StepFunction({{0.1, 11}, {0.6, 11}, {0.9, 15}}, 7);
}

HeightField::HeightField(int r, int c, double fill) : rows(r), cols(c) {
  if (r < 1 || c < 1) throw InvalidArgument("height field needs at least one node");
  heights.assign(static_cast<std::size_t>(r) * c, fill);
}

double HeightField::dx() const {
  if (!x_range) throw InvalidArgument("height field has no attached x range");
  return cols > 1 ? (x_range->max - x_range->min) / (cols - 1) : 0.0;
}

double HeightField::dy() const {
  if (!y_range) throw InvalidArgument("height field has no attached y range");
  return rows > 1 ? (y_range->max - y_range->min) / (rows - 1) : 0.0;
}

Vec2 HeightField::node_position(int row, int col) const {
  if (!has_range()) throw InvalidArgument("height field has no attached range");
  // Pin the last node to the range end instead of accumulating spacing.
  const double x = col == cols - 1 && cols > 1 ? x_range->max
                                               : x_range->min + col * dx();
  const double y = row == rows - 1 && rows > 1 ? y_range->max
                                               : y_range->min + row * dy();
  return {x, y};
}

HeightField quantize(const GrayImage& img, const StepFunction& f) {
  HeightField out(img.height, img.width);
  for (std::size_t i = 0; i < img.luma.size(); ++i) out.heights[i] = f(img.luma[i]);
  return out;
}

HeightField pad(const HeightField& hf, int margin, double value) {
  if (margin < 0) throw InvalidArgument("pad margin must be >= 0");
  HeightField out(hf.rows + 2 * margin, hf.cols + 2 * margin, value);
  for (int r = 0; r < hf.rows; ++r) {
    for (int c = 0; c < hf.cols; ++c) out.at(r + margin, c + margin) = hf.at(r, c);
  }
  return out;
}

HeightField crop(const HeightField& hf, int margin) {
  if (margin < 0 || 2 * margin >= hf.rows || 2 * margin >= hf.cols) {
    throw InvalidArgument("crop margin leaves no nodes");
  }
  HeightField out(hf.rows - 2 * margin, hf.cols - 2 * margin);
  for (int r = 0; r < out.rows; ++r) {
    for (int c = 0; c < out.cols; ++c) out.at(r, c) = hf.at(r + margin, c + margin);
  }
  return out;
}

HeightField attach_range(const HeightField& hf, Range x, Range y) {
  if (!(x.min < x.max) || !(y.min < y.max) || !std::isfinite(x.min) ||
      !std::isfinite(x.max) || !std::isfinite(y.min) || !std::isfinite(y.max)) {
    throw InvalidArgument("data range must satisfy min < max on both axes");
  }
  HeightField out = hf;
  out.x_range = x;
  out.y_range = y;
  return out;
}

HeightField smooth(const HeightField& hf) {
  HeightField out = hf;
  for (int r = 0; r < hf.rows; ++r) {
    for (int c = 0; c < hf.cols; ++c) {
      double sum = 0;
      int n = 0;
      for (int dr = -1; dr <= 1; ++dr) {
        for (int dc = -1; dc <= 1; ++dc) {
          const int rr = r + dr, cc = c + dc;
          if (rr < 0 || cc < 0 || rr >= hf.rows || cc >= hf.cols) continue;
          sum += hf.at(rr, cc);
          ++n;
        }
      }
      out.at(r, c) = sum / n;
    }
  }
  return out;
}

}  // namespace pendant
