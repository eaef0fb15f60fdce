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


#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "pendant/error.h"
#include "pendant/heightfield.h"

namespace pendant {
namespace {

TEST(StepFunction, BaseBands) {
  const StepFunction f = base_step_function();
  EXPECT_EQ(f(0.05), 3);
  EXPECT_EQ(f(0.32), 5);
  EXPECT_EQ(f(0.9), 0);
  EXPECT_EQ(f(0.1), 5);  // strict less-than
  EXPECT_EQ(f(0.7), 0);
}

TEST(StepFunction, TopBands) {
  const StepFunction f = top_step_function();
  EXPECT_EQ(f(0.95), 7);
  EXPECT_EQ(f(0.05), 11);
  EXPECT_EQ(f(0.5), 11);
  EXPECT_EQ(f(0.7), 15);
}

// The logo rule as nested conditionals with the high clause first.
double nested_top(double x) { return x > 0.9 ? 7 : x < 0.1 ? 11 : x < 0.6 ? 11 : 15; }

TEST(StepFunction, TopMatchesNestedRuleExceptAtPointNine) {
  const StepFunction f = top_step_function();
  for (int k = 0; k <= 1000; ++k) {
    const double x = k / 1000.0;
    if (x == 0.9) continue;
    EXPECT_EQ(f(x), nested_top(x)) << x;
  }
  EXPECT_EQ(f(std::nextafter(0.9, 0.0)), 15);
  EXPECT_EQ(f(0.9), 7);
  EXPECT_EQ(nested_top(0.9), 15);
}

TEST(StepFunction, RejectsBadBands) {
  EXPECT_THROW(StepFunction({}, 0), InvalidArgument);
  EXPECT_THROW(StepFunction({{0.5, 1}, {0.5, 2}}, 0), InvalidArgument);
  EXPECT_THROW(StepFunction({{0.0, 1}}, 0), InvalidArgument);
  EXPECT_THROW(StepFunction({{1.5, 1}}, 0), InvalidArgument);
  EXPECT_THROW(StepFunction({{0.5, -1}}, 0), InvalidArgument);
  EXPECT_THROW(StepFunction({{0.5, 1}}, std::nan("")), InvalidArgument);
}

TEST(Quantize, AppliesPerPixel) {
  GrayImage g(3, 1);
  g.luma = {0.05, 0.32, 0.9};
  const HeightField hf = quantize(g, base_step_function());
  EXPECT_EQ(hf.rows, 1);
  EXPECT_EQ(hf.cols, 3);
  EXPECT_EQ(hf.heights, (std::vector<double>{3, 5, 0}));
  EXPECT_FALSE(hf.has_range());
}

TEST(Pad, Examples) {
  HeightField one(1, 1, 5);
  const HeightField p = pad(one, 1, 0);
  ASSERT_EQ(p.rows, 3);
  ASSERT_EQ(p.cols, 3);
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) EXPECT_EQ(p.at(r, c), r == 1 && c == 1 ? 5 : 0);
  }
  EXPECT_EQ(pad(one, 0, 9), one);
  const HeightField big = pad(HeightField(2, 3), 2, 1);
  EXPECT_EQ(big.rows, 6);
  EXPECT_EQ(big.cols, 7);
  EXPECT_THROW(pad(one, -1, 0), InvalidArgument);
}

TEST(Pad, CropInvertsPad) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> dim(1, 30), margin(0, 4);
  std::uniform_real_distribution<double> h(0, 20);
  for (int k = 0; k < 200; ++k) {
    HeightField hf(dim(rng), dim(rng));
    for (double& v : hf.heights) v = h(rng);
    const int m = margin(rng);
    EXPECT_EQ(crop(pad(hf, m, h(rng)), m), hf);
  }
}

TEST(Range, NodePositions) {
  const HeightField hf = attach_range(HeightField(3, 3), {-1, 1}, {-1, 1});
  EXPECT_EQ(hf.node_position(1, 1).x, 0.0);
  EXPECT_EQ(hf.node_position(1, 1).y, 0.0);

  const HeightField letters = attach_range(HeightField(82, 226), {-56, 56}, {-20, 20});
  EXPECT_EQ(letters.node_position(0, 0).x, -56);
  EXPECT_EQ(letters.node_position(0, 0).y, -20);
  EXPECT_EQ(letters.node_position(81, 225).x, 56);
  EXPECT_EQ(letters.node_position(81, 225).y, 20);
  EXPECT_EQ(letters.node_position(0, 225).x, 56);
  EXPECT_EQ(letters.node_position(81, 0).y, 20);

  const HeightField two = attach_range(HeightField(2, 2), {0, 10}, {0, 10});
  EXPECT_EQ(two.node_position(1, 0).y, 10);
  EXPECT_EQ(two.node_position(0, 1).x, 10);
  EXPECT_DOUBLE_EQ(two.dx(), 10);
}

TEST(Range, RejectsDegenerate) {
  EXPECT_THROW(attach_range(HeightField(2, 2), {1, 1}, {0, 1}), InvalidArgument);
  EXPECT_THROW(attach_range(HeightField(2, 2), {0, 1}, {2, 1}), InvalidArgument);
  EXPECT_THROW(attach_range(HeightField(2, 2), {0, std::nan("")}, {0, 1}), InvalidArgument);
}

TEST(Smooth, AveragesNeighbors) {
  HeightField hf(3, 3, 0);
  hf.at(1, 1) = 9;
  const HeightField s = smooth(hf);
  EXPECT_DOUBLE_EQ(s.at(1, 1), 1.0);
  EXPECT_DOUBLE_EQ(s.at(0, 0), 9.0 / 4);
  EXPECT_DOUBLE_EQ(s.at(0, 1), 9.0 / 6);
  const HeightField flat(4, 5, 2.5);
  EXPECT_EQ(smooth(flat), flat);
}

}  // namespace
}  // namespace pendant
