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

#include <set>
#include <string>

#include "pendant/metrics.h"
#include "pendant/pipeline.h"
#include "pendant/stl.h"

namespace pendant {
namespace {

const std::filesystem::path kRecipe = std::filesystem::path(PENDANT_RECIPE_DIR) / "pendant.json";

std::string expect_config_error(const std::string& json) {
  try {
    parse_config(json, "/base");
  } catch (const InvalidArgument& e) {
    return e.what();
  }
  ADD_FAILURE() << "accepted: " << json;
  return {};
}

constexpr const char* kMinimal = R"js({"schema": 1, "layers": [
  {"kind": "extrusion", "region": "disk(0,0,10)", "z0": 0, "z1": 2, "resolution": 50}]})js";

TEST(Config, Minimal) {
  const PipelineConfig c = parse_config(kMinimal, "/base");
  ASSERT_EQ(c.layers.size(), 1u);
  EXPECT_EQ(c.layers[0].name, "layers[0]");
  const auto& e = std::get<ExtrusionLayer>(c.layers[0].body);
  EXPECT_EQ(e.resolution, 50);
  EXPECT_EQ(*e.region, Region2D::disk(0, 0, 10));
  EXPECT_FALSE(c.target_diameter);
  const BuildResult r = build(c);
  EXPECT_EQ(r.scale, 1.0);
  EXPECT_EQ(r.assembly.shells.size(), 1u);
}

TEST(Config, PathsResolveAgainstConfigDirectory) {
  const PipelineConfig c = parse_config(R"js({"schema": 1, "output": {"stl": "out/p.stl"}, "layers": [
    {"kind": "heightfield", "image": "img/a.ppm", "step": "base",
     "x_range": [0, 1], "y_range": [0, 1]}]})js",
                                        "/recipes/demo");
  EXPECT_EQ(c.stl_output, "/recipes/demo/out/p.stl");
  EXPECT_EQ(std::get<HeightfieldLayer>(c.layers[0].body).image, "/recipes/demo/img/a.ppm");
}

TEST(Config, Errors) {
  EXPECT_NE(expect_config_error("{").find("not valid JSON"), std::string::npos);
  EXPECT_NE(expect_config_error(R"js({"layers": []})js").find("schema"), std::string::npos);
  EXPECT_NE(expect_config_error(R"js({"schema": 2, "layers": []})js").find("schema"), std::string::npos);
  EXPECT_NE(expect_config_error(R"js({"schema": 1, "layers": []})js").find("layers"), std::string::npos);
  EXPECT_NE(expect_config_error(R"js({"schema": 1, "colour": 1, "layers": []})js").find("colour"),
            std::string::npos);
  const std::string region = expect_config_error(R"js({"schema": 1, "clip": "disk(0,0,1) &&", "layers": []})js");
  EXPECT_NE(region.find("position 14"), std::string::npos) << region;
  EXPECT_NE(expect_config_error(R"js({"schema": 1, "layers": [{"kind": "extrusion", "z0": 2, "z1": 1}]})js")
                .find("z0"),
            std::string::npos);
  EXPECT_NE(expect_config_error(R"js({"schema": 1, "layers": [{"kind": "cone"}]})js").find("kind"),
            std::string::npos);
  EXPECT_NE(expect_config_error(R"js({"schema": 1, "layers": [{"kind": "heightfield", "image": "a.ppm",
      "step": {"bands": [[0.5, 1], [0.2, 2]]}, "x_range": [0, 1], "y_range": [0, 1]}]})js")
                .find("layers[0].step"),
            std::string::npos);
}

TEST(Build, LayerErrorsNameLayerAndStage) {
  const PipelineConfig c = parse_config(R"js({"schema": 1, "layers": [
    {"name": "logo", "kind": "heightfield", "image": "missing.ppm", "step": "top",
     "x_range": [0, 1], "y_range": [0, 1]}]})js",
                                        "/nonexistent");
  try {
    build(c);
    FAIL();
  } catch (const LayerError& e) {
    EXPECT_NE(std::string(e.what()).find("layer 'logo', stage image"), std::string::npos) << e.what();
    EXPECT_EQ(e.category(), ErrorCategory::kIo);
  }
  const PipelineConfig empty = parse_config(R"js({"schema": 1, "layers": [
    {"name": "gone", "kind": "extrusion", "region": "disk(100,100,1)", "z0": 0, "z1": 1,
     "window": [[-1, 1], [-1, 1]]}]})js",
                                            "/");
  try {
    build(empty);
    FAIL();
  } catch (const LayerError& e) {
    EXPECT_NE(std::string(e.what()).find("layer 'gone', stage extrude"), std::string::npos) << e.what();
    EXPECT_EQ(e.category(), ErrorCategory::kInput);
  }
}

TEST(Recipe, BuildsFourLayers) {
  const PipelineConfig c = load_config(kRecipe);
  ASSERT_EQ(c.layers.size(), 4u);
  const BuildResult r = build(c);
  ASSERT_EQ(r.model.shells.size(), 4u);
  EXPECT_EQ(r.layer_names, (std::vector<std::string>{"letters", "ring", "middle", "top"}));

  auto heights = [](const TriangleMesh& m) {
    std::set<double> z;
    for (const Vec3& v : m.vertices) z.insert(v.z);
    return z;
  };
  EXPECT_EQ(heights(r.model.shells[0]), (std::set<double>{0, 3, 5}));
  EXPECT_EQ(heights(r.model.shells[1]), (std::set<double>{0, 6}));
  EXPECT_EQ(heights(r.model.shells[2]), (std::set<double>{5, 8}));
  EXPECT_EQ(heights(r.model.shells[3]), (std::set<double>{7, 11, 15}));

  const Box3 b = r.assembly.bounds();
  EXPECT_NEAR(b.max.x - b.min.x, 50, 0.01);
  EXPECT_NEAR(r.scale, 5.0 / 14.0, 1e-4);
  for (const TriangleMesh& m : r.assembly.shells) EXPECT_TRUE(validate(m).valid_solid());
}

TEST(Recipe, DeterministicStl) {
  const PipelineConfig c = load_config(kRecipe);
  const std::vector<std::uint8_t> a = write_binary(build(c).assembly);
  const std::vector<std::uint8_t> b = write_binary(build(c).assembly);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.size(), 84 + 50 * build(c).assembly.triangle_count());
}

}  // namespace
}  // namespace pendant
