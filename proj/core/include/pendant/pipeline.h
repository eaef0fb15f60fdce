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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pendant/error.h"
#include "pendant/heightfield.h"
#include "pendant/mesh.h"
#include "pendant/raster.h"
#include "pendant/region.h"

namespace pendant {

struct HeightfieldLayer {
  std::filesystem::path image;  // absolute after loading
  bool flip = false;
  LumaFormula luma = LumaFormula::kBt601;
  StepFunction step = base_step_function();
  int pad_margin = 0;
  double pad_value = 0;
  Range x_range, y_range;
  std::optional<Region2D> clip;
  double z_base = 0;
  bool smooth = false;
};

struct ExtrusionLayer {
  std::optional<Region2D> region;  // defaults to the global clip
  double z0 = 0, z1 = 1;
  int resolution = 200;
  std::optional<Box2> window;
};

struct LayerSpec {
  std::string name;
  std::variant<HeightfieldLayer, ExtrusionLayer> body;
};

/// A recipe: an ordered list of layers, a clip applied to every layer, and
/// an optional physical size. Relative paths are resolved against the
/// directory holding the config file.
struct PipelineConfig {
  std::string name = "pendant";
  std::optional<Region2D> clip;
  std::optional<double> target_diameter;  // millimeters of x extent
  std::vector<LayerSpec> layers;
  std::filesystem::path stl_output;  // empty when not given
  std::filesystem::path preview_dir;
};

inline constexpr int kConfigSchema = 1;

/// Parses a JSON recipe. Throws InvalidArgument naming the offending key;
/// region syntax errors keep their character position.
PipelineConfig parse_config(std::string_view json, const std::filesystem::path& base_dir);
PipelineConfig load_config(const std::filesystem::path& path);

/// Failure inside one layer, tagged with the layer name and pipeline stage.
/// Keeps the category of the underlying error.
class LayerError : public Error {
 public:
  LayerError(const std::string& layer, const std::string& stage, const Error& cause)
      : Error("layer '" + layer + "', stage " + stage + ": " + cause.what()),
        category_(cause.category()) {}
  ErrorCategory category() const noexcept override { return category_; }

 private:
  ErrorCategory category_;
};

struct BuildResult {
  Assembly model;      // model units, shells in layer order
  Assembly assembly;   // scaled to the target diameter when one is set
  double scale = 1.0;
  std::vector<std::string> layer_names;
};

/// Runs ingest, quantization, meshing, assembly and scaling.
BuildResult build(const PipelineConfig& config);

/// Mesh for a single layer in model units.
TriangleMesh build_layer(const PipelineConfig& config, const LayerSpec& layer);

}  // namespace pendant
