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

#include "pendant/pipeline.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace pendant {

namespace {

using nlohmann::json;

class ConfigReader {
 public:
  explicit ConfigReader(std::filesystem::path base_dir) : base_dir_(std::move(base_dir)) {}

  PipelineConfig read(const json& root) {
    object(root, "config");
    check_keys(root, "config",
               {"schema", "name", "clip", "target_diameter", "layers", "output"});
    if (!root.contains("schema")) fail("config", "missing 'schema'");
    if (integer(root["schema"], "schema") != kConfigSchema) {
      fail("schema", "unsupported schema version (expected " + std::to_string(kConfigSchema) + ")");
    }
    PipelineConfig c;
    if (root.contains("name")) c.name = string(root["name"], "name");
    if (root.contains("clip")) c.clip = region(root["clip"], "clip");
    if (root.contains("target_diameter")) {
      c.target_diameter = positive(root["target_diameter"], "target_diameter");
    }
    if (root.contains("output")) {
      const json& out = root["output"];
      object(out, "output");
      check_keys(out, "output", {"stl", "preview"});
      if (out.contains("stl")) c.stl_output = path(out["stl"], "output.stl");
      if (out.contains("preview")) c.preview_dir = path(out["preview"], "output.preview");
    }
    if (!root.contains("layers") || !root["layers"].is_array() || root["layers"].empty()) {
      fail("layers", "expected a non-empty array of layers");
    }
    for (std::size_t k = 0; k < root["layers"].size(); ++k) {
      c.layers.push_back(layer(root["layers"][k], "layers[" + std::to_string(k) + "]"));
    }
    return c;
  }

 private:
  [[noreturn]] static void fail(const std::string& where, const std::string& what) {
    throw InvalidArgument("config " + where + ": " + what);
  }

  static void object(const json& j, const std::string& where) {
    if (!j.is_object()) fail(where, "expected an object");
  }

  static void check_keys(const json& j, const std::string& where,
                         std::initializer_list<std::string_view> allowed) {
    for (const auto& [key, value] : j.items()) {
      if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
        fail(where, "unknown key '" + key + "'");
      }
    }
  }

  static double number(const json& j, const std::string& where) {
    if (!j.is_number()) fail(where, "expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) fail(where, "expected a finite number");
    return v;
  }

  static double positive(const json& j, const std::string& where) {
    const double v = number(j, where);
    if (!(v > 0)) fail(where, "expected a positive number");
    return v;
  }

  static long long integer(const json& j, const std::string& where) {
    if (!j.is_number_integer()) fail(where, "expected an integer");
    return j.get<long long>();
  }

  static std::string string(const json& j, const std::string& where) {
    if (!j.is_string()) fail(where, "expected a string");
    return j.get<std::string>();
  }

  static bool boolean(const json& j, const std::string& where) {
    if (!j.is_boolean()) fail(where, "expected true or false");
    return j.get<bool>();
  }

  static Range range(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2) fail(where, "expected [min, max]");
    const Range r{number(j[0], where), number(j[1], where)};
    if (!(r.min < r.max)) fail(where, "min must be below max");
    return r;
  }

  static Region2D region(const json& j, const std::string& where) {
    const std::string text = string(j, where);
    try {
      return parse_region(text);
    } catch (const ParseError& e) {
      fail(where, std::string("region ") + e.what());
    }
  }

  std::filesystem::path path(const json& j, const std::string& where) const {
    std::filesystem::path p = string(j, where);
    if (p.empty()) fail(where, "empty path");
    return p.is_absolute() ? p : (base_dir_ / p).lexically_normal();
  }

  static StepFunction step(const json& j, const std::string& where) {
    if (j.is_string()) {
      const std::string name = j.get<std::string>();
      if (name == "base") return base_step_function();
      if (name == "top") return top_step_function();
      fail(where, "unknown step function '" + name + "' (expected base, top or an object)");
    }
    object(j, where);
    check_keys(j, where, {"bands", "default"});
    if (!j.contains("bands") || !j["bands"].is_array()) fail(where, "expected 'bands' array");
    std::vector<StepFunction::Band> bands;
    for (std::size_t k = 0; k < j["bands"].size(); ++k) {
      const json& b = j["bands"][k];
      const std::string at = where + ".bands[" + std::to_string(k) + "]";
      if (!b.is_array() || b.size() != 2) fail(at, "expected [threshold, height]");
      bands.push_back({number(b[0], at), number(b[1], at)});
    }
    const double fallback = j.contains("default") ? number(j["default"], where + ".default") : 0.0;
    try {
      return StepFunction(std::move(bands), fallback);
    } catch (const InvalidArgument& e) {
      fail(where, e.what());
    }
  }

  LayerSpec layer(const json& j, const std::string& where) const {
    object(j, where);
    LayerSpec spec;
    spec.name = j.contains("name") ? string(j["name"], where + ".name") : where;
    const std::string kind = j.contains("kind") ? string(j["kind"], where + ".kind") : "";
    if (kind == "heightfield") {
      check_keys(j, where, {"name", "kind", "image", "flip", "luma", "step", "pad", "x_range",
                            "y_range", "clip", "z_base", "smooth"});
      HeightfieldLayer h;
      if (!j.contains("image")) fail(where, "missing 'image'");
      h.image = path(j["image"], where + ".image");
      if (j.contains("flip")) h.flip = boolean(j["flip"], where + ".flip");
      if (j.contains("luma")) {
        try {
          h.luma = parse_luma_formula(string(j["luma"], where + ".luma"));
        } catch (const InvalidArgument& e) {
          fail(where + ".luma", e.what());
        }
      }
      if (!j.contains("step")) fail(where, "missing 'step'");
      h.step = step(j["step"], where + ".step");
      if (j.contains("pad")) {
        const json& p = j["pad"];
        object(p, where + ".pad");
        check_keys(p, where + ".pad", {"margin", "value"});
        if (p.contains("margin")) {
          const long long m = integer(p["margin"], where + ".pad.margin");
          if (m < 0 || m > 4096) fail(where + ".pad.margin", "expected 0..4096");
          h.pad_margin = static_cast<int>(m);
        }
        if (p.contains("value")) h.pad_value = number(p["value"], where + ".pad.value");
      }
      if (!j.contains("x_range") || !j.contains("y_range")) {
        fail(where, "missing 'x_range' or 'y_range'");
      }
      h.x_range = range(j["x_range"], where + ".x_range");
      h.y_range = range(j["y_range"], where + ".y_range");
      if (j.contains("clip")) h.clip = region(j["clip"], where + ".clip");
      if (j.contains("z_base")) h.z_base = number(j["z_base"], where + ".z_base");
      if (j.contains("smooth")) h.smooth = boolean(j["smooth"], where + ".smooth");
      spec.body = std::move(h);
    } else if (kind == "extrusion") {
      check_keys(j, where, {"name", "kind", "region", "z0", "z1", "resolution", "window"});
      ExtrusionLayer e;
      if (j.contains("region")) e.region = region(j["region"], where + ".region");
      if (!j.contains("z0") || !j.contains("z1")) fail(where, "missing 'z0' or 'z1'");
      e.z0 = number(j["z0"], where + ".z0");
      e.z1 = number(j["z1"], where + ".z1");
      if (!(e.z0 < e.z1)) fail(where, "z0 must be below z1");
      if (j.contains("resolution")) {
        const long long r = integer(j["resolution"], where + ".resolution");
        if (r < 2 || r > 10000) fail(where + ".resolution", "expected 2..10000");
        e.resolution = static_cast<int>(r);
      }
      if (j.contains("window")) {
        const json& w = j["window"];
        if (!w.is_array() || w.size() != 2) fail(where + ".window", "expected [[x0, x1], [y0, y1]]");
        const Range x = range(w[0], where + ".window"), y = range(w[1], where + ".window");
        e.window = Box2{x.min, x.max, y.min, y.max};
      }
      spec.body = std::move(e);
    } else {
      fail(where + ".kind", "expected 'heightfield' or 'extrusion'");
    }
    return spec;
  }

  std::filesystem::path base_dir_;
};

Region2D combine(const std::optional<Region2D>& a, const std::optional<Region2D>& b) {
  if (a && b) return region_and(*a, *b);
  if (a) return *a;
  if (b) return *b;
  // No clip anywhere: a disk far larger than any grid.
  return Region2D::disk(0, 0, 1e30);
}

template <class F>
auto stage(const std::string& layer, const std::string& name, F&& f) {
  try {
    return f();
  } catch (const LayerError&) {
    throw;
  } catch (const Error& e) {
    throw LayerError(layer, name, e);
  }
}

}  // namespace

PipelineConfig parse_config(std::string_view text, const std::filesystem::path& base_dir) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(std::string("config is not valid JSON: ") + e.what());
  }
  return ConfigReader(base_dir).read(root);
}

PipelineConfig load_config(const std::filesystem::path& path) {
  const std::vector<std::uint8_t> bytes = read_file(path.string());
  const std::string text(bytes.begin(), bytes.end());
  return parse_config(text, std::filesystem::absolute(path).parent_path());
}

TriangleMesh build_layer(const PipelineConfig& config, const LayerSpec& layer) {
  const std::string& name = layer.name;
  if (const auto* h = std::get_if<HeightfieldLayer>(&layer.body)) {
    const RasterImage img = stage(name, "image", [&] { return decode_image(read_file(h->image.string())); });
    HeightField hf = stage(name, "quantize", [&] {
      GrayImage gray = to_luminance(img, h->luma);
      if (h->flip) gray = flip_horizontal(gray);
      HeightField q = pad(quantize(gray, h->step), h->pad_margin, h->pad_value);
      return attach_range(q, h->x_range, h->y_range);
    });
    const Region2D clip = combine(config.clip, h->clip);
    return stage(name, "mesh", [&] {
      return heightfield_to_solid(hf, clip, h->z_base, SolidOptions{.smooth = h->smooth});
    });
  }
  const auto& e = std::get<ExtrusionLayer>(layer.body);
  const Region2D region = combine(config.clip, e.region);
  return stage(name, "extrude", [&] { return extrude_region(region, e.z0, e.z1, e.resolution, e.window); });
}

BuildResult build(const PipelineConfig& config) {
  if (config.layers.empty()) throw InvalidArgument("config has no layers");
  BuildResult r;
  std::vector<TriangleMesh> shells;
  for (const LayerSpec& layer : config.layers) {
    shells.push_back(build_layer(config, layer));
    r.layer_names.push_back(layer.name);
  }
  r.model = assemble(std::move(shells), config.name);
  if (config.target_diameter) {
    ScaledAssembly s = scale_to_diameter(r.model, *config.target_diameter);
    r.assembly = std::move(s.assembly);
    r.scale = s.scale;
  } else {
    r.assembly = r.model;
  }
  return r;
}

}  // namespace pendant
