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


// Command-line driver for the relief pendant pipeline.
//
// Exit codes: 0 success, 1 usage, 2 invalid input or failed validation,
// 3 file-system error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pendant/error.h"
#include "pendant/metrics.h"
#include "pendant/pipeline.h"
#include "pendant/preview.h"
#include "pendant/stl.h"

namespace {

namespace fs = std::filesystem;
using namespace pendant;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitIo = 3;

// Validation failures that are reported rather than thrown by a library call.
struct Failed {
  std::string message;
};

struct Source {
  Assembly assembly;         // geometry in the units the report uses
  std::vector<std::string> names;
  double scale = 1.0;        // physical size / model size, when known
  bool from_config = false;
};

Assembly read_stl_assembly(const fs::path& path, std::vector<std::string>& names) {
  const std::vector<std::uint8_t> bytes = read_file(path.string());
  Assembly a;
  a.name = path.stem().string();
  a.shells = split_components(to_mesh(read_stl(bytes)));
  for (std::size_t k = 0; k < a.shells.size(); ++k) names.push_back("component " + std::to_string(k));
  return a;
}

// Config input gives model units; STL input is taken as-is.
Source load_source(const std::string& config, const std::string& stl) {
  Source s;
  if (!config.empty()) {
    BuildResult r = build(load_config(config));
    s.assembly = std::move(r.model);
    s.names = std::move(r.layer_names);
    s.scale = r.scale;
    s.from_config = true;
  } else {
    s.assembly = read_stl_assembly(stl, s.names);
  }
  return s;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw InvalidArgument("malformed number '" + item + "' in --breaks");
    out.push_back(v);
  }
  return out;
}

ImageSize parse_size(const std::string& text) {
  int w = 0, h = 0;
  char x = 0, extra = 0;
  if (std::sscanf(text.c_str(), "%d%c%d%c", &w, &x, &h, &extra) != 3 || (x != 'x' && x != 'X')) {
    throw InvalidArgument("--size expects WxH, got '" + text + "'");
  }
  return {w, h};
}

int cmd_build(const std::string& config_path, std::string output, bool ascii) {
  const PipelineConfig config = load_config(config_path);
  const BuildResult r = build(config);
  if (output.empty()) {
    output = config.stl_output.empty() ? config.name + ".stl" : config.stl_output.string();
  }
  if (ascii) {
    const std::string text = write_ascii(r.assembly);
    write_file(output, {reinterpret_cast<const std::uint8_t*>(text.data()), text.size()});
  } else {
    std::ofstream out(output, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + output + " for writing");
    write_binary(r.assembly, out);
    out.close();
    if (!out) throw IoError("failed writing " + output);
  }
  std::printf("wrote %s (%zu triangles, scale %.9g)\n", output.c_str(), r.assembly.triangle_count(),
              r.scale);
  const Box3 box = r.assembly.bounds();
  std::printf("extent %.6f x %.6f x %.6f\n", box.max.x - box.min.x, box.max.y - box.min.y,
              box.max.z - box.min.z);
  std::printf("%-12s %10s %16s\n", "shell", "triangles", "volume");
  for (std::size_t k = 0; k < r.assembly.shells.size(); ++k) {
    std::printf("%-12s %10zu %16.6f\n", r.layer_names[k].c_str(),
                r.assembly.shells[k].triangles.size(), shell_volume(r.assembly.shells[k]));
  }
  return kExitOk;
}

int cmd_volume_report(const Source& s, const std::vector<double>& breaks, int slices, double voxel,
                      const std::string& format) {
  const VolumeProfile p = volume_profile(s.assembly, slices, voxel);
  const std::vector<double> fractions = filament_breaks(p, breaks);
  std::vector<double> shell_volumes;
  for (const TriangleMesh& m : s.assembly.shells) shell_volumes.push_back(shell_volume(m));

  if (format == "json") {
    nlohmann::ordered_json j;
    j["basis"] = "volume";
    j["units"] = s.from_config ? "model" : "file";
    j["scale"] = s.scale;
    j["total_volume"] = p.total_volume;
    j["shells"] = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < shell_volumes.size(); ++k) {
      j["shells"].push_back({{"name", s.names[k]}, {"volume", shell_volumes[k]}});
    }
    j["profile"] = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < p.z_samples.size(); ++k) {
      j["profile"].push_back({{"z", p.z_samples[k]}, {"fraction", p.cumulative_fraction[k]}});
    }
    j["breaks"] = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < breaks.size(); ++k) {
      j["breaks"].push_back({{"z", breaks[k]}, {"fraction", fractions[k]}});
    }
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::printf("basis: volume\nunits: %s\nscale: %.9g\n", s.from_config ? "model" : "file", s.scale);
  std::printf("total_volume: %.6f\n", p.total_volume);
  for (std::size_t k = 0; k < shell_volumes.size(); ++k) {
    std::printf("shell %-12s volume %.6f\n", s.names[k].c_str(), shell_volumes[k]);
  }
  std::printf("\n%12s %10s\n", "z", "fraction");
  for (std::size_t k = 0; k < p.z_samples.size(); ++k) {
    std::printf("%12.6f %10.6f\n", p.z_samples[k], p.cumulative_fraction[k]);
  }
  if (!breaks.empty()) std::printf("\n");
  for (std::size_t k = 0; k < breaks.size(); ++k) {
    std::printf("break z=%.6f fraction=%.6f\n", breaks[k], fractions[k]);
  }
  return kExitOk;
}

int cmd_preview(const Source& s, const std::string& dir, int frames, ImageSize size, bool overwrite) {
  const fs::path out = dir.empty() ? fs::path("preview") : fs::path(dir);
  const fs::path topdown = out / "topdown.ppm";
  const RasterImage top = render_topdown(s.assembly, pendant_palette(), size);
  const std::vector<RasterImage> turntable = render_turntable(s.assembly, frames, size);
  if (!overwrite && fs::exists(topdown)) {
    throw IoError(topdown.string() + " already exists (pass --overwrite to replace it)");
  }
  const auto paths = write_frames(turntable, out, overwrite);
  write_ppm(top, topdown, true);
  std::printf("wrote %s and %zu frames to %s\n", topdown.filename().string().c_str(), paths.size(),
              out.string().c_str());
  return kExitOk;
}

int cmd_validate(const std::string& stl) {
  const std::vector<std::uint8_t> bytes = read_file(stl);
  const StlDocument doc = read_stl(bytes);
  const TriangleMesh mesh = to_mesh(doc);
  const std::vector<TriangleMesh> parts = split_components(mesh);
  std::printf("facets: %zu\nvertices: %zu\ncomponents: %zu\n", doc.facets.size(), mesh.vertices.size(),
              parts.size());
  bool ok = !parts.empty();
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const MeshReport r = validate(parts[k]);
    std::printf(
        "component %zu: triangles %zu, boundary edges %zu, non-manifold edges %zu, "
        "misoriented edges %zu, degenerate %zu, euler %lld, volume %.6f -> %s\n",
        k, r.triangle_count, r.boundary_edges.size(), r.non_manifold_edges, r.misoriented_edges,
        r.degenerate_count, r.euler_characteristic, r.signed_volume,
        r.valid_solid() ? "ok" : "INVALID");
    ok = ok && r.valid_solid();
  }
  if (!ok) throw Failed{"mesh is not a set of closed, outward-oriented solids"};
  std::printf("valid\n");
  return kExitOk;
}

int cmd_parse_check(const std::string& expr, const std::string& config) {
  if (!config.empty()) {
    const PipelineConfig c = load_config(config);
    std::printf("config ok: %zu layers\n", c.layers.size());
    if (c.clip) std::printf("clip: %s\n", c.clip->to_string().c_str());
    return kExitOk;
  }
  std::printf("%s\n", parse_region(expr).to_string().c_str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Turns raster logos into layered, printable relief pendants."};
  app.require_subcommand(1);

  std::string config, output, stl, breaks_text, size_text = "256x256", format = "text", expr;
  int frames = 40, slices = 100;
  double voxel = 0;
  bool overwrite = false, ascii = false;

  auto* build_cmd = app.add_subcommand("build", "Build the STL for a recipe");
  build_cmd->add_option("--config", config, "Recipe file")->required();
  build_cmd->add_option("--output", output, "STL path (default: from the recipe)");
  build_cmd->add_flag("--ascii", ascii, "Write ASCII STL");

  auto* report_cmd = app.add_subcommand("volume-report", "Cumulative volume and filament-change fractions");
  auto* report_config = report_cmd->add_option("--config", config, "Recipe file (model units)");
  report_cmd->add_option("stl", stl, "STL file (file units)")->excludes(report_config);
  report_cmd->add_option("--breaks", breaks_text, "Comma-separated heights, ascending");
  report_cmd->add_option("--slices", slices, "Profile slices")->check(CLI::Range(2, 100000));
  report_cmd->add_option("--voxel", voxel, "Column spacing (default: extent / 200)");
  report_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto* preview_cmd = app.add_subcommand("preview", "Render topdown.ppm and turntable frames");
  auto* preview_config = preview_cmd->add_option("--config", config, "Recipe file");
  preview_cmd->add_option("stl", stl, "STL file")->excludes(preview_config);
  preview_cmd->add_option("--output", output, "Output directory (default: preview)");
  preview_cmd->add_option("--frames", frames, "Turntable frames")->check(CLI::Range(1, 10000));
  preview_cmd->add_option("--size", size_text, "Image size WxH");
  preview_cmd->add_flag("--overwrite", overwrite, "Replace existing images");

  auto* validate_cmd = app.add_subcommand("validate", "Check that an STL holds closed, oriented solids");
  validate_cmd->add_option("stl", stl, "STL file")->required();

  auto* parse_cmd = app.add_subcommand("parse-check", "Parse a region expression or a recipe");
  auto* parse_config = parse_cmd->add_option("--config", config, "Recipe file");
  parse_cmd->add_option("expression", expr, "Region expression")->excludes(parse_config);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  const bool needs_source = report_cmd->parsed() || preview_cmd->parsed();
  if (needs_source && config.empty() && stl.empty()) {
    std::fprintf(stderr, "error: give --config or an STL file\n");
    return kExitUsage;
  }
  if (parse_cmd->parsed() && config.empty() && expr.empty()) {
    std::fprintf(stderr, "error: give an expression or --config\n");
    return kExitUsage;
  }

  std::vector<double> breaks;
  ImageSize size;
  try {
    if (!breaks_text.empty()) breaks = parse_list(breaks_text);
    size = parse_size(size_text);
  } catch (const InvalidArgument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }

  try {
    if (build_cmd->parsed()) return cmd_build(config, output, ascii);
    if (report_cmd->parsed()) {
      return cmd_volume_report(load_source(config, stl), breaks, slices, voxel, format);
    }
    if (preview_cmd->parsed()) {
      return cmd_preview(load_source(config, stl), output, frames, size, overwrite);
    }
    if (validate_cmd->parsed()) return cmd_validate(stl);
    if (parse_cmd->parsed()) return cmd_parse_check(expr, config);
  } catch (const Failed& f) {
    std::fprintf(stderr, "error: %s\n", f.message.c_str());
    return kExitInvalid;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return e.category() == ErrorCategory::kIo ? kExitIo : kExitInvalid;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInvalid;
  }
  return kExitUsage;
}
