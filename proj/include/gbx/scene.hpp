#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "gbx/geometry.hpp"

namespace gbx::geom {

// One OBJ file worth of objects, e.g. the start generators or the RGB.
struct ScenePhase {
  std::string name;  // "start", "gb", "rgb"
  std::string file;  // "start.obj"
  std::vector<TriangleMesh> meshes;
};

// Wavefront OBJ text: an "o <name>" header per mesh, then "v" and 1-based "f" lines.
std::string obj_text(std::span<const TriangleMesh> meshes);

// Key/value manifest describing every phase and object.
std::string manifest_text(std::span<const ScenePhase> phases, const Region& region);

inline constexpr const char* kManifestName = "scene.manifest";

// Writes one OBJ per phase that has meshes, plus scene.manifest, into `dir`
// (created if missing). Returns the paths written. Throws IoError.
std::vector<std::filesystem::path> write_scene(const std::filesystem::path& dir, std::span<const ScenePhase> phases,
                                               const Region& region);

// Shortest decimal that round-trips to the same double.
std::string format_double(double v);

}  // namespace gbx::geom
