#include "gbx/scene.hpp"

#include <cerrno>
#include <charconv>
#include <cstring>
#include <fstream>

#include "gbx/errors.hpp"

namespace gbx::geom {

namespace {

std::string format_point(const Point& p) {
  return format_double(p[0]) + " " + format_double(p[1]) + " " + format_double(p[2]);
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path.string(), std::strerror(errno));
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  out.close();
  if (!out) throw IoError(path.string(), "write failed");
}

}  // namespace

std::string format_double(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::string obj_text(std::span<const TriangleMesh> meshes) {
  std::string out;
  std::size_t base = 1;
  for (const auto& m : meshes) {
    out += "o " + m.object_name() + "\n";
    for (const auto& v : m.vertices) out += "v " + format_point(v) + "\n";
    for (const auto& t : m.triangles)
      out += "f " + std::to_string(base + t[0]) + " " + std::to_string(base + t[1]) + " " +
             std::to_string(base + t[2]) + "\n";
    base += m.vertices.size();
  }
  return out;
}

std::string manifest_text(std::span<const ScenePhase> phases, const Region& region) {
  std::string out = "# gbx scene manifest\n";
  out += "format: gbx-scene/1\n";
  out += "region_min: " + format_point(region.min) + "\n";
  out += "region_max: " + format_point(region.max) + "\n";
  out += "resolution: " + std::to_string(region.resolution) + "\n";
  std::size_t count = 0;
  for (const auto& ph : phases) count += ph.meshes.empty() ? 0 : 1;
  out += "phases: " + std::to_string(count) + "\n";
  std::size_t n = 0;
  for (const auto& ph : phases) {
    if (ph.meshes.empty()) continue;
    std::string p = "phase." + std::to_string(++n) + ".";
    out += p + "name: " + ph.name + "\n";
    out += p + "file: " + ph.file + "\n";
    out += p + "objects: " + std::to_string(ph.meshes.size()) + "\n";
    for (std::size_t i = 0; i < ph.meshes.size(); ++i) {
      const auto& m = ph.meshes[i];
      std::string o = p + "object." + std::to_string(i + 1) + ".";
      out += o + "name: " + m.object_name() + "\n";
      out += o + "kind: " + (m.kind == MeshKind::Plane ? "plane" : "surface") + "\n";
      out += o + "source: " + m.label + "\n";
      out += o + "vertices: " + std::to_string(m.vertices.size()) + "\n";
      out += o + "triangles: " + std::to_string(m.triangles.size()) + "\n";
    }
  }
  return out;
}

std::vector<std::filesystem::path> write_scene(const std::filesystem::path& dir, std::span<const ScenePhase> phases,
                                               const Region& region) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError(dir.string(), ec.message());

  std::vector<std::filesystem::path> written;
  for (const auto& ph : phases) {
    if (ph.meshes.empty()) continue;
    auto path = dir / ph.file;
    write_file(path, obj_text(ph.meshes));
    written.push_back(path);
  }
  auto manifest = dir / kManifestName;
  write_file(manifest, manifest_text(phases, region));
  written.push_back(manifest);
  return written;
}

}  // namespace gbx::geom
