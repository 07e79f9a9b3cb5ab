#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "gbx/planarity.hpp"
#include "gbx/polynomial.hpp"

namespace gbx::geom {

using Point = std::array<double, 3>;

// Axis-aligned box sampled with `resolution` cells per axis.
struct Region {
  Point min{-5.0, -5.0, -5.0};
  Point max{5.0, 5.0, 5.0};
  int resolution = 64;

  static Region cube(double lo, double hi, int resolution);

  // Throws UsageError unless min < max componentwise and resolution >= 2.
  void validate() const;
  double diagonal() const;
  double cell_diagonal() const;
  double coordinate(int axis, int index) const;
};

enum class MeshKind { Surface, Plane };

struct TriangleMesh {
  std::vector<Point> vertices;
  std::vector<std::array<std::uint32_t, 3>> triangles;
  std::string label;  // source polynomial, canonical text
  MeshKind kind = MeshKind::Surface;

  bool empty() const { return triangles.empty(); }
  // "surface_<label>" or "plane_<label>".
  std::string object_name() const;
};

// Zero isosurface of p by marching cubes over the (resolution+1)^3 sample grid.
// Triangles are wound counter-clockwise seen from the p > 0 side.
TriangleMesh mesh_implicit_surface(const Polynomial& p, const Region& region);

// Plane A x + B y + C z + D = 0 clipped to the region box, fan-triangulated,
// wound counter-clockwise about (A, B, C). Empty when the plane misses the box.
TriangleMesh mesh_plane(const LinearForm& form, const Region& region);

}  // namespace gbx::geom
