#include "gbx/geometry.hpp"

#include <cmath>

#include "gbx/errors.hpp"

namespace gbx::geom {

Region Region::cube(double lo, double hi, int resolution) {
  Region r{{lo, lo, lo}, {hi, hi, hi}, resolution};
  r.validate();
  return r;
}

void Region::validate() const {
  for (int d = 0; d < 3; ++d)
    if (!(min[d] < max[d]) || !std::isfinite(min[d]) || !std::isfinite(max[d]))
      throw UsageError("region: min must be below max on every axis");
  if (resolution < 2) throw UsageError("region: resolution must be at least 2");
}

double Region::diagonal() const {
  return std::hypot(max[0] - min[0], max[1] - min[1], max[2] - min[2]);
}

double Region::cell_diagonal() const { return diagonal() / resolution; }

double Region::coordinate(int axis, int index) const {
  if (index == resolution) return max[axis];
  return min[axis] + (max[axis] - min[axis]) * index / resolution;
}

std::string TriangleMesh::object_name() const {
  return (kind == MeshKind::Plane ? "plane_" : "surface_") + label;
}

}  // namespace gbx::geom
