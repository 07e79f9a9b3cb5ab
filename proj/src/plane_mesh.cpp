#include <algorithm>
#include <cmath>

#include "gbx/errors.hpp"
#include "gbx/geometry.hpp"

namespace gbx::geom {

namespace {

Point sub(const Point& a, const Point& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
double dot(const Point& a, const Point& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Point cross(const Point& a, const Point& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
Point normalized(const Point& a) {
  double n = std::sqrt(dot(a, a));
  return {a[0] / n, a[1] / n, a[2] / n};
}

}  // namespace

TriangleMesh mesh_plane(const LinearForm& form, const Region& region) {
  region.validate();
  const Point normal{form.a.to_double(), form.b.to_double(), form.c.to_double()};
  const double offset = form.d.to_double();
  if (normal[0] == 0.0 && normal[1] == 0.0 && normal[2] == 0.0) throw DegenerateFormError();

  TriangleMesh mesh;
  mesh.label = format_linear_form(form);
  mesh.kind = MeshKind::Plane;

  auto value = [&](const Point& p) { return dot(normal, p) + offset; };
  std::vector<Point> points;
  const double merge_tol = 1e-12 * region.diagonal();
  auto add = [&](const Point& p) {
    for (const auto& q : points) {
      Point d = sub(p, q);
      if (std::sqrt(dot(d, d)) <= merge_tol) return;
    }
    points.push_back(p);
  };

  // Corners lying on the plane, then crossings along each of the 12 box edges.
  for (int c = 0; c < 8; ++c) {
    Point p{(c & 1) ? region.max[0] : region.min[0], (c & 2) ? region.max[1] : region.min[1],
            (c & 4) ? region.max[2] : region.min[2]};
    if (value(p) == 0.0) add(p);
  }
  for (int axis = 0; axis < 3; ++axis) {
    const int u = (axis + 1) % 3, w = (axis + 2) % 3;
    for (int corner = 0; corner < 4; ++corner) {
      Point a{};
      a[u] = (corner & 1) ? region.max[u] : region.min[u];
      a[w] = (corner & 2) ? region.max[w] : region.min[w];
      a[axis] = region.min[axis];
      Point b = a;
      b[axis] = region.max[axis];
      double va = value(a), vb = value(b);
      if (!((va < 0.0 && vb > 0.0) || (va > 0.0 && vb < 0.0))) continue;
      // Solve along the edge directly instead of interpolating.
      Point p = a;
      p[axis] = -(normal[u] * a[u] + normal[w] * a[w] + offset) / normal[axis];
      p[axis] = std::clamp(p[axis], region.min[axis], region.max[axis]);
      add(p);
    }
  }
  if (points.size() < 3) return mesh;

  Point centre{0, 0, 0};
  for (const auto& p : points)
    for (int d = 0; d < 3; ++d) centre[d] += p[d] / static_cast<double>(points.size());
  const Point n = normalized(normal);
  const int least = static_cast<int>(std::min_element(n.begin(), n.end(),
                                                      [](double x, double y) { return std::abs(x) < std::abs(y); }) -
                                     n.begin());
  Point axis_hint{0, 0, 0};
  axis_hint[least] = 1.0;
  const Point e1 = normalized(cross(n, axis_hint));
  const Point e2 = cross(n, e1);
  std::sort(points.begin(), points.end(), [&](const Point& p, const Point& q) {
    Point dp = sub(p, centre), dq = sub(q, centre);
    return std::atan2(dot(dp, e2), dot(dp, e1)) < std::atan2(dot(dq, e2), dot(dq, e1));
  });

  mesh.vertices = points;
  for (std::uint32_t i = 1; i + 1 < points.size(); ++i) mesh.triangles.push_back({0, i, i + 1});
  return mesh;
}

}  // namespace gbx::geom
