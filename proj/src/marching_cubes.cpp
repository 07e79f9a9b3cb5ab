#include <algorithm>
#include <unordered_map>

#include "gbx/geometry.hpp"
#include "gbx/sampling.hpp"
#include "gbx/textio.hpp"

namespace gbx::geom {

namespace {

constexpr int kCorner[8][3] = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0},
                               {0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}};

constexpr int kEdge[12][2] = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6},
                              {6, 7}, {7, 4}, {0, 4}, {1, 5}, {2, 6}, {3, 7}};

// Faces as corner cycles, counter-clockwise seen from outside the cube.
constexpr int kFace[6][4] = {
    {0, 3, 2, 1},  // z = 0
    {4, 5, 6, 7},  // z = 1
    {0, 1, 5, 4},  // y = 0
    {3, 7, 6, 2},  // y = 1
    {0, 4, 7, 3},  // x = 0
    {1, 2, 6, 5},  // x = 1
};

int edge_between(int a, int b) {
  for (int e = 0; e < 12; ++e)
    if ((kEdge[e][0] == a && kEdge[e][1] == b) || (kEdge[e][0] == b && kEdge[e][1] == a)) return e;
  return -1;
}

using CaseTable = std::array<std::vector<std::array<int, 3>>, 256>;

// Builds the 256-case triangle table from face-local rules instead of a
// hand-typed table. On each face the crossing edges are paired so that corners
// with negative value are cut off (ambiguous faces included); since the rule
// only depends on the face, neighbouring cells agree and the mesh has no cracks.
// Segments run from the inside->outside crossing to the preceding crossing, which
// chains the segments into consistently oriented loops that are fan-triangulated.
CaseTable build_case_table() {
  CaseTable table;
  for (int config = 0; config < 256; ++config) {
    auto inside = [config](int c) { return ((config >> c) & 1) != 0; };
    std::array<int, 12> next;
    next.fill(-1);
    for (const auto& face : kFace) {
      std::vector<std::pair<int, bool>> crossings;  // (edge, inside->outside)
      for (int k = 0; k < 4; ++k) {
        int a = face[k], b = face[(k + 1) % 4];
        if (inside(a) != inside(b)) crossings.push_back({edge_between(a, b), inside(a)});
      }
      for (std::size_t p = 0; p < crossings.size(); ++p) {
        if (!crossings[p].second) continue;
        next[crossings[p].first] = crossings[(p + crossings.size() - 1) % crossings.size()].first;
      }
    }
    std::array<bool, 12> seen{};
    for (int start = 0; start < 12; ++start) {
      if (next[start] < 0 || seen[start]) continue;
      std::vector<int> loop;
      for (int e = start; !seen[e]; e = next[e]) {
        seen[e] = true;
        loop.push_back(e);
      }
      // Reversed fan so triangles face the positive side.
      for (std::size_t i = 1; i + 1 < loop.size(); ++i) table[config].push_back({loop[0], loop[i + 1], loop[i]});
    }
  }
  return table;
}

const CaseTable& case_table() {
  static const CaseTable table = build_case_table();
  return table;
}

}  // namespace

TriangleMesh extract_isosurface(const ScalarGrid& grid, const std::vector<std::uint8_t>& cells) {
  const auto& table = case_table();
  const std::size_t r = static_cast<std::size_t>(grid.region.resolution);
  const std::uint64_t corner_count = grid.values.size();

  TriangleMesh mesh;
  std::unordered_map<std::uint64_t, std::uint32_t> vertex_of;

  auto point_at = [&](std::size_t i, std::size_t j, std::size_t k) {
    return Point{grid.region.coordinate(0, static_cast<int>(i)), grid.region.coordinate(1, static_cast<int>(j)),
                 grid.region.coordinate(2, static_cast<int>(k))};
  };

  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t i = 0; i < r; ++i) {
        const std::uint8_t config = cells[i + r * (j + r * k)];
        if (config == 0 || config == 255) continue;

        auto vertex_on_edge = [&](int edge) -> std::uint32_t {
          // Orient every edge from its lower grid corner so shared edges interpolate identically.
          int ca = kEdge[edge][0], cb = kEdge[edge][1];
          std::size_t ia = i + kCorner[ca][0], ja = j + kCorner[ca][1], ka = k + kCorner[ca][2];
          std::size_t ib = i + kCorner[cb][0], jb = j + kCorner[cb][1], kb = k + kCorner[cb][2];
          std::uint64_t ga = grid.index(ia, ja, ka), gb = grid.index(ib, jb, kb);
          if (ga > gb) {
            std::swap(ia, ib), std::swap(ja, jb), std::swap(ka, kb);
            std::swap(ga, gb);
          }
          const double va = grid.values[ga], vb = grid.values[gb];
          const double t = va / (va - vb);
          std::uint64_t key;
          if (t <= 0.0)
            key = 3 * corner_count + ga;
          else if (t >= 1.0)
            key = 3 * corner_count + gb;
          else
            key = 3 * ga + (ib != ia ? 0 : (jb != ja ? 1 : 2));

          auto [it, inserted] = vertex_of.try_emplace(key, static_cast<std::uint32_t>(mesh.vertices.size()));
          if (inserted) {
            Point a = point_at(ia, ja, ka), b = point_at(ib, jb, kb);
            Point v;
            if (t <= 0.0)
              v = a;
            else if (t >= 1.0)
              v = b;
            else
              for (int d = 0; d < 3; ++d) v[d] = a[d] + t * (b[d] - a[d]);
            mesh.vertices.push_back(v);
          }
          return it->second;
        };

        for (const auto& tri : table[config]) {
          std::array<std::uint32_t, 3> idx{vertex_on_edge(tri[0]), vertex_on_edge(tri[1]), vertex_on_edge(tri[2])};
          if (idx[0] == idx[1] || idx[1] == idx[2] || idx[0] == idx[2]) continue;
          mesh.triangles.push_back(idx);
        }
      }
    }
  }
  return mesh;
}

TriangleMesh mesh_implicit_surface(const Polynomial& p, const Region& region) {
  CompiledPolynomial f(p);
  ScalarGrid grid = sample_grid_parallel(f, region);
  TriangleMesh mesh = extract_isosurface(grid, classify_cells_parallel(grid));
  mesh.label = print_polynomial(p);
  mesh.kind = MeshKind::Surface;
  return mesh;
}

}  // namespace gbx::geom
