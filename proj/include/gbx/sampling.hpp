#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gbx/geometry.hpp"

namespace gbx::geom {

// Polynomial with coefficients rounded to double, for repeated evaluation.
class CompiledPolynomial {
 public:
  explicit CompiledPolynomial(const Polynomial& p);
  double operator()(const Point& v) const;
  std::uint32_t max_exponent() const { return max_exponent_; }

 private:
  struct FloatTerm {
    double coefficient;
    std::array<std::uint32_t, 3> exponents;
  };
  std::vector<FloatTerm> terms_;
  std::uint32_t max_exponent_ = 0;
};

// Field values at every grid corner, x fastest: index = i + n*(j + n*k), n = resolution+1.
struct ScalarGrid {
  Region region;
  std::vector<double> values;

  std::size_t points_per_axis() const { return static_cast<std::size_t>(region.resolution) + 1; }
  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const {
    const std::size_t n = points_per_axis();
    return i + n * (j + n * k);
  }
  double at(std::size_t i, std::size_t j, std::size_t k) const { return values[index(i, j, k)]; }
};

// Reference kernels (single thread) and OpenMP kernels; results are identical.
ScalarGrid sample_grid_serial(const CompiledPolynomial& f, const Region& region);
ScalarGrid sample_grid_parallel(const CompiledPolynomial& f, const Region& region);

// Marching-cubes configuration byte per cell: bit c set when corner c has value < 0.
// index = i + r*(j + r*k), r = resolution.
std::vector<std::uint8_t> classify_cells_serial(const ScalarGrid& grid);
std::vector<std::uint8_t> classify_cells_parallel(const ScalarGrid& grid);

// Triangulates the zero level set from a sampled grid and its cell classes.
TriangleMesh extract_isosurface(const ScalarGrid& grid, const std::vector<std::uint8_t>& cells);

}  // namespace gbx::geom
