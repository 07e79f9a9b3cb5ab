#include "gbx/sampling.hpp"

#include <algorithm>

#include "gbx/errors.hpp"

namespace gbx::geom {

namespace {

double ipow(double base, std::uint32_t e) {
  double r = 1.0;
  while (e) {
    if (e & 1u) r *= base;
    base *= base;
    e >>= 1u;
  }
  return r;
}

// Usual marching-cubes corner numbering; must match marching_cubes.cpp.
constexpr int kCornerOffset[8][3] = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0},
                                     {0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}};

std::uint8_t cell_class(const ScalarGrid& g, std::size_t i, std::size_t j, std::size_t k) {
  std::uint8_t bits = 0;
  for (int c = 0; c < 8; ++c) {
    if (g.at(i + kCornerOffset[c][0], j + kCornerOffset[c][1], k + kCornerOffset[c][2]) < 0.0)
      bits |= static_cast<std::uint8_t>(1u << c);
  }
  return bits;
}

ScalarGrid empty_grid(const Region& region) {
  region.validate();
  ScalarGrid g{region, {}};
  const std::size_t n = g.points_per_axis();
  g.values.resize(n * n * n);
  return g;
}

}  // namespace

CompiledPolynomial::CompiledPolynomial(const Polynomial& p) {
  if (p.arity() != 3) throw UsageError("CompiledPolynomial: arity must be 3");
  for (const Term& t : p.terms()) {
    FloatTerm ft{t.coefficient.to_double(), {t.monomial[0], t.monomial[1], t.monomial[2]}};
    max_exponent_ = std::max({max_exponent_, ft.exponents[0], ft.exponents[1], ft.exponents[2]});
    terms_.push_back(ft);
  }
}

double CompiledPolynomial::operator()(const Point& v) const {
  double sum = 0.0;
  for (const auto& t : terms_)
    sum += t.coefficient * ipow(v[0], t.exponents[0]) * ipow(v[1], t.exponents[1]) * ipow(v[2], t.exponents[2]);
  return sum;
}

ScalarGrid sample_grid_serial(const CompiledPolynomial& f, const Region& region) {
  ScalarGrid g = empty_grid(region);
  const std::size_t n = g.points_per_axis();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) {
        Point p{region.coordinate(0, static_cast<int>(i)), region.coordinate(1, static_cast<int>(j)),
                region.coordinate(2, static_cast<int>(k))};
        g.values[g.index(i, j, k)] = f(p);
      }
  return g;
}

ScalarGrid sample_grid_parallel(const CompiledPolynomial& f, const Region& region) {
  ScalarGrid g = empty_grid(region);
  const long n = static_cast<long>(g.points_per_axis());
#pragma omp parallel for collapse(2) schedule(static)
  for (long k = 0; k < n; ++k)
    for (long j = 0; j < n; ++j)
      for (long i = 0; i < n; ++i) {
        Point p{region.coordinate(0, static_cast<int>(i)), region.coordinate(1, static_cast<int>(j)),
                region.coordinate(2, static_cast<int>(k))};
        g.values[g.index(i, j, k)] = f(p);
      }
  return g;
}

std::vector<std::uint8_t> classify_cells_serial(const ScalarGrid& grid) {
  const std::size_t r = static_cast<std::size_t>(grid.region.resolution);
  std::vector<std::uint8_t> cells(r * r * r);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t i = 0; i < r; ++i) cells[i + r * (j + r * k)] = cell_class(grid, i, j, k);
  return cells;
}

std::vector<std::uint8_t> classify_cells_parallel(const ScalarGrid& grid) {
  const long r = grid.region.resolution;
  std::vector<std::uint8_t> cells(static_cast<std::size_t>(r * r * r));
#pragma omp parallel for collapse(2) schedule(static)
  for (long k = 0; k < r; ++k)
    for (long j = 0; j < r; ++j)
      for (long i = 0; i < r; ++i)
        cells[static_cast<std::size_t>(i + r * (j + r * k))] =
            cell_class(grid, static_cast<std::size_t>(i), static_cast<std::size_t>(j), static_cast<std::size_t>(k));
  return cells;
}

}  // namespace gbx::geom
