#pragma once

#include <cstddef>
#include <vector>

#include "gbx/rational.hpp"

namespace gbx {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Reduced row echelon form in place; returns the pivot column of each nonzero row.
std::vector<std::size_t> row_reduce(RationalMatrix& rows, std::size_t columns);

// Basis of { v : rows * v = 0 }, returned in reduced row echelon form
// (each vector's first nonzero entry is 1).
RationalMatrix nullspace(RationalMatrix rows, std::size_t columns);

}  // namespace gbx
