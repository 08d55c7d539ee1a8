#pragma once

#include <cstddef>
#include <vector>

#include "spine/rational.hpp"

namespace spine {

// Dense row-major matrix of exact rationals.
using Matrix = std::vector<RationalVector>;

// Reduces m in place to reduced row echelon form (pivot entries 1, zeros
// above and below) and drops zero rows. Returns the pivot column of each
// remaining row, in increasing order.
std::vector<std::size_t> rref(Matrix& m, std::size_t columns);

std::size_t rank(Matrix m, std::size_t columns);

// Basis of {x : m x = 0} in ℚ^columns, one vector per free column.
Matrix kernel(Matrix m, std::size_t columns);

Matrix transpose(Matrix const& m, std::size_t columns);

// m (r×k) times x (k).
RationalVector apply(Matrix const& m, RationalVector const& x);

// Product of an r×k and a k×c matrix.
Matrix multiply(Matrix const& a, Matrix const& b, std::size_t columns_of_b);

}  // namespace spine
