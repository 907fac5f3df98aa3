#pragma once

#include <vector>

#include "almansi/rational.hpp"

namespace almansi {

using RatMatrix = std::vector<std::vector<Rational>>;

// Solve A X = B for square A by fraction-free-ish Gaussian elimination with
// partial pivoting on nonzero entries. Throws std::domain_error if A is
// singular. B holds one RHS per column.
RatMatrix solve_linear(RatMatrix a, RatMatrix b);

int matrix_rank(RatMatrix a);

// Basis of the right nullspace of a (rows x cols), one vector per basis element.
std::vector<std::vector<Rational>> nullspace(RatMatrix a);

} // namespace almansi
