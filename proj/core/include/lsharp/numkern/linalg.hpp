#pragma once

#include <vector>

#include "lsharp/numkern/bigfloat.hpp"

namespace lsharp {

using ComplexMatrix = std::vector<std::vector<BigComplex>>;

/// Solves A x = b by Gaussian elimination with partial pivoting at the
/// working precision. DivisionByZero for a singular pivot.
std::vector<BigComplex> solve_linear(ComplexMatrix a, std::vector<BigComplex> b);

}  // namespace lsharp
