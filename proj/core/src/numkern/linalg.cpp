#include "lsharp/numkern/linalg.hpp"

#include <utility>

#include "lsharp/error.hpp"

namespace lsharp {

std::vector<BigComplex> solve_linear(ComplexMatrix a, std::vector<BigComplex> b) {
  const std::size_t n = b.size();
  if (a.size() != n) throw DomainError("solve_linear: shape mismatch");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    BigFloat best = abs(a[col][col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      BigFloat v = abs(a[r][col]);
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best.is_zero()) throw DivisionByZero("solve_linear: singular matrix");
    std::swap(a[col], a[piv]);
    std::swap(b[col], b[piv]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const BigComplex f = a[r][col] / a[col][col];
      if (f.is_zero()) continue;
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
      b[r] -= f * b[col];
    }
  }
  std::vector<BigComplex> x(n);
  for (std::size_t i = n; i-- > 0;) {
    BigComplex acc = b[i];
    for (std::size_t k = i + 1; k < n; ++k) acc -= a[i][k] * x[k];
    x[i] = acc / a[i][i];
  }
  return x;
}

}  // namespace lsharp
