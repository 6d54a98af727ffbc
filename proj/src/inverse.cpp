#include "gaproj/inverse.hpp"

#include <cstdint>
#include <vector>

namespace gaproj {

std::optional<Multivector> inverse(const Multivector& x) {
  const Signature& sig = x.sig();
  const std::uint32_t n = sig.blade_count();

  // Column j holds the coefficients of x * e_j; solving M y = e_scalar gives
  // the candidate right inverse.
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (std::uint32_t a = 0; a < n; ++a) {
    if (x[a].is_zero()) continue;
    for (std::uint32_t j = 0; j < n; ++j) {
      BladeTerm t = blade_mul(a, j, sig);
      if (t.sign == 0) continue;
      if (t.sign < 0)
        m[t.mask][j] -= x[a];
      else
        m[t.mask][j] += x[a];
    }
  }
  m[0][n] = Rational(1);

  // Exact Gauss-Jordan reduction; any nonzero pivot works over the
  // rationals. Column col gets its pivot in row col or the system is
  // singular.
  for (std::uint32_t col = 0; col < n; ++col) {
    std::uint32_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;  // singular
    std::swap(m[col], m[pivot]);
    const Rational inv_pivot = Rational(1) / m[col][col];
    for (std::uint32_t j = col; j <= n; ++j) m[col][j] *= inv_pivot;
    for (std::uint32_t row = 0; row < n; ++row) {
      if (row == col || m[row][col].is_zero()) continue;
      const Rational factor = m[row][col];
      for (std::uint32_t j = col; j <= n; ++j)
        m[row][j] -= factor * m[col][j];
    }
  }

  Multivector y(sig);
  for (std::uint32_t col = 0; col < n; ++col) y[col] = m[col][n];

  const Multivector one = Multivector::scalar(sig, Rational(1));
  if (!(geometric_product(x, y) == one)) return std::nullopt;
  if (!(geometric_product(y, x) == one)) return std::nullopt;
  return y;
}

}  // namespace gaproj
