#include "gaproj/multivector.hpp"

#include <bit>

#include "gaproj/errors.hpp"

namespace gaproj {

int reorder_sign(std::uint32_t a, std::uint32_t b) {
  // Each set bit of a that must move past a lower-indexed set bit of b
  // contributes one transposition.
  int swaps = 0;
  a >>= 1;
  while (a != 0) {
    swaps += std::popcount(a & b);
    a >>= 1;
  }
  return (swaps & 1) ? -1 : 1;
}

BladeTerm blade_mul(std::uint32_t a, std::uint32_t b, const Signature& sig) {
  if ((a | b) >= sig.blade_count())
    throw DomainError("blade_mul: mask out of range for signature");
  int sign = reorder_sign(a, b);
  std::uint32_t common = a & b;
  while (common != 0) {
    int index = std::countr_zero(common) + 1;
    int square = sig.metric(index);
    if (square == 0) return {a ^ b, 0};
    sign *= square;
    common &= common - 1;
  }
  return {a ^ b, sign};
}

Multivector Multivector::scalar(const Signature& sig, const Rational& value) {
  Multivector m(sig);
  m[0] = value;
  return m;
}

Multivector Multivector::basis_vector(const Signature& sig, int index) {
  if (index < 1 || index > sig.dim())
    throw DomainError("basis_vector: index out of range");
  Multivector m(sig);
  m[std::uint32_t{1} << (index - 1)] = Rational(1);
  return m;
}

Multivector Multivector::basis_blade(const Signature& sig, std::uint32_t mask,
                                     const Rational& coeff) {
  if (mask >= sig.blade_count())
    throw DomainError("basis_blade: mask out of range");
  Multivector m(sig);
  m[mask] = coeff;
  return m;
}

bool Multivector::is_zero() const {
  for (const Rational& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

namespace {

void require_same_signature(const Multivector& x, const Multivector& y) {
  if (!(x.sig() == y.sig()))
    throw MismatchError("operands belong to different algebras");
}

}  // namespace

Multivector operator+(const Multivector& x, const Multivector& y) {
  require_same_signature(x, y);
  Multivector out(x.sig());
  for (std::uint32_t m = 0; m < x.size(); ++m) out[m] = x[m] + y[m];
  return out;
}

Multivector operator-(const Multivector& x, const Multivector& y) {
  require_same_signature(x, y);
  Multivector out(x.sig());
  for (std::uint32_t m = 0; m < x.size(); ++m) out[m] = x[m] - y[m];
  return out;
}

Multivector operator-(const Multivector& x) {
  Multivector out(x.sig());
  for (std::uint32_t m = 0; m < x.size(); ++m) out[m] = -x[m];
  return out;
}

Multivector operator*(const Rational& c, const Multivector& x) {
  Multivector out(x.sig());
  for (std::uint32_t m = 0; m < x.size(); ++m) out[m] = c * x[m];
  return out;
}

Multivector operator*(const Multivector& x, const Rational& c) {
  return c * x;
}

Multivector grade_involution(const Multivector& x) {
  Multivector out(x.sig());
  for (std::uint32_t m = 0; m < x.size(); ++m)
    out[m] = (std::popcount(m) & 1) ? -x[m] : x[m];
  return out;
}

Multivector reverse(const Multivector& x) {
  Multivector out(x.sig());
  for (std::uint32_t m = 0; m < x.size(); ++m) {
    int k = std::popcount(m);
    out[m] = ((k * (k - 1) / 2) & 1) ? -x[m] : x[m];
  }
  return out;
}

Multivector grade_part(const Multivector& x, int k) {
  Multivector out(x.sig());
  if (k < 0 || k > x.sig().dim()) return out;
  for (std::uint32_t m = 0; m < x.size(); ++m)
    if (std::popcount(m) == k) out[m] = x[m];
  return out;
}

std::optional<int> homogeneous_grade(const Multivector& x) {
  int grade = -1;
  for (std::uint32_t m = 0; m < x.size(); ++m) {
    if (x[m].is_zero()) continue;
    int k = std::popcount(m);
    if (grade == -1)
      grade = k;
    else if (grade != k)
      return std::nullopt;
  }
  return grade == -1 ? 0 : grade;
}

const Rational& scalar_part(const Multivector& x) {
  return x[0];
}

}  // namespace gaproj
