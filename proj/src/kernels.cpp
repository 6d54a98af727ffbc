#include "gaproj/kernels.hpp"

#include <cstdint>

#include "gaproj/errors.hpp"

namespace gaproj {
namespace kernels {
namespace {

void require_same_signature(const Multivector& x, const Multivector& y) {
  if (!(x.sig() == y.sig()))
    throw MismatchError("product: operands belong to different algebras");
}

inline bool keep_pair(std::uint32_t a, std::uint32_t b, ProductKind kind) {
  switch (kind) {
    case ProductKind::Geometric:
      return true;
    case ProductKind::Outer:
      return (a & b) == 0;
    case ProductKind::LeftContraction:
      return (a & b) == a;
  }
  return false;
}

}  // namespace

Multivector product_serial(const Multivector& x, const Multivector& y,
                           ProductKind kind) {
  require_same_signature(x, y);
  const Signature& sig = x.sig();
  const std::uint32_t n = sig.blade_count();
  Multivector out(sig);
  for (std::uint32_t a = 0; a < n; ++a) {
    if (x[a].is_zero()) continue;
    for (std::uint32_t b = 0; b < n; ++b) {
      if (y[b].is_zero() || !keep_pair(a, b, kind)) continue;
      BladeTerm t = blade_mul(a, b, sig);
      if (t.sign == 0) continue;
      Rational term = x[a] * y[b];
      if (t.sign < 0)
        out[t.mask] -= term;
      else
        out[t.mask] += term;
    }
  }
  return out;
}

Multivector product_parallel(const Multivector& x, const Multivector& y,
                             ProductKind kind) {
  require_same_signature(x, y);
  const Signature& sig = x.sig();
  const std::uint32_t n = sig.blade_count();
  Multivector out(sig);
  // blade_mul(a, b).mask == a ^ b, so output mask c collects exactly the
  // pairs (a, a ^ c); every c is written by one thread only.
#pragma omp parallel for schedule(static)
  for (std::int64_t ci = 0; ci < static_cast<std::int64_t>(n); ++ci) {
    const std::uint32_t c = static_cast<std::uint32_t>(ci);
    Rational acc;
    for (std::uint32_t a = 0; a < n; ++a) {
      if (x[a].is_zero()) continue;
      const std::uint32_t b = a ^ c;
      if (y[b].is_zero() || !keep_pair(a, b, kind)) continue;
      BladeTerm t = blade_mul(a, b, sig);
      if (t.sign == 0) continue;
      Rational term = x[a] * y[b];
      if (t.sign < 0)
        acc -= term;
      else
        acc += term;
    }
    out[c] = acc;
  }
  return out;
}

Multivector product(const Multivector& x, const Multivector& y,
                    ProductKind kind) {
#ifdef _OPENMP
  // 4^n coefficient pairs; below ~4^9 the thread fan-out costs more than it
  // saves with GMP scalars.
  if (x.sig().dim() >= 9) return product_parallel(x, y, kind);
#endif
  return product_serial(x, y, kind);
}

}  // namespace kernels

Multivector geometric_product(const Multivector& x, const Multivector& y) {
  return kernels::product(x, y, ProductKind::Geometric);
}

Multivector outer_product(const Multivector& x, const Multivector& y) {
  return kernels::product(x, y, ProductKind::Outer);
}

Multivector left_contraction(const Multivector& x, const Multivector& y) {
  return kernels::product(x, y, ProductKind::LeftContraction);
}

}  // namespace gaproj
