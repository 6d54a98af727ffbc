#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gaproj/rational.hpp"
#include "gaproj/signature.hpp"

namespace gaproj {

// Product of two basis blades, given as bitmasks over the basis vectors
// (bit i set <=> basis vector i+1 is a factor). sign is -1, 0 or +1; it is 0
// exactly when a null basis vector is repeated.
struct BladeTerm {
  std::uint32_t mask;
  int sign;
};

// Parity of the interleave sort that merges the factors of a before the
// factors of b into ascending order. Metric is not consulted.
int reorder_sign(std::uint32_t a, std::uint32_t b);

// Full basis-blade product: reorder sign times the squares of repeated
// indices. Result mask is always a XOR b.
BladeTerm blade_mul(std::uint32_t a, std::uint32_t b, const Signature& sig);

// Dense multivector over exact rational coefficients, indexed by basis-blade
// bitmask. Value type; all algebra operations are pure functions.
class Multivector {
 public:
  explicit Multivector(const Signature& sig)
      : sig_(sig), coeffs_(sig.blade_count()) {}

  static Multivector scalar(const Signature& sig, const Rational& value);
  static Multivector basis_vector(const Signature& sig, int index);  // 1-based
  static Multivector basis_blade(const Signature& sig, std::uint32_t mask,
                                 const Rational& coeff = Rational(1));

  const Signature& sig() const { return sig_; }
  std::uint32_t size() const { return sig_.blade_count(); }

  const Rational& operator[](std::uint32_t mask) const {
    return coeffs_[mask];
  }
  Rational& operator[](std::uint32_t mask) { return coeffs_[mask]; }

  bool is_zero() const;
  bool operator==(const Multivector& o) const {
    return sig_ == o.sig_ && coeffs_ == o.coeffs_;
  }

 private:
  Signature sig_;
  std::vector<Rational> coeffs_;
};

Multivector operator+(const Multivector& x, const Multivector& y);
Multivector operator-(const Multivector& x, const Multivector& y);
Multivector operator-(const Multivector& x);
Multivector operator*(const Rational& c, const Multivector& x);
Multivector operator*(const Multivector& x, const Rational& c);

// Geometric product (bilinear extension of blade_mul). Dispatches to the
// parallel kernel for large algebras; see kernels.hpp for the explicit
// serial/parallel entry points.
Multivector geometric_product(const Multivector& x, const Multivector& y);

// Grade-(j+k) part of the geometric product, summed bilinearly.
Multivector outer_product(const Multivector& x, const Multivector& y);

// Grade-(k-j) part of the geometric product, summed bilinearly; zero when
// the left grade exceeds the right.
Multivector left_contraction(const Multivector& x, const Multivector& y);

inline Multivector operator*(const Multivector& x, const Multivector& y) {
  return geometric_product(x, y);
}

// Automorphism negating odd grades: coefficients scaled by (-1)^grade.
Multivector grade_involution(const Multivector& x);

// Anti-automorphism reversing factor order: (-1)^(k(k-1)/2) on grade k.
Multivector reverse(const Multivector& x);

// Restriction to grade k; zero for k outside [0, n].
Multivector grade_part(const Multivector& x, int k);

// Grade if every nonzero coefficient sits at that grade; the zero
// multivector reports grade 0.
std::optional<int> homogeneous_grade(const Multivector& x);

// Scalar (empty-mask) coefficient.
const Rational& scalar_part(const Multivector& x);

}  // namespace gaproj
