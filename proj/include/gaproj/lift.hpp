#pragma once

#include <vector>

#include "gaproj/multivector.hpp"

namespace gaproj {

// Outermorphism of an injective linear map on vectors: basis vectors go to
// the stored grade-1 images, basis blades to the outer product of their
// factors' images, scalars to themselves.
class Outermorphism {
 public:
  // Validates that every image is grade 1 in the target and that the images
  // are linearly independent.
  Outermorphism(const Signature& source, const Signature& target,
                std::vector<Multivector> vector_images);

  const Signature& source() const { return source_; }
  const Signature& target() const { return target_; }
  const Multivector& vector_image(int index) const;  // 1-based

  Multivector apply(const Multivector& x) const;

 private:
  Signature source_, target_;
  std::vector<Multivector> vector_images_;
};

// Embedding of Cl(p,q,r) into a nondegenerate algebra. For r = 0 and n > 0
// it is the identity map; the trivial algebra goes into Cl(1,0); otherwise
// the target is Cl(p+r, q+r) and the i-th null vector maps to a_i + b_i
// with a_i a fresh +1-square vector and b_i a fresh -1-square one, so the
// image squares to 0 and stays orthogonal to every other image. The fresh
// +1 vectors sit directly after the source's p block and the fresh -1
// vectors after its q block.
Outermorphism lift_map(const Signature& source);

// True exactly when e_i |_ a = 0 for every basis vector of the algebra,
// lifted first when the metric is degenerate. Agrees with "every non-scalar
// coefficient is zero".
bool is_scalar_by_contraction(const Multivector& a);

}  // namespace gaproj
