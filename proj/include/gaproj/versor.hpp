#pragma once

#include <vector>

#include "gaproj/errors.hpp"
#include "gaproj/multivector.hpp"

namespace gaproj {

// A versor given by its grade-1 factors, in product order. An empty factor
// list represents the scalar 1.
struct VersorFactors {
  Signature sig;
  std::vector<Multivector> factors;

  // Geometric product of the factors (1 when empty).
  Multivector product() const {
    Multivector out = Multivector::scalar(sig, Rational(1));
    for (const Multivector& f : factors) out = geometric_product(out, f);
    return out;
  }

  void validate() const {
    for (const Multivector& f : factors) {
      if (!(f.sig() == sig))
        throw MismatchError("VersorFactors: factor from a different algebra");
      if (homogeneous_grade(f) != 1 || f.is_zero())
        throw DomainError("VersorFactors: factors must be nonzero vectors");
    }
  }
};

}  // namespace gaproj
