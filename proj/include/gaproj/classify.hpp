#pragma once

#include "gaproj/multivector.hpp"

namespace gaproj {

// Versor test by conjugation: x is a versor iff it is invertible and
// grade_involution(x) * v * inverse(x) is grade 1 for every basis vector v.
// Degenerate and trivial algebras are lifted into a nondegenerate,
// nontrivial one first and the test runs there.
bool is_versor(const Multivector& x);

// Homogeneous of some grade and a versor.
bool is_blade(const Multivector& x);

}  // namespace gaproj
