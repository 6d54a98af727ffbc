#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gaproj/multivector.hpp"

namespace gaproj {

// "1" for the scalar blade, otherwise "e1^e3" style with ascending indices.
std::string blade_name(std::uint32_t mask);

// Blade masks of an n-dimensional algebra in canonical term order:
// grade first, then index tuples lexicographically.  (1,4) sorts before
// (2,3), so this is not numeric mask order.
std::vector<std::uint32_t> canonical_mask_order(int dim);

// Canonical textual form, e.g. "1 - e2 + 3/2*e1^e3".  Zero formats as "0";
// unit coefficients collapse into the sign.  parse() of the result
// evaluates back to the same multivector.
std::string format(const Multivector& x);

}  // namespace gaproj
