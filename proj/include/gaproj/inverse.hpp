#pragma once

#include <optional>

#include "gaproj/multivector.hpp"

namespace gaproj {

// Two-sided inverse, found by exactly solving the 2^n x 2^n linear system of
// left multiplication by x. Returns nullopt when the system is singular or
// the candidate fails either product check (x is zero or a zero divisor).
std::optional<Multivector> inverse(const Multivector& x);

}  // namespace gaproj
