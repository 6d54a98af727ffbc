#pragma once

#include "gaproj/multivector.hpp"

namespace gaproj {

// Which bilinear product a kernel computes. Outer keeps (a,b) blade pairs
// with disjoint masks, LeftContraction keeps pairs with a contained in b;
// both are exactly the grade-filtered parts of the geometric product.
enum class ProductKind { Geometric, Outer, LeftContraction };

namespace kernels {

// Serial reference: double loop over coefficient pairs, accumulating into
// mask a XOR b. Kept as the oracle for the parallel kernel.
Multivector product_serial(const Multivector& x, const Multivector& y,
                           ProductKind kind);

// OpenMP kernel: one output mask per iteration, each accumulated by a single
// thread. Produces exactly the coefficients of product_serial.
Multivector product_parallel(const Multivector& x, const Multivector& y,
                             ProductKind kind);

// Dispatcher used by the public product functions: parallel above a work
// threshold when OpenMP is compiled in, serial otherwise.
Multivector product(const Multivector& x, const Multivector& y,
                    ProductKind kind);

}  // namespace kernels
}  // namespace gaproj
