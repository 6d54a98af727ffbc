#pragma once

#include <cstdint>
#include <random>

#include "gaproj/multivector.hpp"
#include "gaproj/versor.hpp"

namespace gaproj {

// Stream-splitting mix (splitmix64): gives each trial index its own seed so
// parallel trial runners reproduce the serial sequence exactly.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

// Deterministic generator. The raw engine is the standard-specified
// mt19937_64; value mapping avoids std distributions, whose output is
// implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) { return eng_() % n; }

  // Uniform in [lo, hi], inclusive.
  long range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  bool flip() { return (eng_() & 1) != 0; }

 private:
  std::mt19937_64 eng_;
};

inline constexpr long kDefaultCoeffBound = 4;
inline constexpr int kGenerationRetries = 256;

// Dense multivector with integer coefficients in [-coeff_bound, coeff_bound].
Multivector random_multivector(const Signature& sig, Rng& rng,
                               long coeff_bound);

// Nonzero grade-1 element.
Multivector random_vector(const Signature& sig, Rng& rng,
                          long coeff_bound = kDefaultCoeffBound);

// k <= max_factors random vectors, each rejected until its square is
// nonzero. Throws GenerationError when the signature cannot supply one
// within the retry budget (heavily degenerate metrics).
VersorFactors random_versor(const Signature& sig, Rng& rng, int max_factors,
                            long coeff_bound = kDefaultCoeffBound);

// Invertible blade of the requested grade: a wedge of random vectors,
// redrawn until the result is invertible. Grade 0 gives a nonzero scalar.
Multivector random_blade(const Signature& sig, Rng& rng, int grade,
                         long coeff_bound = kDefaultCoeffBound);

// Dense multivector redrawn until it has a two-sided inverse.
Multivector random_invertible(const Signature& sig, Rng& rng,
                              long coeff_bound = kDefaultCoeffBound);

// A with A*A = A: the scalars 0 and 1, plus (1 ± u)/2 over u with u^2 = 1
// (plus-square basis vectors and blades, rational unit vectors, and
// null-direction tilts when the metric is degenerate).
Multivector random_idempotent(const Signature& sig, Rng& rng);

// Seed-taking forms of the generators (deterministic under the seed).
Multivector random_multivector(const Signature& sig, std::uint64_t seed,
                               long coeff_bound);
Multivector random_vector(const Signature& sig, std::uint64_t seed);
VersorFactors random_versor(const Signature& sig, std::uint64_t seed,
                            int max_factors);
Multivector random_blade(const Signature& sig, std::uint64_t seed, int grade);

}  // namespace gaproj
