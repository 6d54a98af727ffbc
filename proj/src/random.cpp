#include "gaproj/random.hpp"

#include "gaproj/errors.hpp"
#include "gaproj/inverse.hpp"

namespace gaproj {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

Rational random_coeff(Rng& rng, long bound) {
  return Rational(rng.range(-bound, bound));
}

// v^2 for a grade-1 v over an orthogonal basis: sum of metric(i) * v_i^2.
Rational vector_square(const Multivector& v) {
  Rational s;
  for (int i = 1; i <= v.sig().dim(); ++i) {
    const Rational& c = v[std::uint32_t{1} << (i - 1)];
    if (c.is_zero()) continue;
    s += Rational(v.sig().metric(i)) * c * c;
  }
  return s;
}

}  // namespace

Multivector random_multivector(const Signature& sig, Rng& rng,
                               long coeff_bound) {
  Multivector m(sig);
  for (std::uint32_t mask = 0; mask < sig.blade_count(); ++mask)
    m[mask] = random_coeff(rng, coeff_bound);
  return m;
}

Multivector random_vector(const Signature& sig, Rng& rng, long coeff_bound) {
  if (sig.dim() == 0)
    throw GenerationError("random_vector: no basis vectors in a 0-dimensional algebra");
  for (int attempt = 0; attempt < kGenerationRetries; ++attempt) {
    Multivector v(sig);
    for (int i = 1; i <= sig.dim(); ++i)
      v[std::uint32_t{1} << (i - 1)] = random_coeff(rng, coeff_bound);
    if (!v.is_zero()) return v;
  }
  throw GenerationError("random_vector: retry budget exhausted");
}

VersorFactors random_versor(const Signature& sig, Rng& rng, int max_factors,
                            long coeff_bound) {
  if (max_factors < 0)
    throw DomainError("random_versor: max_factors must be nonnegative");
  int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_factors) + 1));
  VersorFactors vf{sig, {}};
  for (int f = 0; f < k; ++f) {
    bool found = false;
    for (int attempt = 0; attempt < kGenerationRetries; ++attempt) {
      Multivector v = random_vector(sig, rng, coeff_bound);
      if (!vector_square(v).is_zero()) {
        vf.factors.push_back(std::move(v));
        found = true;
        break;
      }
    }
    if (!found)
      throw GenerationError(
          "random_versor: no invertible vector found (degenerate metric)");
  }
  return vf;
}

Multivector random_blade(const Signature& sig, Rng& rng, int grade,
                         long coeff_bound) {
  if (grade < 0 || grade > sig.dim())
    throw DomainError("random_blade: grade out of range");
  for (int attempt = 0; attempt < kGenerationRetries; ++attempt) {
    if (grade == 0) {
      Rational c = random_coeff(rng, coeff_bound);
      if (c.is_zero()) continue;
      return Multivector::scalar(sig, c);
    }
    Multivector b = random_vector(sig, rng, coeff_bound);
    for (int f = 1; f < grade; ++f)
      b = outer_product(b, random_vector(sig, rng, coeff_bound));
    // For a wedge of vectors, b * rev(b) is the Gram determinant scalar;
    // nonzero exactly when the blade is invertible.
    Multivector gram = geometric_product(b, reverse(b));
    if (!scalar_part(gram).is_zero()) return b;
  }
  throw GenerationError("random_blade: no invertible blade found");
}

Multivector random_invertible(const Signature& sig, Rng& rng,
                              long coeff_bound) {
  for (int attempt = 0; attempt < kGenerationRetries; ++attempt) {
    Multivector m = random_multivector(sig, rng, coeff_bound);
    if (inverse(m)) return m;
  }
  throw GenerationError("random_invertible: retry budget exhausted");
}

Multivector random_idempotent(const Signature& sig, Rng& rng) {
  const Rational half(1, 2);
  auto from_root = [&](Multivector u) {
    // u^2 = 1 makes both (1 + u)/2 and (1 - u)/2 idempotent.
    if (rng.flip()) u = -u;
    return half * (Multivector::scalar(sig, Rational(1)) + u);
  };
  while (true) {
    switch (rng.below(5)) {
      case 0:
        return Multivector::scalar(sig, Rational(rng.flip() ? 1 : 0));
      case 1: {
        if (sig.p() == 0) break;
        int i = 1 + static_cast<int>(rng.below(sig.p()));
        return from_root(Multivector::basis_vector(sig, i));
      }
      case 2: {
        std::vector<std::uint32_t> roots;
        for (std::uint32_t m = 1; m < sig.blade_count(); ++m)
          if (blade_mul(m, m, sig).sign == 1) roots.push_back(m);
        if (roots.empty()) break;
        std::uint32_t m = roots[rng.below(roots.size())];
        return from_root(Multivector::basis_blade(sig, m, Rational(1)));
      }
      case 3: {
        if (sig.p() < 2) break;
        int i = 1 + static_cast<int>(rng.below(sig.p()));
        int j = 1 + static_cast<int>(rng.below(sig.p() - 1));
        if (j >= i) ++j;
        long a = rng.range(1, 4);
        long b = rng.range(1, 4);
        Rational norm(a * a + b * b);
        Multivector u =
            Multivector::basis_vector(sig, i) * (Rational(a * a - b * b) / norm) +
            Multivector::basis_vector(sig, j) * (Rational(2 * a * b) / norm);
        return from_root(std::move(u));
      }
      case 4: {
        if (sig.p() == 0 || sig.r() == 0) break;
        int i = 1 + static_cast<int>(rng.below(sig.p()));
        int k = sig.p() + sig.q() + 1 + static_cast<int>(rng.below(sig.r()));
        Multivector u = Multivector::basis_vector(sig, i) +
                        Multivector::basis_vector(sig, k) *
                            Rational(rng.range(-kDefaultCoeffBound,
                                               kDefaultCoeffBound));
        return from_root(std::move(u));
      }
    }
  }
}

Multivector random_multivector(const Signature& sig, std::uint64_t seed,
                               long coeff_bound) {
  Rng rng(seed);
  return random_multivector(sig, rng, coeff_bound);
}

Multivector random_vector(const Signature& sig, std::uint64_t seed) {
  Rng rng(seed);
  return random_vector(sig, rng);
}

VersorFactors random_versor(const Signature& sig, std::uint64_t seed,
                            int max_factors) {
  Rng rng(seed);
  return random_versor(sig, rng, max_factors);
}

Multivector random_blade(const Signature& sig, std::uint64_t seed, int grade) {
  Rng rng(seed);
  return random_blade(sig, rng, grade);
}

}  // namespace gaproj
