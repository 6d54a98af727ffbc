#include <doctest.h>

#include "gaproj/inverse.hpp"
#include "gaproj/random.hpp"

using namespace gaproj;

TEST_CASE("same seed, same stream") {
  Signature sig(3, 0, 0);
  CHECK(random_multivector(sig, 99, 4) == random_multivector(sig, 99, 4));
  CHECK(random_vector(sig, 7) == random_vector(sig, 7));
  CHECK(random_blade(sig, 55, 2) == random_blade(sig, 55, 2));
  VersorFactors a = random_versor(sig, 31, 3);
  VersorFactors b = random_versor(sig, 31, 3);
  CHECK(a.product() == b.product());
  CHECK(!(random_multivector(sig, 99, 4) == random_multivector(sig, 100, 4)));
}

TEST_CASE("mix_seed separates streams") {
  CHECK(mix_seed(42, 0) != mix_seed(42, 1));
  CHECK(mix_seed(42, 0) != mix_seed(43, 0));
}

TEST_CASE("coefficients respect the bound") {
  Signature sig(2, 1, 0);
  Rng rng(3);
  Multivector m = random_multivector(sig, rng, 2);
  for (std::uint32_t mask = 0; mask < m.size(); ++mask) {
    CHECK(!(m[mask] < Rational(-2)));
    CHECK(!(Rational(2) < m[mask]));
  }
}

TEST_CASE("random_vector is a nonzero vector") {
  Signature sig(1, 0, 1);
  Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    Multivector v = random_vector(sig, rng);
    CHECK(!v.is_zero());
    CHECK(homogeneous_grade(v) == 1);
  }
}

TEST_CASE("versor factors are invertible vectors") {
  Signature sig(2, 1, 0);
  Rng rng(6);
  for (int i = 0; i < 10; ++i) {
    VersorFactors vf = random_versor(sig, rng, 4);
    vf.validate();
    for (const Multivector& f : vf.factors) {
      CHECK(homogeneous_grade(f) == 1);
      CHECK(!scalar_part(f * f).is_zero());
    }
  }
  VersorFactors empty{sig, {}};
  CHECK(empty.product() == Multivector::scalar(sig, Rational(1)));
}

TEST_CASE("random_blade gives invertible homogeneous output") {
  Signature sig(3, 0, 0);
  Rng rng(8);
  for (int grade = 0; grade <= 3; ++grade) {
    Multivector b = random_blade(sig, rng, grade);
    CHECK(homogeneous_grade(b) == grade);
    CHECK(inverse(b).has_value());
  }
  CHECK(!random_blade(sig, rng, 0).is_zero());
  CHECK_THROWS_AS(random_blade(sig, rng, 4), DomainError);
}

TEST_CASE("random_invertible is invertible") {
  Signature sig(1, 0, 1);
  Rng rng(9);
  for (int i = 0; i < 10; ++i)
    CHECK(inverse(random_invertible(sig, rng)).has_value());
}

TEST_CASE("random_idempotent squares to itself") {
  for (Signature sig : {Signature(3, 0, 0), Signature(2, 1, 0),
                        Signature(1, 1, 0), Signature(4, 0, 0),
                        Signature(1, 0, 1)}) {
    Rng rng(mix_seed(10, sig.blade_count()));
    for (int i = 0; i < 25; ++i) {
      Multivector a = random_idempotent(sig, rng);
      CHECK(a * a == a);
    }
  }
}
