#pragma once

#include <array>
#include <span>
#include <vector>

#include "gaproj/multivector.hpp"
#include "gaproj/versor.hpp"

namespace gaproj {

// Choice of the anti-automorphism applied to the generator. Inverse demands
// an invertible generator; Reverse accepts every multivector, the zero
// element included.
enum class ProjectionKind { Inverse, Reverse };

const char* kind_name(ProjectionKind kind);  // "inverse" / "reverse"

struct ProjectorSpec {
  Multivector generator;
  ProjectionKind kind;
};

// P_A(X) = (X - grade_involution(A) * X * A_dagger) / 2 with A_dagger the
// inverse or the reverse of the generator, per the kind. Construction does
// the inversion once; applying is two products.
class Projector {
 public:
  explicit Projector(const ProjectorSpec& spec);  // NotInvertibleError

  const Signature& sig() const { return bar_.sig(); }
  Multivector operator()(const Multivector& x) const;

 private:
  Multivector bar_, dagger_;
};

Multivector project(const ProjectorSpec& spec, const Multivector& x);

// 2*P_A(P_B(X)) - P_A(X) - P_B(X) + P_AB(X); identically zero. Generators
// must share kind and signature.
Multivector ftopo_residual(const ProjectorSpec& a, const ProjectorSpec& b,
                           const Multivector& x);

// How a pair of invertible blades relates: AB = A ^ B (outer factor),
// AB = A _| B (contraction factor), both, or neither. A scalar blade
// satisfies both premises at once.
struct BladePairPremise {
  bool outer;
  bool contraction;
};

BladePairPremise classify_blade_pair(const Multivector& a,
                                     const Multivector& b);

// One row per identity 1..7. Identities 1-3 apply under the outer premise,
// 4-6 under the contraction premise, 7 always; inapplicable rows are
// reported but not asserted.
struct IdentityReport {
  struct Entry {
    int identity = 0;
    bool applicable = false;
    bool passed = true;
    std::vector<Multivector> counterexamples;
  };
  BladePairPremise premise{};
  std::array<Entry, 7> entries{};

  bool all_passed() const {
    for (const Entry& e : entries)
      if (e.applicable && !e.passed) return false;
    return true;
  }
};

// Evaluates the seven identities of the inverse-kind projectors of two
// invertible blades on the sample vectors. Throws DomainError when either
// input fails the blade test.
IdentityReport check_identities(const Multivector& a, const Multivector& b,
                                std::span<const Multivector> samples);

// [x_0 = x, x_1, ..., x_r] with x_{i+1} = (-a_{r-i}) * x_i * a_{r-i}^{-1}.
// Every element is grade 1 and the last equals
// grade_involution(A) * x * A^{-1} for A the product of the factors.
std::vector<Multivector> conjugation_chain(const VersorFactors& factors,
                                           const Multivector& x);

// Entry (i,j) holds P_i(P_j(X)) next to (P_i(X) + P_j(X) - P_ij(X)) / 2;
// the pair agrees exactly.
struct CompositionTable {
  struct Entry {
    Multivector composed;
    Multivector combined;
  };
  std::size_t size = 0;
  std::vector<Entry> entries;  // row-major

  const Entry& at(std::size_t i, std::size_t j) const {
    return entries[i * size + j];
  }
};

CompositionTable projector_composition_table(
    std::span<const ProjectorSpec> specs, const Multivector& x);

}  // namespace gaproj
