#include "gaproj/projection.hpp"

#include "gaproj/classify.hpp"
#include "gaproj/errors.hpp"
#include "gaproj/inverse.hpp"

namespace gaproj {

const char* kind_name(ProjectionKind kind) {
  return kind == ProjectionKind::Inverse ? "inverse" : "reverse";
}

Projector::Projector(const ProjectorSpec& spec)
    : bar_(grade_involution(spec.generator)), dagger_(spec.generator.sig()) {
  if (spec.kind == ProjectionKind::Reverse) {
    dagger_ = reverse(spec.generator);
  } else {
    auto inv = inverse(spec.generator);
    if (!inv)
      throw NotInvertibleError(
          "inverse-kind projector needs an invertible generator");
    dagger_ = *inv;
  }
}

Multivector Projector::operator()(const Multivector& x) const {
  Multivector sandwich =
      geometric_product(geometric_product(bar_, x), dagger_);
  return Rational(1, 2) * (x - sandwich);
}

Multivector project(const ProjectorSpec& spec, const Multivector& x) {
  return Projector(spec)(x);
}

Multivector ftopo_residual(const ProjectorSpec& a, const ProjectorSpec& b,
                           const Multivector& x) {
  if (a.kind != b.kind)
    throw MismatchError("ftopo_residual: projector kinds must agree");
  if (!(a.generator.sig() == b.generator.sig()))
    throw MismatchError("ftopo_residual: generators from different algebras");
  Projector pa(a);
  Projector pb(b);
  Projector pab({geometric_product(a.generator, b.generator), a.kind});
  return Rational(2) * pa(pb(x)) - pa(x) - pb(x) + pab(x);
}

BladePairPremise classify_blade_pair(const Multivector& a,
                                     const Multivector& b) {
  Multivector ab = geometric_product(a, b);
  return {ab == outer_product(a, b), ab == left_contraction(a, b)};
}

IdentityReport check_identities(const Multivector& a, const Multivector& b,
                                std::span<const Multivector> samples) {
  if (!is_blade(a) || !is_blade(b))
    throw DomainError("check_identities: inputs must be invertible blades");

  IdentityReport report;
  report.premise = classify_blade_pair(a, b);

  Projector pa({a, ProjectionKind::Inverse});
  Projector pb({b, ProjectionKind::Inverse});
  Projector pab({geometric_product(a, b), ProjectionKind::Inverse});

  const bool wedge = report.premise.outer;
  const bool contract = report.premise.contraction;
  for (int i = 0; i < 7; ++i) {
    report.entries[i].identity = i + 1;
    report.entries[i].applicable = (i < 3) ? wedge : (i < 6) ? contract : true;
  }

  for (const Multivector& x : samples) {
    const Multivector pax = pa(x);
    const Multivector pbx = pb(x);
    auto check = [&](int idx, const Multivector& lhs, const Multivector& rhs) {
      IdentityReport::Entry& e = report.entries[idx];
      if (!e.applicable || lhs == rhs) return;
      e.passed = false;
      e.counterexamples.push_back(x);
    };
    check(0, pb(pax), Multivector(x.sig()));       // 1: P_B(P_A(x)) = 0
    check(1, pa(pbx), Multivector(x.sig()));       // 2: P_A(P_B(x)) = 0
    check(2, pab(x), pbx + pax);                   // 3: P_AB = P_B + P_A
    check(3, pab(x), pbx - pax);                   // 4: P_AB = P_B - P_A
    check(4, pa(pbx), pax);                        // 5: P_A(P_B(x)) = P_A(x)
    check(5, pb(pax), pax);                        // 6: P_B(P_A(x)) = P_A(x)
    check(6, pa(pax), pax);                        // 7: P_A(P_A(x)) = P_A(x)
  }
  return report;
}

std::vector<Multivector> conjugation_chain(const VersorFactors& factors,
                                           const Multivector& x) {
  factors.validate();
  if (homogeneous_grade(x) != 1 && !x.is_zero())
    throw DomainError("conjugation_chain: x must be grade 1");
  if (!(x.sig() == factors.sig))
    throw MismatchError("conjugation_chain: x from a different algebra");

  std::vector<Multivector> chain;
  chain.reserve(factors.factors.size() + 1);
  chain.push_back(x);
  for (auto it = factors.factors.rbegin(); it != factors.factors.rend();
       ++it) {
    // Grade-1 inverse: v / v^2, with v^2 the scalar part of v*v.
    const Multivector& v = *it;
    Rational square = scalar_part(geometric_product(v, v));
    if (square.is_zero())
      throw NotInvertibleError("conjugation_chain: null factor");
    Multivector v_inv = v * (Rational(1) / square);
    chain.push_back(geometric_product(
        geometric_product(-v, chain.back()), v_inv));
  }
  return chain;
}

CompositionTable projector_composition_table(
    std::span<const ProjectorSpec> specs, const Multivector& x) {
  CompositionTable table;
  table.size = specs.size();
  std::vector<Projector> projectors;
  projectors.reserve(specs.size());
  for (const ProjectorSpec& s : specs) {
    if (!specs.empty() && s.kind != specs.front().kind)
      throw MismatchError("composition table: projector kinds must agree");
    projectors.emplace_back(s);
  }
  const Rational half(1, 2);
  for (std::size_t i = 0; i < specs.size(); ++i) {
    for (std::size_t j = 0; j < specs.size(); ++j) {
      Projector pij({geometric_product(specs[i].generator, specs[j].generator),
                     specs[i].kind});
      Multivector composed = projectors[i](projectors[j](x));
      Multivector combined =
          half * (projectors[i](x) + projectors[j](x) - pij(x));
      table.entries.push_back({std::move(composed), std::move(combined)});
    }
  }
  return table;
}

}  // namespace gaproj
