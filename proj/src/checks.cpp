#include "gaproj/checks.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <iterator>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <json.hpp>

#include "gaproj/classify.hpp"
#include "gaproj/errors.hpp"
#include "gaproj/format.hpp"
#include "gaproj/inverse.hpp"
#include "gaproj/lift.hpp"

namespace gaproj {

void TrialContext::fail(
    std::vector<std::pair<std::string, std::string>> inputs,
    const Multivector& residual) {
  fail(std::move(inputs), format(residual));
}

void TrialContext::fail(
    std::vector<std::pair<std::string, std::string>> inputs,
    std::string residual) {
  sink->push_back({trial, std::move(inputs), std::move(residual)});
}

namespace {

Rational nonzero_coeff(Rng& rng) {
  long c = 0;
  while (c == 0) c = rng.range(-kDefaultCoeffBound, kDefaultCoeffBound);
  return Rational(c);
}

// Composition law 2*Pa(Pb(x)) = Pa(x) + Pb(x) - Pab(x) on random triples.
// The reverse kind admits every generator, so its trials keep the zero and
// idempotent corners in rotation.
void ftopo_trial(TrialContext& ctx) {
  const Signature& sig = ctx.sig;
  Multivector a(sig), b(sig);
  if (ctx.kind == ProjectionKind::Inverse) {
    a = random_invertible(sig, ctx.rng);
    b = random_invertible(sig, ctx.rng);
  } else {
    switch (ctx.trial % 4) {
      case 0: break;  // A = 0
      case 1: a = random_idempotent(sig, ctx.rng); break;
      default: a = random_multivector(sig, ctx.rng, kDefaultCoeffBound);
    }
    b = ctx.trial % 8 == 2
            ? random_idempotent(sig, ctx.rng)
            : random_multivector(sig, ctx.rng, kDefaultCoeffBound);
  }
  Multivector x = random_multivector(sig, ctx.rng, kDefaultCoeffBound);
  Multivector residual = ftopo_residual({a, ctx.kind}, {b, ctx.kind}, x);
  if (!residual.is_zero())
    ctx.fail({{"A", format(a)}, {"B", format(b)}, {"X", format(x)}}, residual);
}

Multivector identity_residual(const Multivector& a, const Multivector& b,
                              const Multivector& x, int identity) {
  Projector pa({a, ProjectionKind::Inverse});
  Projector pb({b, ProjectionKind::Inverse});
  Projector pab({geometric_product(a, b), ProjectionKind::Inverse});
  switch (identity) {
    case 1: return pb(pa(x));
    case 2: return pa(pb(x));
    case 3: return pab(x) - pb(x) - pa(x);
    case 4: return pab(x) - pb(x) + pa(x);
    case 5: return pa(pb(x)) - pa(x);
    case 6: return pb(pa(x)) - pa(x);
    default: return pa(pa(x)) - pa(x);
  }
}

// Premise-satisfying pairs are built, not sampled: disjoint index sets give
// AB = A wedge B, a shared-prefix pair gives AB = A contracted on B.
void identities_trial(TrialContext& ctx) {
  const Signature& sig = ctx.sig;
  std::vector<int> usable;
  for (int i = 1; i <= sig.dim(); ++i)
    if (sig.metric(i) != 0) usable.push_back(i);

  const bool wedge_premise = ctx.trial % 2 == 0;
  std::uint32_t mask_a = 0;
  std::uint32_t extra = 0;
  for (int idx : usable) {
    switch (ctx.rng.below(3)) {
      case 0: mask_a |= std::uint32_t{1} << (idx - 1); break;
      case 1: extra |= std::uint32_t{1} << (idx - 1); break;
      default: break;
    }
  }
  Multivector a = Multivector::basis_blade(sig, mask_a, nonzero_coeff(ctx.rng));
  std::uint32_t mask_b = wedge_premise ? extra : (mask_a | extra);
  Multivector b = Multivector::basis_blade(sig, mask_b, nonzero_coeff(ctx.rng));

  std::vector<Multivector> samples;
  for (int i = 1; i <= sig.dim(); ++i)
    samples.push_back(Multivector::basis_vector(sig, i));

  IdentityReport rep = check_identities(a, b, samples);
  if (wedge_premise && !rep.premise.outer)
    ctx.fail({{"A", format(a)}, {"B", format(b)}},
             geometric_product(a, b) - outer_product(a, b));
  if (!wedge_premise && !rep.premise.contraction)
    ctx.fail({{"A", format(a)}, {"B", format(b)}},
             geometric_product(a, b) - left_contraction(a, b));

  for (const auto& entry : rep.entries) {
    if (!entry.applicable || entry.passed) continue;
    const Multivector& x = entry.counterexamples.front();
    ctx.fail({{"A", format(a)},
              {"B", format(b)},
              {"x", format(x)},
              {"identity", std::to_string(entry.identity)}},
             identity_residual(a, b, x, entry.identity));
  }
}

// Every chain element stays grade 1 and the last equals gi(A)·x·A^-1.
void chain_trial(TrialContext& ctx) {
  const Signature& sig = ctx.sig;
  VersorFactors vf = random_versor(sig, ctx.rng, 4);
  Multivector x = random_vector(sig, ctx.rng);
  std::vector<Multivector> chain = conjugation_chain(vf, x);
  Multivector a = vf.product();

  for (const Multivector& elem : chain) {
    if (homogeneous_grade(elem) != 1) {
      ctx.fail({{"A", format(a)}, {"x", format(x)}},
               elem - grade_part(elem, 1));
      return;
    }
  }
  auto inv = inverse(a);
  if (!inv) {
    ctx.fail({{"A", format(a)}, {"x", format(x)}},
             "versor product has no inverse");
    return;
  }
  Multivector expected = geometric_product(
      geometric_product(grade_involution(a), x), *inv);
  if (!(chain.back() == expected))
    ctx.fail({{"A", format(a)}, {"x", format(x)}}, chain.back() - expected);
}

// The contraction route to scalar detection must match plain coefficient
// inspection. Scalars are rare among dense draws, so some trials force them.
void lemma_trial(TrialContext& ctx) {
  const Signature& sig = ctx.sig;
  Multivector x = random_multivector(sig, ctx.rng, kDefaultCoeffBound);
  switch (ctx.trial % 4) {
    case 0:
      x = Multivector::scalar(sig, x[0]);
      break;
    case 1: {
      if (sig.blade_count() <= 1) break;
      std::uint32_t stray =
          1 + static_cast<std::uint32_t>(ctx.rng.below(sig.blade_count() - 1));
      Multivector y = Multivector::scalar(sig, x[0]);
      y[stray] = x[stray];
      x = y;
      break;
    }
    default:
      break;
  }
  bool by_contraction = is_scalar_by_contraction(x);
  bool direct = x == Multivector::scalar(sig, x[0]);
  if (by_contraction != direct)
    ctx.fail({{"X", format(x)}}, x - Multivector::scalar(sig, x[0]));
}

// Candidates 1 + even element, classified in the lifted algebra. Asserts the
// dichotomy through the projection route and that conjugation preserves
// squares (the orthogonal-transformation half of the argument).
void nonversor_trial(TrialContext& ctx) {
  const Signature& sig = ctx.sig;
  Outermorphism om = lift_map(sig);
  const Signature ambient = om.target();

  for (int attempt = 0; attempt < kGenerationRetries; ++attempt) {
    Multivector w(sig);
    for (std::uint32_t m = 0; m < sig.blade_count(); ++m)
      if ((std::popcount(m) & 1) == 0)
        w[m] = Rational(
            ctx.rng.range(-kDefaultCoeffBound, kDefaultCoeffBound));
    w[0] += Rational(1);

    Multivector wl = om.apply(w);
    auto inv = inverse(wl);
    if (!inv) continue;

    bool versor = is_versor(wl);
    Projector p({wl, ProjectionKind::Inverse});
    Multivector gw = grade_involution(wl);
    bool all_vectors = true;
    std::optional<Multivector> witness;
    for (int i = 1; i <= ambient.dim(); ++i) {
      Multivector e = Multivector::basis_vector(ambient, i);
      Multivector conj =
          geometric_product(geometric_product(gw, e), *inv);
      Multivector square_gap =
          geometric_product(conj, conj) - geometric_product(e, e);
      if (!square_gap.is_zero())
        ctx.fail({{"W", format(wl)}, {"x", format(e)}}, square_gap);
      Multivector px = p(e);
      if (!px.is_zero() && homogeneous_grade(px) != 1) {
        all_vectors = false;
        if (!witness) witness = px - grade_part(px, 1);
      }
    }
    if (versor != all_vectors)
      ctx.fail({{"W", format(wl)}},
               witness ? format(*witness) : std::string("0"));
    return;
  }
  throw GenerationError("nonversor: no invertible candidate found");
}

// A^2 = A forces P_A after P_A = P_A / 2 under the reverse kind.
void idempotent_trial(TrialContext& ctx) {
  const Signature& sig = ctx.sig;
  Multivector a = random_idempotent(sig, ctx.rng);
  Multivector gap = geometric_product(a, a) - a;
  if (!gap.is_zero()) {
    ctx.fail({{"A", format(a)}}, gap);
    return;
  }
  Projector p({a, ProjectionKind::Reverse});
  Multivector x = random_multivector(sig, ctx.rng, kDefaultCoeffBound);
  Multivector residual = p(p(x)) - Rational(1, 2) * p(x);
  if (!residual.is_zero())
    ctx.fail({{"A", format(a)}, {"X", format(x)}}, residual);
}

std::vector<std::string> lifted_note(const Signature& sig, const char* what) {
  if (!sig.degenerate() && sig.dim() > 0) return {};
  return {std::string(what) + " evaluated in the lifted algebra Cl(" +
          lift_map(sig).target().str() + ")"};
}

std::vector<std::string> nonversor_notes(const Signature& sig) {
  return lifted_note(sig, "versor dichotomy");
}

std::vector<std::string> lemma_notes(const Signature& sig) {
  return lifted_note(sig, "contraction test");
}

}  // namespace

const std::vector<CheckDef>& check_registry() {
  static const std::vector<CheckDef> defs = {
      {"ftopo", KindPolicy::Selectable, ftopo_trial, nullptr},
      {"identities", KindPolicy::FixedInverse, identities_trial, nullptr},
      {"chain", KindPolicy::FixedInverse, chain_trial, nullptr},
      {"lemma", KindPolicy::Ignored, lemma_trial, lemma_notes},
      {"nonversor", KindPolicy::FixedInverse, nonversor_trial,
       nonversor_notes},
      {"idempotent", KindPolicy::FixedReverse, idempotent_trial, nullptr},
  };
  return defs;
}

const CheckDef* find_check(std::string_view name) {
  for (const CheckDef& def : check_registry())
    if (def.name == name) return &def;
  return nullptr;
}

ProjectionKind resolve_kind(const CheckDef& def,
                            std::optional<ProjectionKind> requested) {
  switch (def.policy) {
    case KindPolicy::Selectable:
    case KindPolicy::Ignored:
      return requested.value_or(ProjectionKind::Inverse);
    case KindPolicy::FixedInverse:
      if (requested && *requested != ProjectionKind::Inverse)
        throw UsageError("check '" + def.name +
                         "' only runs with kind inverse");
      return ProjectionKind::Inverse;
    case KindPolicy::FixedReverse:
      if (requested && *requested != ProjectionKind::Reverse)
        throw UsageError("check '" + def.name +
                         "' only runs with kind reverse");
      return ProjectionKind::Reverse;
  }
  throw UsageError("bad kind policy");
}

namespace {

void run_one(const CheckDef& def, const Signature& sig, ProjectionKind kind,
             std::uint64_t seed, std::uint64_t trial,
             std::vector<CheckFailure>& sink) {
  TrialContext ctx{sig, kind, trial, Rng(mix_seed(seed, trial)), &sink};
  try {
    def.trial(ctx);
  } catch (const GaError& e) {
    // A trial that cannot complete is itself a failure; both run modes take
    // this path so reports stay identical.
    ctx.fail({}, std::string("trial aborted: ") + e.what());
  }
}

}  // namespace

CheckReport run_check(std::string_view name, const Signature& sig,
                      std::optional<ProjectionKind> kind, std::uint64_t trials,
                      std::uint64_t seed, RunMode mode) {
  const CheckDef* def = find_check(name);
  if (!def) throw UsageError("unknown check '" + std::string(name) + "'");

  CheckReport report;
  report.check = def->name;
  report.algebra = sig;
  report.kind = resolve_kind(*def, kind);
  report.trials = trials;
  report.seed = seed;
  if (def->notes) report.notes = def->notes(sig);

#ifdef _OPENMP
  if (mode == RunMode::Parallel) {
    std::vector<std::vector<CheckFailure>> buckets;
    #pragma omp parallel
    {
      #pragma omp single
      buckets.resize(static_cast<std::size_t>(omp_get_num_threads()));
      std::vector<CheckFailure>& mine =
          buckets[static_cast<std::size_t>(omp_get_thread_num())];
      #pragma omp for schedule(static)
      for (long long t = 0; t < static_cast<long long>(trials); ++t)
        run_one(*def, sig, report.kind, seed,
                static_cast<std::uint64_t>(t), mine);
    }
    for (std::vector<CheckFailure>& bucket : buckets)
      report.failures.insert(report.failures.end(),
                             std::make_move_iterator(bucket.begin()),
                             std::make_move_iterator(bucket.end()));
    std::sort(report.failures.begin(), report.failures.end(),
              [](const CheckFailure& a, const CheckFailure& b) {
                return a.trial < b.trial;
              });
    return report;
  }
#else
  (void)mode;
#endif
  for (std::uint64_t t = 0; t < trials; ++t)
    run_one(*def, sig, report.kind, seed, t, report.failures);
  return report;
}

std::string to_json(const CheckReport& report) {
  nlohmann::ordered_json j;
  j["check"] = report.check;
  j["algebra"] = report.algebra.str();
  j["kind"] = kind_name(report.kind);
  j["trials"] = report.trials;
  j["seed"] = report.seed;
  j["notes"] = report.notes;
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  for (const CheckFailure& f : report.failures) {
    nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
    for (const auto& [key, value] : f.inputs) inputs[key] = value;
    failures.push_back({{"inputs", std::move(inputs)},
                        {"residual", f.residual}});
  }
  j["failures"] = std::move(failures);
  return j.dump(2) + "\n";
}

}  // namespace gaproj
