#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gaproj/projection.hpp"
#include "gaproj/random.hpp"
#include "gaproj/signature.hpp"

namespace gaproj {

// One failed trial. Inputs and residual are canonical expression text, so a
// failure can be replayed through the evaluator verbatim.
struct CheckFailure {
  std::uint64_t trial = 0;  // merge key; not serialized
  std::vector<std::pair<std::string, std::string>> inputs;
  std::string residual;
};

struct CheckReport {
  std::string check;
  Signature algebra{0, 0, 0};
  ProjectionKind kind = ProjectionKind::Inverse;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> notes;
  std::vector<CheckFailure> failures;

  bool passed() const { return failures.empty(); }
};

// Stable field order: check, algebra, kind, trials, seed, notes, failures.
std::string to_json(const CheckReport& report);

enum class RunMode { Serial, Parallel };

// How a check treats the --kind selection.
enum class KindPolicy {
  Selectable,     // both kinds meaningful; defaults to Inverse
  FixedInverse,   // statement only holds for the inverse kind
  FixedReverse,   // statement only holds for the reverse kind
  Ignored,        // kind plays no role; echoed back as given
};

struct TrialContext {
  const Signature& sig;
  ProjectionKind kind;
  std::uint64_t trial;
  Rng rng;
  std::vector<CheckFailure>* sink;

  void fail(std::vector<std::pair<std::string, std::string>> inputs,
            const Multivector& residual);
  void fail(std::vector<std::pair<std::string, std::string>> inputs,
            std::string residual);
};

struct CheckDef {
  std::string name;
  KindPolicy policy;
  void (*trial)(TrialContext&);
  std::vector<std::string> (*notes)(const Signature&);  // may be null
};

const std::vector<CheckDef>& check_registry();
const CheckDef* find_check(std::string_view name);

// Resolves the effective kind for a check given the user's selection;
// throws UsageError when the selection contradicts the check's policy.
ProjectionKind resolve_kind(const CheckDef& def,
                            std::optional<ProjectionKind> requested);

// Runs trials t = 0..trials-1, each on its own Rng(mix_seed(seed, t)).
// Parallel mode partitions trials across threads and merges failures back
// into trial order, so both modes produce identical reports.
CheckReport run_check(std::string_view name, const Signature& sig,
                      std::optional<ProjectionKind> kind, std::uint64_t trials,
                      std::uint64_t seed, RunMode mode = RunMode::Serial);

}  // namespace gaproj
