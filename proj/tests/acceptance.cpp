// Acceptance gate: one line per criterion, nonzero exit when any fails.
// argv[1] is the path to the gaproj CLI binary, used by criterion 9.

#include <sys/wait.h>

#include <bit>
#include <cstdio>
#include <string>
#include <vector>

#include "gaproj/checks.hpp"
#include "gaproj/classify.hpp"
#include "gaproj/format.hpp"
#include "gaproj/inverse.hpp"
#include "gaproj/lift.hpp"
#include "gaproj/parse.hpp"
#include "gaproj/projection.hpp"
#include "gaproj/random.hpp"

#include "support/naive_ga.hpp"

using namespace gaproj;

namespace {

int g_failures = 0;

void report(int index, const std::string& title, bool ok,
            const std::string& detail = "") {
  std::string line = ok ? "PASS" : "FAIL";
  line += "  " + std::to_string(index) + ". " + title;
  if (!ok && !detail.empty()) line += "  [" + detail + "]";
  std::puts(line.c_str());
  if (!ok) ++g_failures;
}

const std::vector<Signature>& core_signatures() {
  static const std::vector<Signature> sigs = {
      Signature(3, 0, 0), Signature(2, 1, 0), Signature(1, 1, 0),
      Signature(4, 0, 0)};
  return sigs;
}

// W = 1 + random even-grade element, redrawn until invertible.
Multivector random_even_invertible(const Signature& sig, Rng& rng) {
  for (int attempt = 0; attempt < kGenerationRetries; ++attempt) {
    Multivector w(sig);
    for (std::uint32_t m = 0; m < sig.blade_count(); ++m)
      if ((std::popcount(m) & 1) == 0)
        w[m] = Rational(rng.range(-kDefaultCoeffBound, kDefaultCoeffBound));
    w[0] += Rational(1);
    if (inverse(w)) return w;
  }
  throw GenerationError("no invertible even candidate");
}

bool criterion_ftopo() {
  for (const Signature& sig : core_signatures()) {
    for (ProjectionKind kind :
         {ProjectionKind::Inverse, ProjectionKind::Reverse}) {
      if (!run_check("ftopo", sig, kind, 200, 42).passed()) return false;
    }
    // The reverse kind must also hold at the A = 0 and idempotent corners.
    Rng rng(mix_seed(421, sig.blade_count()));
    for (int i = 0; i < 10; ++i) {
      Multivector zero(sig);
      Multivector idem = random_idempotent(sig, rng);
      Multivector b = random_multivector(sig, rng, kDefaultCoeffBound);
      Multivector x = random_multivector(sig, rng, kDefaultCoeffBound);
      if (!ftopo_residual({zero, ProjectionKind::Reverse},
                          {b, ProjectionKind::Reverse}, x)
               .is_zero())
        return false;
      if (!ftopo_residual({idem, ProjectionKind::Reverse},
                          {b, ProjectionKind::Reverse}, x)
               .is_zero())
        return false;
    }
  }
  return true;
}

bool criterion_blade_projection() {
  Signature s3(3, 0, 0);
  Multivector e12 = Multivector::basis_blade(s3, 0b011u);
  Multivector x0 = Multivector::basis_vector(s3, 1) +
                   Multivector::basis_vector(s3, 3);
  if (!(project({e12, ProjectionKind::Inverse}, x0) ==
        Multivector::basis_vector(s3, 1)))
    return false;

  for (const Signature& sig : core_signatures()) {
    Rng rng(mix_seed(55, sig.blade_count()));
    for (int i = 0; i < 100; ++i) {
      int grade = static_cast<int>(rng.below(sig.dim() + 1));
      Multivector a = random_blade(sig, rng, grade);
      Multivector x = random_vector(sig, rng);
      Multivector classic =
          geometric_product(left_contraction(x, a), *inverse(a));
      if (!(project({a, ProjectionKind::Inverse}, x) == classic)) return false;
    }
  }
  return true;
}

bool criterion_identities() {
  // 100 trials alternate the premises, so each signature sees 50 wedge
  // pairs and 50 contraction pairs.
  for (const Signature& sig : core_signatures())
    if (!run_check("identities", sig, std::nullopt, 100, 7).passed())
      return false;
  return true;
}

bool criterion_chain() {
  for (const Signature& sig : core_signatures())
    if (!run_check("chain", sig, std::nullopt, 100, 11).passed())
      return false;
  return true;
}

bool criterion_nonversor(std::string& detail) {
  Signature sig(4, 0, 0);
  Multivector w = Multivector::scalar(sig, Rational(2)) +
                  Multivector::basis_blade(sig, 0b1111u);
  if (is_versor(w)) {
    detail = "2+e1^e2^e3^e4 classified as a versor";
    return false;
  }

  // Brute-force sandwich through the independent term-list multiplier.
  Multivector e1 = Multivector::basis_vector(sig, 1);
  Multivector winv = *inverse(w);
  naive::MV sandwich = naive::mul(
      naive::mul(naive::from_library(grade_involution(w)),
                 naive::from_library(e1), sig),
      naive::from_library(winv), sig);
  Multivector sand = naive::to_library(sandwich, sig);
  Multivector expected_sand =
      Multivector::basis_blade(sig, 0b0001u, Rational(5, 3)) -
      Multivector::basis_blade(sig, 0b1110u, Rational(4, 3));
  if (!(sand == expected_sand)) {
    detail = "sandwich gi(W)*e1*inv(W) != 5/3*e1 - 4/3*e2^e3^e4";
    return false;
  }
  Multivector p = project({w, ProjectionKind::Inverse}, e1);
  if (!(p == Rational(1, 2) * (e1 - sand)) ||
      format(p) != "-1/3*e1 + 2/3*e2^e3^e4") {
    detail = "projection disagrees with (e1 - sandwich)/2";
    return false;
  }

  // Squares are preserved by conjugation: even candidates literally, every
  // invertible element through -f(x)*gi(f(x)) = x^2.
  Rng rng(61);
  for (int i = 0; i < 100; ++i) {
    Multivector cand = random_even_invertible(sig, rng);
    Multivector x = random_vector(sig, rng);
    Multivector f = geometric_product(
        geometric_product(grade_involution(cand), x), *inverse(cand));
    if (!(geometric_product(f, f) == geometric_product(x, x))) {
      detail = "square not preserved for even candidate";
      return false;
    }
    Multivector any = random_invertible(sig, rng);
    Multivector g = geometric_product(
        geometric_product(grade_involution(any), x), *inverse(any));
    if (!(-geometric_product(g, grade_involution(g)) ==
          geometric_product(x, x))) {
      detail = "-f*gi(f) != x^2 for invertible element";
      return false;
    }
  }
  return true;
}

bool criterion_reverse_kind() {
  Signature s3(3, 0, 0);
  Multivector zero(s3);
  Rng rng(71);
  for (int i = 0; i < 50; ++i) {
    Multivector x = random_multivector(s3, rng, kDefaultCoeffBound);
    if (!(project({zero, ProjectionKind::Reverse}, x) == Rational(1, 2) * x))
      return false;
  }

  Signature s1(1, 0, 0);
  Multivector a = Rational(1, 2) * (Multivector::scalar(s1, Rational(1)) +
                                    Multivector::basis_vector(s1, 1));
  if (!(geometric_product(a, a) == a)) return false;
  Projector p({a, ProjectionKind::Reverse});
  for (std::uint32_t m = 0; m < s1.blade_count(); ++m) {
    Multivector b = Multivector::basis_blade(s1, m);
    if (!(p(p(b)) == Rational(1, 2) * p(b))) return false;
  }
  return true;
}

bool criterion_lift() {
  for (Signature sig : {Signature(1, 0, 1), Signature(0, 0, 2)}) {
    Outermorphism om = lift_map(sig);
    for (int i = 1; i <= sig.dim(); ++i) {
      if (sig.metric(i) != 0) continue;
      Multivector img = om.vector_image(i);
      if (!geometric_product(img, img).is_zero()) return false;
    }
    if (!(om.apply(Multivector::scalar(sig, Rational(-7, 3))) ==
          Multivector::scalar(om.target(), Rational(-7, 3))))
      return false;
    Rng rng(mix_seed(81, sig.blade_count()));
    for (int i = 0; i < 100; ++i) {
      Multivector x = random_multivector(sig, rng, kDefaultCoeffBound);
      Multivector y = random_multivector(sig, rng, kDefaultCoeffBound);
      if (!(om.apply(outer_product(x, y)) ==
            outer_product(om.apply(x), om.apply(y))))
        return false;
      if (!(om.apply(geometric_product(x, y)) ==
            geometric_product(om.apply(x), om.apply(y))))
        return false;
    }
  }
  return true;
}

bool criterion_lemma() {
  // Exhaustive n = 2 sweep: every coefficient pattern over {-1,0,1}.
  for (Signature sig : {Signature(2, 0, 0), Signature(1, 1, 0),
                        Signature(0, 0, 2), Signature(1, 0, 1)}) {
    for (int pattern = 0; pattern < 81; ++pattern) {
      Multivector x(sig);
      int rest = pattern;
      for (std::uint32_t m = 0; m < 4; ++m, rest /= 3)
        x[m] = Rational(rest % 3 - 1);
      bool direct = x == Multivector::scalar(sig, x[0]);
      if (is_scalar_by_contraction(x) != direct) return false;
    }
  }
  for (Signature sig : {Signature(5, 0, 0), Signature(3, 2, 0),
                        Signature(2, 1, 1), Signature(1, 0, 1),
                        Signature(0, 0, 2)}) {
    Rng rng(mix_seed(91, sig.blade_count() + sig.p()));
    for (int i = 0; i < 100; ++i) {
      Multivector x = random_multivector(sig, rng, 2);
      if (i % 3 == 0) x = Multivector::scalar(sig, x[0]);
      bool direct = x == Multivector::scalar(sig, x[0]);
      if (is_scalar_by_contraction(x) != direct) return false;
    }
  }
  return true;
}

struct CommandResult {
  int exit_code;
  std::string out;
};

CommandResult run_command(const std::string& command) {
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buffer[4096];
  std::size_t n;
  while ((n = std::fread(buffer, 1, sizeof buffer, pipe)) > 0)
    out.append(buffer, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool criterion_cli(const std::string& cli, std::string& detail) {
  for (Signature sig : {Signature(3, 0, 0), Signature(2, 1, 0),
                        Signature(1, 1, 0), Signature(4, 0, 0),
                        Signature(1, 0, 1)}) {
    Rng rng(mix_seed(101, sig.blade_count()));
    for (int i = 0; i < 100; ++i) {
      Multivector x = random_multivector(sig, rng, 9);
      if (!(eval_text(format(x), sig) == x)) {
        detail = "format/parse round trip broke on " + format(x);
        return false;
      }
    }
  }

  std::string quoted = "\"" + cli + "\"";
  CommandResult bad_parse =
      run_command(quoted + " eval --algebra 3,0,0 'e1 +' 2>/dev/null");
  if (bad_parse.exit_code != 2) {
    detail = "parse error exit code " + std::to_string(bad_parse.exit_code);
    return false;
  }
  CommandResult not_inv =
      run_command(quoted + " eval --algebra 1,0,0 'inv(1+e1)' 2>/dev/null");
  if (not_inv.exit_code != 3) {
    detail = "NotInvertible exit code " + std::to_string(not_inv.exit_code);
    return false;
  }
  CommandResult evaled = run_command(
      quoted + " eval --algebra 3,0,0 'proj(e1^e2, e1+e3)' 2>/dev/null");
  if (evaled.exit_code != 0 || evaled.out != "e1\n") {
    detail = "eval output '" + evaled.out + "'";
    return false;
  }
  std::string check_cmd = quoted +
      " check ftopo --algebra 3,0,0 --kind inverse --trials 200 --seed 42"
      " 2>/dev/null";
  CommandResult first = run_command(check_cmd);
  CommandResult second = run_command(check_cmd);
  if (first.exit_code != 0) {
    detail = "passing check exit code " + std::to_string(first.exit_code);
    return false;
  }
  if (first.out != second.out) {
    detail = "check report not byte-identical across runs";
    return false;
  }
  if (first.out.find("\"failures\": []") == std::string::npos) {
    detail = "check report lists failures";
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <path-to-gaproj-cli>\n", argv[0]);
    return 2;
  }
  std::string cli = argv[1];
  std::string detail;

  report(1, "FToPO residual vanishes per kind per signature",
         criterion_ftopo());
  report(2, "blade projection equals (x _| A) * inv(A)",
         criterion_blade_projection());
  report(3, "seven identities hold under their premises",
         criterion_identities());
  report(4, "conjugation chains stay grade 1 and land on the sandwich",
         criterion_chain());
  detail.clear();
  report(5, "nonversor dichotomy and square preservation",
         criterion_nonversor(detail), detail);
  report(6, "reverse-kind laws: zero generator and idempotent",
         criterion_reverse_kind());
  report(7, "lift preserves products, nulls and scalars", criterion_lift());
  report(8, "contraction lemma agrees with coefficient inspection",
         criterion_lemma());
  detail.clear();
  report(9, "CLI round trip, determinism and exit codes",
         criterion_cli(cli, detail), detail);

  if (g_failures != 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::puts("all acceptance criteria passed");
  return 0;
}
