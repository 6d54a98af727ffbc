#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gaproj/checks.hpp"
#include "gaproj/errors.hpp"
#include "gaproj/format.hpp"
#include "gaproj/lift.hpp"
#include "gaproj/parse.hpp"

namespace {

gaproj::Signature parse_algebra(const std::string& text, int max_dim) {
  try {
    return gaproj::Signature::parse(text, max_dim);
  } catch (const gaproj::DomainError& e) {
    // A malformed or oversized signature is a usage problem, not an
    // evaluation one.
    throw gaproj::UsageError(e.what());
  }
}

std::string table_text(const gaproj::Signature& sig) {
  std::vector<std::uint32_t> order = gaproj::canonical_mask_order(sig.dim());
  const std::size_t n = order.size();
  std::vector<std::vector<std::string>> grid(n + 1,
                                             std::vector<std::string>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    grid[0][i + 1] = gaproj::blade_name(order[i]);
    grid[i + 1][0] = gaproj::blade_name(order[i]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      gaproj::BladeTerm t = gaproj::blade_mul(order[i], order[j], sig);
      std::string cell;
      if (t.sign == 0)
        cell = "0";
      else
        cell = (t.sign < 0 ? "-" : "") + gaproj::blade_name(t.mask);
      grid[i + 1][j + 1] = std::move(cell);
    }
  }
  std::vector<std::size_t> width(n + 1, 0);
  for (const auto& row : grid)
    for (std::size_t c = 0; c <= n; ++c)
      width[c] = std::max(width[c], row[c].size());

  std::string out;
  for (const auto& row : grid) {
    std::string line;
    for (std::size_t c = 0; c <= n; ++c) {
      std::string cell = row[c];
      cell.resize(width[c], ' ');
      if (c > 0) line += "  ";
      line += cell;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

std::optional<gaproj::ProjectionKind> parse_kind(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return text == "reverse" ? gaproj::ProjectionKind::Reverse
                           : gaproj::ProjectionKind::Inverse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact rational geometric algebra and projection operators"};
  app.require_subcommand(1);

  int max_dim = gaproj::Signature::kMaxDim;
  app.add_option("--max-dim", max_dim,
                 "Lower the dimension ceiling (default 16)")
      ->check(CLI::Range(0, gaproj::Signature::kMaxDim));

  std::string algebra;
  std::string expr_text;
  std::string check_name;
  std::string kind_text;
  std::uint64_t trials = 100;
  std::uint64_t seed = 0;

  CLI::App* eval_cmd =
      app.add_subcommand("eval", "Evaluate an expression, print its canonical form");
  eval_cmd->fallthrough();
  eval_cmd->add_option("--algebra", algebra, "Signature p,q,r")->required();
  eval_cmd->add_option("expr", expr_text, "Expression text")->required();

  CLI::App* check_cmd =
      app.add_subcommand("check", "Run a seeded property check, print a JSON report");
  check_cmd->fallthrough();
  check_cmd
      ->add_option("name", check_name,
                   "ftopo | identities | chain | lemma | nonversor | idempotent")
      ->required();
  check_cmd->add_option("--algebra", algebra, "Signature p,q,r")->required();
  check_cmd->add_option("--kind", kind_text, "inverse | reverse")
      ->check(CLI::IsMember({"inverse", "reverse"}));
  check_cmd->add_option("--trials", trials, "Trial count (default 100)")
      ->check(CLI::PositiveNumber);
  check_cmd->add_option("--seed", seed, "64-bit seed (default 0)");

  CLI::App* lift_cmd = app.add_subcommand(
      "lift", "Evaluate an expression, embed it into the lifted algebra");
  lift_cmd->fallthrough();
  lift_cmd->add_option("--algebra", algebra, "Signature p,q,r")->required();
  lift_cmd->add_option("expr", expr_text, "Expression text")->required();

  CLI::App* table_cmd =
      app.add_subcommand("table", "Print the basis-blade Cayley table");
  table_cmd->fallthrough();
  table_cmd->add_option("--algebra", algebra, "Signature p,q,r")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    gaproj::Signature sig = parse_algebra(algebra, max_dim);
    if (*eval_cmd) {
      std::cout << gaproj::format(gaproj::eval_text(expr_text, sig)) << "\n";
    } else if (*lift_cmd) {
      gaproj::Multivector x = gaproj::eval_text(expr_text, sig);
      std::cout << gaproj::format(gaproj::lift_map(x.sig()).apply(x)) << "\n";
    } else if (*table_cmd) {
      std::cout << table_text(sig);
    } else if (*check_cmd) {
      gaproj::CheckReport report =
          gaproj::run_check(check_name, sig, parse_kind(kind_text), trials,
                            seed, gaproj::RunMode::Parallel);
      std::cout << gaproj::to_json(report);
      return report.passed() ? 0 : 1;
    }
  } catch (const gaproj::ParseError& e) {
    std::cerr << "parse error at byte " << e.offset << ": " << e.what()
              << "\n";
    return 2;
  } catch (const gaproj::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const gaproj::GaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
