// isospec: evaluate spectrum-based separability criteria on named states,
// sweep the Werner and two-qubit families, and audit random samples.
//
// Exit codes: 0 success, 2 usage error, 3 invalid state.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "isospec/report.hpp"
#include "isospec/scenarios.hpp"
#include "isospec/state_io.hpp"
#include "isospec/twoqubit.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitInvalidState = 3;

struct CommonOptions {
  std::string format = "csv";
  std::string out;
  double tol = isospec::kDefaultTol;
  std::uint64_t seed = 0;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", opts.out, "Write output to PATH instead of stdout");
  cmd->add_option("--tol", opts.tol, "Eigenvalue / validation tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", opts.seed, "Seed for randomized harnesses");
}

void emit(const isospec::Report& report, const CommonOptions& opts) {
  const std::string text = opts.format == "json" ? isospec::to_json(report) : isospec::to_csv(report);
  if (opts.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(opts.out);
  if (!file) throw isospec::UsageError("cannot open output file " + opts.out);
  file << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectrum-based separability criteria and isospectral counterexamples"};
  app.require_subcommand(1);

  CommonOptions opts;

  std::string state_spec;
  std::string alphas = "0,0.25,0.5,0.75,1,1.5,2,3,5,inf";
  auto* eval = app.add_subcommand("eval", "Evaluate every criterion on one state");
  eval->add_option("state", state_spec,
                   "werner:d:p | counterpart:d:p | family:r | family-prime:r | rank-counterexample | FILE")
      ->required();
  eval->add_option("--alphas", alphas, "Comma-separated alpha grid ('inf' allowed)");
  add_common(eval, opts);

  std::size_t werner_d = 3;
  std::string grid = "0:1:0.05";
  auto* sweep_werner = app.add_subcommand("sweep-werner", "Werner state vs. separable counterpart over a p grid");
  sweep_werner->add_option("--d", werner_d, "Local dimension")->check(CLI::Range(2, 10));
  sweep_werner->add_option("--grid", grid, "start:stop:step or comma list (empty for none)");
  add_common(sweep_werner, opts);

  std::string family_grid = "0:0.375:0.005";
  auto* sweep_family = app.add_subcommand("sweep-family", "rho(r) vs. phase-gate image rho'(r) over an r grid");
  sweep_family->add_option("--grid", family_grid, "start:stop:step or comma list (empty for none)");
  add_common(sweep_family, opts);

  std::size_t samples = 1000;
  auto* harness = app.add_subcommand("harness", "Random-state audit of the criteria implication chain");
  harness->add_option("--samples", samples, "Reduction-passing samples per dimension pair")->check(CLI::Range(1, 100000));
  add_common(harness, opts);

  std::string write_spec;
  auto* write_state = app.add_subcommand("write-state", "Write a named state as a JSON state file");
  write_state->add_option("state", write_spec, "State spec as for eval")->required();
  add_common(write_state, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    isospec::Report report;
    if (*eval) {
      const auto grid_alphas = isospec::parse_alpha_list(alphas);
      const auto state = isospec::build_state(state_spec, opts.tol);
      report.push_back(isospec::eval_row(state_spec, state, grid_alphas));
    } else if (*sweep_werner) {
      for (double p : isospec::parse_grid(grid)) report.push_back(isospec::werner_sweep_row(werner_d, p, opts.tol));
    } else if (*sweep_family) {
      for (double r : isospec::parse_grid(family_grid)) {
        if (!(std::abs(r) <= isospec::kFamilyRMax + isospec::kFamilyBand)) {
          throw isospec::UsageError("grid point r = " + isospec::format_number(r) + " is outside |r| <= 3/8");
        }
        report.push_back(isospec::family_sweep_row(r, opts.tol));
      }
    } else if (*harness) {
      report = isospec::harness_report({samples, opts.seed, opts.tol});
    } else if (*write_state) {
      const auto state = isospec::build_state(write_spec, opts.tol);
      if (opts.out.empty()) {
        std::cout << isospec::state_to_json(state);
      } else {
        isospec::write_state_file(opts.out, state);
      }
      return 0;
    }
    emit(report, opts);
  } catch (const isospec::InvalidStateError& e) {
    std::cerr << "invalid state: " << e.what() << '\n';
    return kExitInvalidState;
  } catch (const isospec::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}
